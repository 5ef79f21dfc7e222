"""BFS levels of faces, boundary cycles of the low-level regions, light ladder.

The level of a face is the largest BFS depth among its corners.  For each
depth ``i`` below the depth ``hT`` of the deep endpoint, ``C_i`` is the
boundary between faces of level ``<= i`` and the component of faces of level
``> i`` that contains the deep endpoint.  All of its vertices sit at depth
exactly ``i``.

Boundary half-edges are oriented with the low face on the left.  Around a
vertex the incident half-edges alternate between "entering" transitions
(high face on the left) and "leaving" ones (low face on the left); a walk
arriving along ``h`` continues with the first leaving transition found by
turning counterclockwise from ``twin(h)``.  That pairing is computed for all
levels at once, so each cycle costs only its own length to read off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from .embedding import FaceTable, PlanarEmbedding
from .errors import InternalError, LadderEmpty, TraceFailure
from .fundamental import BfsTree, Cycle

__all__ = [
    "Ladder",
    "LevelDecomposition",
    "RegionCounts",
    "boundary_cycles",
    "delta_for",
    "face_levels",
    "ladder_select",
    "offset_sums",
    "region_face_counts",
]


def delta_for(n: int) -> int:
    """``ceil(sqrt(n / 2))`` in exact integer arithmetic."""
    half = -(-n // 2)
    d = math.isqrt(half)
    # ceil(sqrt(n/2)) is the least d with 2 d^2 >= n
    while 2 * d * d < n:
        d += 1
    while d > 0 and 2 * (d - 1) * (d - 1) >= n:
        d -= 1
    return d


def face_levels(ft: FaceTable, t: BfsTree) -> np.ndarray:
    return t.rdist[ft.faces].max(axis=1)


@dataclass(frozen=True)
class LevelDecomposition:
    """Cycles ``C_0 .. C_{hT-1}`` through the deep root path.

    ``C_0`` is the trivial cycle ``(r,)``.  ``half_edges[i]`` has one row per
    edge of ``C_i``: the traced half-edge (low face on its left) and its twin.
    """

    face_level: np.ndarray
    cycles: tuple[Cycle, ...]
    cycle_sizes: np.ndarray
    deep_path: tuple[int, ...]
    half_edges: tuple[np.ndarray, ...]

    @property
    def hT(self) -> int:
        return len(self.deep_path) - 1


def _successors(g: PlanarEmbedding, hl: np.ndarray) -> np.ndarray:
    """Next boundary half-edge for every boundary half-edge, ``-1`` elsewhere."""
    hr = hl[g.twin]
    leaving = hl < hr
    trans = np.flatnonzero(leaving | (hl > hr))
    succ = np.full(len(hl), -1, dtype=np.int64)
    if len(trans) == 0:
        return succ
    owner = g.tail[trans]
    k = np.arange(len(trans))
    first = np.ones(len(trans), dtype=bool)
    first[1:] = owner[1:] != owner[:-1]
    last = np.ones(len(trans), dtype=bool)
    last[:-1] = first[1:]
    start = np.maximum.accumulate(np.where(first, k, 0))
    nxt = trans[np.where(last, start, k + 1)]

    entering = ~leaving[trans]
    if np.any(leaving[nxt[entering]] == False):  # noqa: E712
        raise TraceFailure("boundary transitions do not alternate around a vertex")
    succ[g.twin[trans[entering]]] = nxt[entering]
    return succ


def _start_half_edge(g: PlanarEmbedding, hl: np.ndarray, i: int, x: int, y: int) -> int:
    # first half-edge counterclockwise after x->y whose left face is low
    lo, hi = int(g.offsets[x]), int(g.offsets[x + 1])
    ring = g.nbrs[lo:hi]
    k = int(np.flatnonzero(ring == y)[0])
    low = hl[lo:hi] <= i
    order = (np.arange(1, hi - lo + 1) + k) % (hi - lo)
    hit = np.flatnonzero(low[order])
    if len(hit) == 0:
        raise TraceFailure(f"no level-{i} boundary at vertex {x}")
    return lo + int(order[hit[0]])


def boundary_cycles(
    g: PlanarEmbedding, ft: FaceTable, levels: np.ndarray, t: BfsTree, deep: int
) -> LevelDecomposition:
    hT = int(t.rdist[deep])
    path = tuple(t.path_to(deep))
    hl = levels[ft.left_face]
    succ = _successors(g, hl)
    tail, twin, rdist = g.tail, g.twin, t.rdist

    cycles = [Cycle((t.root,))]
    halves = [np.empty((0, 2), dtype=np.int64)]
    for i in range(1, hT):
        start = _start_half_edge(g, hl, i, path[i], path[i + 1])
        if succ[start] < 0:
            raise TraceFailure(f"start half-edge of level {i} is not on a boundary")
        trail = [start]
        h = int(succ[start])
        limit = g.n
        while h != start:
            if h < 0 or len(trail) > limit:
                raise TraceFailure(f"level-{i} walk does not close")
            trail.append(h)
            h = int(succ[h])
        hs = np.asarray(trail, dtype=np.int64)
        vs = tail[hs]
        if len(np.unique(vs)) != len(vs):
            raise TraceFailure(f"level-{i} boundary walk repeats a vertex")
        if np.any(rdist[vs] != i):
            raise TraceFailure(f"level-{i} boundary has a vertex at another depth")
        cycles.append(Cycle(vs.tolist()))
        halves.append(np.stack([hs, twin[hs]], axis=1))

    sizes = np.array([len(c.vertices) for c in cycles], dtype=np.int64)
    levels = levels.copy()
    levels.flags.writeable = False
    return LevelDecomposition(
        face_level=levels,
        cycles=tuple(cycles),
        cycle_sizes=sizes,
        deep_path=path,
        half_edges=tuple(halves),
    )


# ---------------------------------------------------------------------------
# Ladder
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ladder:
    """Rungs ``A_0 = (r,)``, ``A_j = C_{alpha_j}`` and ``A_k = (Deep,)``.

    ``A_0`` lies innermost: faces "inside" a rung are those on the root side.
    """

    delta: int
    i0: int
    alpha: tuple[int, ...]
    rungs: tuple[Cycle, ...]
    half_edges: tuple[np.ndarray, ...]
    g: np.ndarray

    @property
    def k(self) -> int:
        return len(self.rungs) - 1


def offset_sums(sizes: np.ndarray, delta: int) -> np.ndarray:
    """``g(i) = sum_j |C_{i + j delta}|`` for every offset ``0 <= i < delta``."""
    return np.array([int(sizes[i::delta].sum()) for i in range(delta)], dtype=np.int64)


def ladder_select(dec: LevelDecomposition, delta: int, n: int) -> Ladder:
    hT = dec.hT
    if hT <= delta:
        raise InternalError(f"ladder needs hT > delta, got hT={hT}, delta={delta}")
    g = offset_sums(dec.cycle_sizes, delta)
    if not np.any(g > 0):
        raise LadderEmpty("every offset sum is zero")
    i0 = int(np.argmin(g))
    if g[i0] <= 0:
        raise LadderEmpty(f"cycles at offset {i0} are all empty")
    if g[i0] * delta > n:
        raise InternalError(f"offset sum {g[i0]} exceeds n/delta")

    alpha = tuple(range(i0, hT, delta))
    root, deep = dec.deep_path[0], dec.deep_path[-1]
    rungs = [Cycle((root,))]
    halves = [np.empty((0, 2), dtype=np.int64)]
    for a in alpha:
        rungs.append(dec.cycles[a])
        halves.append(dec.half_edges[a])
    rungs.append(Cycle((deep,)))
    halves.append(np.empty((0, 2), dtype=np.int64))
    g.flags.writeable = False
    return Ladder(
        delta=delta,
        i0=i0,
        alpha=alpha,
        rungs=tuple(rungs),
        half_edges=tuple(halves),
        g=g,
    )


@dataclass(frozen=True)
class RegionCounts:
    """``counts[j]`` faces inside rung ``j``; ``ring[f]`` is the ``j`` with
    ``f`` between rungs ``j`` and ``j + 1``."""

    counts: np.ndarray
    ring: np.ndarray


def region_face_counts(ft: FaceTable, ladder: Ladder, dec: LevelDecomposition) -> RegionCounts:
    """Per-rung inside-face counts from one component labelling of the dual.

    Dual edges crossing any rung are removed; every component then touches
    some rung, and the faces left of a rung's traced half-edges lie in the
    ring just inside it.
    """
    m = ft.num_faces
    k = ladder.k
    real = [j for j in range(1, k) if len(ladder.half_edges[j])]
    blocked = np.zeros(ft.left_face.shape[0], dtype=bool)
    for j in real:
        blocked[ladder.half_edges[j].ravel()] = True
    _, comp = connected_components(
        ft.dual_matrix(blocked), directed=True, connection="strong"
    )
    ring_of_comp = np.full(int(comp.max()) + 1, -1, dtype=np.int64)
    for j in real:
        h = ladder.half_edges[j]
        for side, ring in ((h[:, 0], j - 1), (h[:, 1], j)):
            cs = np.unique(comp[ft.left_face[side]])
            prev = ring_of_comp[cs]
            if np.any((prev >= 0) & (prev != ring)):
                raise InternalError(f"rung {j} does not separate its neighbouring rings")
            ring_of_comp[cs] = ring
    if not real:
        ring_of_comp[:] = 0
    ring = ring_of_comp[comp]
    if np.any(ring < 0):
        raise InternalError("a dual component touches no rung")
    counts = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(np.bincount(ring, minlength=k)[:k], out=counts[1:])
    if counts[-1] != m:
        raise InternalError("ring sizes do not add up to the face count")
    ring.flags.writeable = False
    counts.flags.writeable = False
    return RegionCounts(counts=counts, ring=ring)
