"""Combine the fundamental cycle and the ladder into the final separator.

A short ``S`` is returned as is.  Otherwise some rung may already be
balanced; failing that, the ring between two consecutive rungs straddles
the middle third and ``S`` cuts it into two halves, and one of three cycles
stitched from rung arcs and pieces of ``S`` is balanced.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import FaceTable, PlanarEmbedding
from .errors import DegenerateIntersection, InternalContradiction, NotSimple, ParityViolation
from .fundamental import Cycle, FundamentalCycle, find_root_cycle
from .layers import (
    Ladder,
    LevelDecomposition,
    RegionCounts,
    boundary_cycles,
    delta_for,
    face_levels,
    ladder_select,
    region_face_counts,
)
from .tree_partition import cut_bound

__all__ = [
    "BRANCHES",
    "RingSplit",
    "RungSplit",
    "SeparatorReport",
    "assemble",
    "report_for",
    "separate",
    "split_rung_at_S",
    "vertices_inside",
]

BRANCHES = ("S-direct", "rung", "B1", "B2", "C-combined")


def vertices_inside(faces_in: int, cycle_len: int) -> int:
    """Vertices strictly inside a simple cycle of a triangulation."""
    diff = faces_in - cycle_len
    if diff % 2:
        raise ParityViolation(f"faces {faces_in} and length {cycle_len} differ by an odd number")
    return diff // 2 + 1


@dataclass(frozen=True)
class SeparatorReport:
    """Separator cycle with exact side counts; the outer face is outside."""

    n: int
    cycle: Cycle
    faces_inside: int
    faces_outside: int
    vertices_inside: int
    vertices_outside: int
    vertices_on: int
    length: int
    branch: str

    @property
    def num_faces(self) -> int:
        return self.faces_inside + self.faces_outside

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "faces": self.num_faces,
            "cycle": list(self.cycle.vertices),
            "length": self.length,
            "faces_inside": self.faces_inside,
            "faces_outside": self.faces_outside,
            "vertices_inside": self.vertices_inside,
            "vertices_outside": self.vertices_outside,
            "vertices_on": self.vertices_on,
            "branch": self.branch,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SeparatorReport:
        if d.get("schema") != 1:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(
            n=int(d["n"]),
            cycle=Cycle(tuple(d["cycle"])),
            faces_inside=int(d["faces_inside"]),
            faces_outside=int(d["faces_outside"]),
            vertices_inside=int(d["vertices_inside"]),
            vertices_outside=int(d["vertices_outside"]),
            vertices_on=int(d["vertices_on"]),
            length=int(d["length"]),
            branch=str(d["branch"]),
        )


def report_for(
    g: PlanarEmbedding, ft: FaceTable, cycle: Cycle, side: np.ndarray, branch: str
) -> SeparatorReport:
    """Report for ``cycle`` given the faces on one of its sides."""
    vs = cycle.vertices
    if len(set(vs)) != len(vs) or len(vs) < 3:
        raise NotSimple(f"{branch} cycle is not a simple cycle")
    F = ft.num_faces
    count = int(np.count_nonzero(side))
    inside = F - count if side[ft.outer_face_id] else count
    length = len(vs)
    v_in = vertices_inside(inside, length)
    return SeparatorReport(
        n=g.n,
        cycle=cycle,
        faces_inside=inside,
        faces_outside=F - inside,
        vertices_inside=v_in,
        vertices_outside=g.n - length - v_in,
        vertices_on=length,
        length=length,
        branch=branch,
    )


# ---------------------------------------------------------------------------
# Splitting rungs at S
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RungSplit:
    """Rung arcs from ``p`` (on ``p_u``) to ``q`` (on ``p_v``).

    ``inner`` runs on the ``inside_S`` side, ``outer`` on the other.  Both are
    ``(x,)`` for a trivial rung ``(x,)``.
    """

    inner: tuple[int, ...]
    outer: tuple[int, ...]
    p: int
    q: int


def split_rung_at_S(
    g: PlanarEmbedding, A: Cycle, fc: FundamentalCycle, inside_S: np.ndarray | None = None
) -> RungSplit:
    inside_S = fc.inside_S if inside_S is None else inside_S
    vs = A.vertices
    if A.is_trivial:
        return RungSplit(inner=vs, outer=vs, p=vs[0], q=vs[0])
    alpha = int(fc.tree.rdist[vs[0]])
    if alpha >= len(fc.p_u) or alpha >= len(fc.p_v):
        raise DegenerateIntersection(f"rung at depth {alpha} misses one side of S")
    p, q = fc.p_u[alpha], fc.p_v[alpha]
    common = set(vs) & set(fc.S.vertices)
    if common != {p, q} or p == q:
        raise DegenerateIntersection(f"rung at depth {alpha} meets S in {sorted(common)}")

    ip, iq = vs.index(p), vs.index(q)
    k = len(vs)
    fwd = tuple(vs[(ip + s) % k] for s in range((iq - ip) % k + 1))
    back = tuple(vs[(ip - s) % k] for s in range((ip - iq) % k + 1))
    h = g.half_edge(fwd[0], fwd[1])
    if inside_S[g.faces.left_face[h]]:
        return RungSplit(inner=fwd, outer=back, p=p, q=q)
    return RungSplit(inner=back, outer=fwd, p=p, q=q)


@dataclass(frozen=True)
class RingSplit:
    """The ring between rungs ``i`` and ``i + 1`` cut in two by ``S``."""

    i: int
    low: RungSplit
    high: RungSplit
    seg_p: tuple[int, ...]
    seg_q: tuple[int, ...]
    faces_r1: int
    faces_r2: int


def _segment(S: Cycle, a: int, b: int) -> tuple[int, ...]:
    # forward along the stored orientation of S, from a to b inclusive
    vs = S.vertices
    i, j = vs.index(a), vs.index(b)
    k = len(vs)
    return tuple(vs[(i + s) % k] for s in range((j - i) % k + 1))


def _closed(*pieces: tuple[int, ...]) -> Cycle:
    # consecutive pieces share their end vertices; so do the last and first
    out: list[int] = []
    for piece in pieces:
        out.extend(piece[:-1])
    return Cycle(tuple(out))


def _rev(x: tuple[int, ...]) -> tuple[int, ...]:
    return x[::-1]


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


def assemble(
    g: PlanarEmbedding,
    ft: FaceTable,
    fc: FundamentalCycle,
    ladder: Ladder | None,
    counts: RegionCounts | None,
) -> SeparatorReport:
    """Pick the first applicable construction and report it.

    ``ladder`` and ``counts`` may be ``None`` only when ``S`` is short enough
    to be returned directly.
    """
    F = ft.num_faces
    delta = delta_for(g.n)
    if len(fc.S) <= 2 * delta + 1:
        return report_for(g, ft, fc.S, fc.inside_S, "S-direct")
    if ladder is None or counts is None:
        raise InternalContradiction("long S needs a ladder")

    Fj = counts.counts.tolist()
    k = ladder.k
    lo, hi = F // 3, cut_bound(F, 3)
    for j in range(1, k):
        if lo <= Fj[j] <= hi and not ladder.rungs[j].is_trivial:
            return report_for(g, ft, ladder.rungs[j], counts.ring < j, "rung")

    # 3 F_i < F < ... < 2F < 3 F_{i+1}
    i = next((i for i in range(k) if 3 * Fj[i] < F and 3 * Fj[i + 1] > 2 * F), None)
    if i is None:
        raise InternalContradiction("no ring straddles the middle third")
    split = ring_split(g, fc, ladder, counts, i)
    low, high = split.low, split.high
    in_ring = counts.ring == i

    if 3 * split.faces_r1 >= F:
        cyc = _closed(low.inner, _rev(split.seg_q), _rev(high.inner), _rev(split.seg_p))
        return report_for(g, ft, cyc, in_ring & fc.inside_S, "B1")
    if 3 * split.faces_r2 >= F:
        cyc = _closed(low.outer, _rev(split.seg_q), _rev(high.outer), _rev(split.seg_p))
        return report_for(g, ft, cyc, in_ring & ~fc.inside_S, "B2")

    total = Fj[i] + split.faces_r1
    if not (F < 3 * total < 2 * F):
        raise InternalContradiction("combined cycle is not balanced")
    cyc = _closed(low.outer, _rev(split.seg_q), _rev(high.inner), _rev(split.seg_p))
    side = (counts.ring < i) | (in_ring & fc.inside_S)
    return report_for(g, ft, cyc, side, "C-combined")


def ring_split(
    g: PlanarEmbedding, fc: FundamentalCycle, ladder: Ladder, counts: RegionCounts, i: int
) -> RingSplit:
    low = split_rung_at_S(g, ladder.rungs[i], fc)
    high = split_rung_at_S(g, ladder.rungs[i + 1], fc)
    in_ring = counts.ring == i
    r1 = int(np.count_nonzero(in_ring & fc.inside_S))
    r2 = int(np.count_nonzero(in_ring)) - r1
    Fj = counts.counts
    if Fj[i] + r1 + r2 != Fj[i + 1]:
        raise InternalContradiction("ring halves do not add up")
    return RingSplit(
        i=i,
        low=low,
        high=high,
        seg_p=_segment(fc.S, low.p, high.p),
        seg_q=_segment(fc.S, high.q, low.q),
        faces_r1=r1,
        faces_r2=r2,
    )


def separate(g: PlanarEmbedding) -> SeparatorReport:
    """Short simple-cycle separator of a maximal planar graph."""
    ft = g.faces
    fc = find_root_cycle(g, ft)
    if len(fc.S) <= 2 * delta_for(g.n) + 1:
        return assemble(g, ft, fc, None, None)
    dec = decompose(g, ft, fc)
    ladder = ladder_select(dec, delta_for(g.n), g.n)
    counts = region_face_counts(ft, ladder, dec)
    return assemble(g, ft, fc, ladder, counts)


def decompose(g: PlanarEmbedding, ft: FaceTable, fc: FundamentalCycle) -> LevelDecomposition:
    levels = face_levels(ft, fc.tree)
    return boundary_cycles(g, ft, levels, fc.tree, fc.deep)
