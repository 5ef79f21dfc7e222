"""Independent checker for separator reports and tree cuts.

Nothing here reuses the face tracing, BFS or counting code of the main
pipeline.  Faces are rebuilt from rotation corners (consecutive neighbours
``a, b`` around ``v`` span the face ``{v, a, b}``), and sides are found by
flooding the dual from the outer face without crossing cycle edges.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .assembly import SeparatorReport
from .embedding import PlanarEmbedding
from .errors import NotSimple, SingleNode
from .fundamental import Cycle
from .tree_partition import FreeTree

__all__ = [
    "MUTATIONS",
    "Verdict",
    "brute_force_tree_cut",
    "flood_fill_faces",
    "mutate_report",
    "verify_separator",
]


@dataclass(frozen=True)
class _Faces:
    tri: np.ndarray  # sorted vertex triples, one row per face
    edge_key: np.ndarray  # (F, 3) undirected keys of the face sides
    outer: int
    keys: frozenset


def _oracle_faces(g: PlanarEmbedding) -> _Faces:
    n = g.n
    off = np.asarray(g.offsets)
    nb = np.asarray(g.nbrs)
    deg = np.diff(off)
    v = np.repeat(np.arange(n), deg)
    pos = np.arange(len(nb)) - off[v]
    nxt = off[v] + (pos + 1) % deg[v]
    tri = np.sort(np.stack([v, nb, nb[nxt]], axis=1), axis=1)
    # each face appears once per corner; keep one copy, in lexicographic order
    tri = tri[np.lexsort(tri.T[::-1])]
    keep = np.ones(len(tri), dtype=bool)
    keep[1:] = np.any(tri[1:] != tri[:-1], axis=1)
    tri = tri[keep]
    a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
    edge_key = np.stack([a * n + b, b * n + c, a * n + c], axis=1)
    outer_set = sorted(int(x) for x in g.outer_face)
    hits = np.flatnonzero(np.all(tri == outer_set, axis=1))
    if len(hits) != 1:
        raise NotSimple("outer face not found among the faces")
    lo, hi = np.minimum(v, nb), np.maximum(v, nb)
    keys = frozenset((lo * n + hi).tolist())
    return _Faces(tri=tri, edge_key=edge_key, outer=int(hits[0]), keys=keys)


def _cycle_keys(g: PlanarEmbedding, fs: _Faces, c: Cycle) -> set[int]:
    vs = c.vertices
    n = g.n
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotSimple("cycle repeats a vertex or has fewer than 3 vertices")
    if any(x < 0 or x >= n for x in vs):
        raise NotSimple("cycle vertex out of range")
    out = set()
    for x, y in zip(vs, vs[1:] + vs[:1]):
        key = min(x, y) * n + max(x, y)
        if key not in fs.keys:
            raise NotSimple(f"({x}, {y}) is not an edge")
        out.add(key)
    return out


def _flood(fs: _Faces, blocked: set[int]) -> np.ndarray:
    """Boolean mask of faces reachable from the outer face."""
    F = len(fs.tri)
    flat = fs.edge_key.ravel()
    face = np.repeat(np.arange(F), 3)
    order = np.argsort(flat, kind="stable")
    sk, sf = flat[order], face[order]
    # every edge borders exactly two faces, so sorted keys pair up
    a, b = sf[0::2], sf[1::2]
    if not np.array_equal(sk[0::2], sk[1::2]):
        raise NotSimple("an edge does not border exactly two faces")
    keep = ~np.isin(sk[0::2], np.fromiter(blocked, dtype=np.int64, count=len(blocked)))
    a, b = a[keep], b[keep]
    m = coo_matrix((np.ones(len(a)), (a, b)), shape=(F, F)).tocsr()
    _, lab = connected_components(m, directed=False)
    return lab == lab[fs.outer]


def flood_fill_faces(g: PlanarEmbedding, c: Cycle) -> tuple[set[int], set[int]]:
    """Inside and outside faces of ``c``, as sets of sorted vertex triples.

    Returning vertex triples rather than face ids keeps the result
    independent of any face numbering.
    """
    fs = _oracle_faces(g)
    outside = _flood(fs, _cycle_keys(g, fs, c))
    tris = [tuple(t) for t in fs.tri.tolist()]
    return (
        {t for t, o in zip(tris, outside) if not o},
        {t for t, o in zip(tris, outside) if o},
    )


@dataclass
class Verdict:
    checks: dict[str, tuple[bool, str]] = field(default_factory=dict)

    def record(self, name: str, ok: bool, msg: str = "") -> None:
        self.checks[name] = (bool(ok), msg)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    @property
    def first_failure(self) -> str | None:
        for name, (ok, msg) in self.checks.items():
            if not ok:
                return f"{name}: {msg}"
        return None


def verify_separator(g: PlanarEmbedding, rep: SeparatorReport) -> Verdict:
    """Itemized checks (a) simplicity, (b) face counts, (c) face balance,
    (d) vertex counts and balance, (e) length."""
    out = Verdict()
    n = g.n
    fs = _oracle_faces(g)
    F = len(fs.tri)
    c = rep.cycle
    L = len(c.vertices)

    try:
        blocked = _cycle_keys(g, fs, c)
    except NotSimple as exc:
        out.record("a_simple", False, str(exc))
        return out
    out.record(
        "a_simple",
        rep.length == L and rep.vertices_on == L and rep.n == n,
        f"length {rep.length}, vertices_on {rep.vertices_on}, n {rep.n}; cycle has {L}",
    )

    outside = _flood(fs, blocked)
    f_out = int(outside.sum())
    f_in = F - f_out
    out.record(
        "b_face_counts",
        rep.faces_inside == f_in and rep.faces_outside == f_out,
        f"reported {rep.faces_inside}/{rep.faces_outside}, flood fill {f_in}/{f_out}",
    )

    bound = -(-2 * F // 3)
    out.record("c_face_balance", max(f_in, f_out) <= bound, f"sides {f_in}/{f_out}, bound {bound}")

    on = set(c.vertices)
    enclosed = set(np.unique(fs.tri[~outside]).tolist()) - on
    v_in = len(enclosed)
    v_out = n - L - v_in
    diff = f_in - L
    formula = diff // 2 + 1 if diff % 2 == 0 else None
    out.record(
        "d_vertex_counts",
        rep.vertices_inside == v_in
        and rep.vertices_outside == v_out
        and formula == v_in
        and 3 * max(v_in, v_out) <= 2 * n,
        f"reported {rep.vertices_inside}/{rep.vertices_outside}, direct {v_in}/{v_out}, "
        f"formula {formula}",
    )

    out.record(
        "e_length",
        L <= 4 or (L - 4) ** 2 <= 8 * n,
        f"length {L}, bound {math.sqrt(8 * n) + 4:.3f}",
    )
    return out


# ---------------------------------------------------------------------------
# Fault injection
# ---------------------------------------------------------------------------

MUTATIONS = (
    "drop_vertex",
    "duplicate_vertex",
    "swap_face_counts",
    "length_off_by_one",
    "faces_inside_off_by_one",
    "vertices_inside_off_by_one",
    "vertices_outside_off_by_one",
    "wrong_vertices_on",
    "non_neighbor_vertex",
    "unbalanced_facial_triangle",
)


def mutate_report(
    g: PlanarEmbedding, rep: SeparatorReport, kind: str, rng: np.random.Generator
) -> SeparatorReport | None:
    """A corrupted copy of ``rep``, or ``None`` if ``kind`` does not apply."""
    vs = list(rep.cycle.vertices)
    L = len(vs)
    k = int(rng.integers(L))
    if kind == "drop_vertex":
        return replace(rep, cycle=Cycle(tuple(vs[:k] + vs[k + 1 :])))
    if kind == "duplicate_vertex":
        return replace(rep, cycle=Cycle(tuple(vs[: k + 1] + vs[k:])))
    if kind == "swap_face_counts":
        if rep.faces_inside == rep.faces_outside:
            return None
        return replace(rep, faces_inside=rep.faces_outside, faces_outside=rep.faces_inside)
    if kind == "length_off_by_one":
        return replace(rep, length=rep.length + (1 if rng.random() < 0.5 else -1))
    if kind == "faces_inside_off_by_one":
        return replace(rep, faces_inside=rep.faces_inside + 1, faces_outside=rep.faces_outside - 1)
    if kind == "vertices_inside_off_by_one":
        return replace(rep, vertices_inside=rep.vertices_inside + 1)
    if kind == "vertices_outside_off_by_one":
        return replace(rep, vertices_outside=rep.vertices_outside - 1)
    if kind == "wrong_vertices_on":
        return replace(rep, vertices_on=rep.vertices_on + 1)
    if kind == "non_neighbor_vertex":
        nb_prev = set(g.rotation(vs[k - 1]))
        pool = [x for x in range(g.n) if x not in nb_prev and x not in vs]
        if not pool:
            return None
        vs[k] = pool[int(rng.integers(len(pool)))]
        return replace(rep, cycle=Cycle(tuple(vs)))
    if kind == "unbalanced_facial_triangle":
        outer = {int(x) for x in g.outer_face}
        a = int(rng.integers(g.n))
        rot = g.rotation(a)
        j = int(rng.integers(len(rot)))
        tri = (a, rot[j], rot[(j + 1) % len(rot)])
        if set(tri) == outer:
            tri = (a, rot[(j + 1) % len(rot)], rot[(j + 2) % len(rot)])
        F = rep.num_faces
        if F - 1 <= -(-2 * F // 3):
            return None  # tiny graphs: a facial triangle is balanced
        # honest counts for a bounded facial triangle
        return SeparatorReport(
            n=g.n,
            cycle=Cycle(tri),
            faces_inside=1,
            faces_outside=F - 1,
            vertices_inside=0,
            vertices_outside=g.n - 3,
            vertices_on=3,
            length=3,
            branch=rep.branch,
        )
    raise ValueError(f"unknown mutation {kind!r}")


# ---------------------------------------------------------------------------
# Tree cuts
# ---------------------------------------------------------------------------


def brute_force_tree_cut(t: FreeTree) -> tuple[set[tuple[int, int]], int]:
    """All edges meeting the balance bound, and the best achievable worse side."""
    m = t.m
    if m < 2:
        raise SingleNode("a single-node tree has no edge")
    adj: list[list[int]] = [[] for _ in range(m)]
    edges = []
    for x in range(m):
        for y in t.nbrs[t.offsets[x] : t.offsets[x + 1]].tolist():
            adj[x].append(y)
            if x < y:
                edges.append((x, y))
    d = t.max_degree
    bound = -(-(d - 1) * m // d)
    feasible = set()
    best = m
    for x, y in edges:
        seen = {x}
        todo = deque([x])
        while todo:
            a = todo.popleft()
            for b in adj[a]:
                if b not in seen and not (a == x and b == y):
                    seen.add(b)
                    todo.append(b)
        worse = max(len(seen), m - len(seen))
        best = min(best, worse)
        if worse <= bound:
            feasible.add((x, y))
    return feasible, best
