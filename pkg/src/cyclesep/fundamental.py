"""Fundamental-cycle separator from interdigitating primal/dual trees.

The edges outside a BFS tree dualize to a spanning tree of the dual graph,
which has maximum degree 3.  Cutting that dual tree in a balanced way picks a
non-tree edge ``uv`` whose fundamental cycle ``S`` has at most
``ceil(2F/3)`` faces on either side.  ``S`` is then re-expressed as two
shortest paths from the lowest common ancestor of ``u`` and ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import breadth_first_order

from .embedding import FaceTable, PlanarEmbedding
from .errors import BadSeedPath, InternalError
from .tree_partition import FreeTree, TreeCut, balanced_edge_cut, cut_bound

__all__ = [
    "BfsTree",
    "Cycle",
    "DualTree",
    "FundamentalCycle",
    "bfs_tree",
    "dual_spanning_tree",
    "find_root_cycle",
]


@dataclass(frozen=True)
class Cycle:
    """Closed vertex sequence; the last vertex connects back to the first.

    A single vertex is the trivial cycle of length 0.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(x) for x in self.vertices))

    def __len__(self) -> int:
        k = len(self.vertices)
        return 0 if k == 1 else k

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if len(vs) < 2:
            return []
        return list(zip(vs, vs[1:] + vs[:1]))

    def half_edges(self, g: PlanarEmbedding) -> np.ndarray:
        """Half-edges along the stored orientation (``-1`` for non-edges)."""
        vs = np.asarray(self.vertices, dtype=np.int64)
        if len(vs) < 2:
            return np.empty(0, dtype=np.int64)
        return g.half_edges(vs, np.roll(vs, -1))


@dataclass(frozen=True)
class BfsTree:
    root: int
    parent: np.ndarray
    rdist: np.ndarray

    def path_to(self, x: int) -> list[int]:
        """Tree path from the root to ``x``."""
        out = [int(x)]
        par = self.parent
        while out[-1] != self.root:
            out.append(int(par[out[-1]]))
        out.reverse()
        return out


def _depths(pred: np.ndarray, root: int) -> np.ndarray:
    # pointer jumping: distance to the root along predecessor links
    anc = pred.copy()
    anc[root] = root
    d = np.ones(len(pred), dtype=np.int64)
    d[root] = 0
    while True:
        nxt = anc[anc]
        if np.array_equal(nxt, anc):
            return d
        d += d[anc]
        anc = nxt


def bfs_tree(
    g: PlanarEmbedding, root: int, seed_paths: Sequence[Sequence[int]] | None = None
) -> BfsTree:
    """Shortest-path tree from ``root`` that contains every seed path.

    Seed paths must start at ``root`` and be shortest paths; their vertices
    keep the path predecessor as parent.
    """
    order, pred = breadth_first_order(g.adjacency_matrix(), root, directed=True)
    if len(order) != g.n:
        raise InternalError("embedding is not connected")
    pred = pred.astype(np.int64)
    rdist = _depths(pred, root)
    pred[root] = -1

    for path in seed_paths or ():
        p = np.asarray(path, dtype=np.int64)
        if len(p) == 0 or p[0] != root:
            raise BadSeedPath("seed path does not start at the root")
        if len(p) > 1 and np.any(g.half_edges(p[:-1], p[1:]) < 0):
            raise BadSeedPath("seed path uses a non-edge")
        if not np.array_equal(rdist[p], np.arange(len(p))):
            raise BadSeedPath("seed path is not a shortest path from the root")
        pred[p[1:]] = p[:-1]

    pred.flags.writeable = False
    rdist.flags.writeable = False
    return BfsTree(root=int(root), parent=pred, rdist=rdist)


# ---------------------------------------------------------------------------
# Dual spanning tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualTree:
    """Spanning tree of the dual plus, per dual edge, its primal half-edge.

    Dual edge ``i`` joins ``left_face[primal[i]]`` and
    ``left_face[twin[primal[i]]]``.
    """

    tree: FreeTree
    primal: np.ndarray


def tree_half_edges(g: PlanarEmbedding, t: BfsTree) -> np.ndarray:
    """Boolean mask of half-edges (both directions) belonging to ``t``."""
    up = g.nbrs == t.parent[g.tail]
    mask = up.copy()
    mask[g.twin[up]] = True
    return mask


def dual_spanning_tree(g: PlanarEmbedding, ft: FaceTable, t: BfsTree) -> DualTree:
    in_tree = tree_half_edges(g, t)
    if int(in_tree.sum()) != 2 * (g.n - 1):
        raise InternalError("BFS parent links do not form a spanning tree")
    idx = np.arange(len(g.nbrs))
    primal = np.flatnonzero(~in_tree & (idx < g.twin))
    m = ft.num_faces
    if len(primal) != m - 1:
        raise InternalError("dual of the non-tree edges is not a spanning tree")
    # row f of the dual tree: dual neighbors across f's non-tree edges
    keep = ~in_tree[ft.face_edges]
    offsets = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(keep.sum(axis=1), out=offsets[1:])
    # m - 1 edges; connectivity is rechecked by the traversal in the cut
    tree = FreeTree(m, offsets, ft.dual_adjacency[keep], 3)
    return DualTree(tree=tree, primal=primal)


# ---------------------------------------------------------------------------
# Fundamental cycle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FundamentalCycle:
    """The cycle ``S = p_u + uv + reverse(p_v)`` and its inside-face labels.

    ``inside_S[f]`` is true for faces on the side of ``S`` that does not
    contain the outer face.
    """

    tree: BfsTree
    uv: tuple[int, int]
    p_u: tuple[int, ...]
    p_v: tuple[int, ...]
    S: Cycle
    inside_S: np.ndarray
    hT: int
    deep: int
    cut: TreeCut

    @property
    def root(self) -> int:
        return self.tree.root

    @property
    def faces_inside(self) -> int:
        return int(self.inside_S.sum())

    @property
    def faces_outside(self) -> int:
        return len(self.inside_S) - self.faces_inside

    @property
    def deep_path(self) -> tuple[int, ...]:
        return self.p_u if self.deep == self.uv[0] else self.p_v

    @property
    def other_path(self) -> tuple[int, ...]:
        return self.p_v if self.deep == self.uv[0] else self.p_u


def find_root_cycle(g: PlanarEmbedding, ft: FaceTable | None = None) -> FundamentalCycle:
    ft = g.faces if ft is None else ft
    t0 = bfs_tree(g, 0)
    dual = dual_spanning_tree(g, ft, t0)
    cut = balanced_edge_cut(dual.tree)

    # primal edge crossed by the cut dual edge, oriented with face y on its left
    fe = ft.face_edges[cut.y]
    k = int(np.flatnonzero(ft.dual_adjacency[cut.y] == cut.x)[0])
    h = int(fe[k])
    u, v = int(g.tail[h]), int(g.nbrs[h])

    # lowest common ancestor by walking up from the deeper endpoint
    par, dist = t0.parent, t0.rdist
    a, b = u, v
    while dist[a] > dist[b]:
        a = int(par[a])
    while dist[b] > dist[a]:
        b = int(par[b])
    while a != b:
        a, b = int(par[a]), int(par[b])
    r = a

    p_u = t0.path_to(u)
    p_v = t0.path_to(v)
    k_r = p_u.index(r)
    p_u = p_u[k_r:]
    p_v = p_v[p_v.index(r):]
    t = bfs_tree(g, r, [p_u, p_v])

    y_mask = np.zeros(ft.num_faces, dtype=bool)
    y_mask[cut.y_side] = True
    inside = ~y_mask if y_mask[ft.outer_face_id] else y_mask
    inside.flags.writeable = False

    bound = cut_bound(ft.num_faces, 3)
    n_in = int(inside.sum())
    if max(n_in, ft.num_faces - n_in) > bound:
        raise InternalError("dual tree cut is not balanced")
    if set(p_u[1:]) & set(p_v[1:]):
        raise InternalError("root paths share a vertex besides the root")

    du, dv = len(p_u) - 1, len(p_v) - 1
    deep = u if du >= dv else v
    S = Cycle(tuple(p_u) + tuple(reversed(p_v[1:])))
    return FundamentalCycle(
        tree=t,
        uv=(u, v),
        p_u=tuple(p_u),
        p_v=tuple(p_v),
        S=S,
        inside_S=inside,
        hT=max(du, dv),
        deep=deep,
        cut=cut,
    )
