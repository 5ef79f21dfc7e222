"""Balanced edge separators in trees of bounded degree.

In a tree with ``m`` nodes and maximum degree ``d`` some edge splits the
tree into two parts of at most ``ceil((1 - 1/d) m)`` nodes each.  Rooting the
tree and walking towards the heaviest child finds it in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import depth_first_order

from .errors import SingleNode

__all__ = ["FreeTree", "TreeCut", "balanced_edge_cut", "cut_bound", "subtree_sizes"]


def cut_bound(m: int, d: int) -> int:
    """``ceil((1 - 1/d) * m)`` in exact integer arithmetic."""
    return -(-(d - 1) * m // d)


@dataclass(frozen=True)
class FreeTree:
    """Unrooted tree on nodes ``0..m-1`` in CSR adjacency form."""

    m: int
    offsets: np.ndarray
    nbrs: np.ndarray
    max_degree: int

    @classmethod
    def from_edges(
        cls, m: int, edges: Iterable[tuple[int, int]], max_degree: int | None = None
    ) -> FreeTree:
        e = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if m < 1:
            raise ValueError("a tree needs at least one node")
        if len(e) != m - 1:
            raise ValueError(f"a tree on {m} nodes has {m - 1} edges, got {len(e)}")
        if len(e) and (e.min() < 0 or e.max() >= m or np.any(e[:, 0] == e[:, 1])):
            raise ValueError("edge endpoint out of range or self-loop")
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        deg = np.bincount(src, minlength=m)
        actual = int(deg.max()) if m > 1 else 0
        d = max(2, actual) if max_degree is None else max_degree
        if d < max(2, actual):
            raise ValueError(f"max_degree {d} below actual maximum degree {actual}")
        tree = cls.from_arrays(m, src, dst, d)
        if m > 1 and len(tree.preorder()[0]) != m:
            raise ValueError("edges do not form a connected tree")
        return tree

    @classmethod
    def from_arrays(cls, m: int, src: np.ndarray, dst: np.ndarray, d: int) -> FreeTree:
        """Tree from both directions of every edge; no validation."""
        order = np.argsort(src, kind="stable")
        offsets = np.zeros(m + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=m), out=offsets[1:])
        return cls(m, offsets, np.ascontiguousarray(dst[order]), d)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for x in range(self.m):
            for y in self.nbrs[self.offsets[x] : self.offsets[x + 1]].tolist():
                if x < y:
                    out.append((x, y))
        return out

    def neighbors(self, x: int) -> np.ndarray:
        return self.nbrs[self.offsets[x] : self.offsets[x + 1]]

    def preorder(self, root: int = 0) -> tuple[np.ndarray, np.ndarray]:
        """DFS preorder and parent array (``-1`` at the root)."""
        mat = csr_matrix(
            (np.ones(len(self.nbrs)), self.nbrs, self.offsets), shape=(self.m, self.m)
        )
        order, pred = depth_first_order(mat, root, directed=True)
        pred = np.where(pred < 0, -1, pred)
        return order, pred


@dataclass(frozen=True)
class TreeCut:
    """Edge ``(x, y)`` with ``y`` the child side when rooted at node 0."""

    x: int
    y: int
    y_side: np.ndarray
    size_x_side: int
    size_y_side: int
    bound: int

    @property
    def worse_side(self) -> int:
        return max(self.size_x_side, self.size_y_side)


def _depths(parent: np.ndarray) -> np.ndarray:
    # pointer jumping; the root points to itself
    idx = np.arange(len(parent))
    anc = np.where(parent < 0, idx, parent)
    d = (parent >= 0).astype(np.int64)
    while True:
        nxt = anc[anc]
        if np.array_equal(nxt, anc):
            return d
        d += d[anc]
        anc = nxt


def _mirror(t: FreeTree) -> FreeTree:
    # same tree with every adjacency row reversed
    deg = np.diff(t.offsets)
    row = np.repeat(np.arange(t.m), deg)
    pos = np.arange(len(t.nbrs))
    flipped = np.empty_like(t.nbrs)
    flipped[t.offsets[:-1][row] + t.offsets[1:][row] - 1 - pos] = t.nbrs
    return FreeTree(t.m, t.offsets, flipped, t.max_degree)


def _two_preorders(t: FreeTree, root: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Preorder, parents, preorder rank and mirrored preorder rank.

    A node with ``a`` proper ancestors, ``l`` nodes left and ``r`` nodes right
    of it has ranks ``a + l`` and ``a + r``, so its subtree holds
    ``m - pre - pre2 + a`` nodes.
    """
    m = t.m
    order, parent = t.preorder(root)
    if len(order) != m:
        raise ValueError("tree is not connected")
    pre = np.empty(m, dtype=np.int64)
    pre[order] = np.arange(m)
    order2, _ = _mirror(t).preorder(root)
    pre2 = np.empty(m, dtype=np.int64)
    pre2[order2] = np.arange(m)
    return order, parent, pre, pre2


def subtree_sizes(t: FreeTree, root: int = 0) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Preorder, parent array and subtree sizes for ``t`` rooted at ``root``."""
    order, parent, pre, pre2 = _two_preorders(t, root)
    size = t.m - pre - pre2 + _depths(parent)
    return order, parent, size


def balanced_edge_cut(t: FreeTree) -> TreeCut:
    """Edge whose removal leaves two parts of at most ``ceil((1-1/d) m)`` nodes.

    Roots the tree at node 0 and walks down, always to the heaviest child
    (smallest id on ties), stopping at the first child light enough.
    """
    if t.m < 2:
        raise SingleNode("a single-node tree has no edge")
    order, par, pre, pre2 = _two_preorders(t, 0)
    bound = cut_bound(t.m, t.max_degree)
    m = t.m

    # children of the k-th node on the walk have k + 1 ancestors
    x, depth = 0, 0
    while True:
        best, best_size = -1, -1
        for c in t.neighbors(x).tolist():
            if c == par[x]:
                continue
            sc = m - int(pre[c]) - int(pre2[c]) + depth + 1
            if sc > best_size or (sc == best_size and c < best):
                best, best_size = c, sc
        if best < 0:
            raise AssertionError("walk reached a leaf without finding a cut")
        if best_size <= bound:
            break
        x = best
        depth += 1

    y = best
    pos = int(pre[y])
    y_side = order[pos : pos + best_size]
    return TreeCut(
        x=int(x),
        y=int(y),
        y_side=y_side,
        size_x_side=t.m - best_size,
        size_y_side=best_size,
        bound=bound,
    )
