"""Rotation-system representation of embedded maximal planar graphs.

Rotations are stored CSR style: the counterclockwise neighbor cycle of
vertex ``v`` is ``nbrs[offsets[v]:offsets[v + 1]]``.  Every slot of ``nbrs``
is a half-edge (directed edge) whose tail is the owning vertex, so half-edge
ids are plain array positions and all per-edge data lives in flat arrays.

Faces are traced with the rule: from ``u -> v`` continue with ``v -> w``
where ``w`` precedes ``u`` in the counterclockwise rotation of ``v``.  Under
this rule each face lies to the left of its half-edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from .errors import (
    BadOuterFace,
    Disconnected,
    EmbeddingError,
    EulerViolation,
    NotSymmetric,
    NotTriangulated,
    TooSmall,
)

__all__ = [
    "FaceTable",
    "PlanarEmbedding",
    "build_embedding",
    "enumerate_faces",
    "from_csr",
    "from_faces",
]


def _csgraph(n: int, offsets: np.ndarray, nbrs: np.ndarray) -> csr_matrix:
    # float64 data avoids a conversion copy inside scipy.sparse.csgraph
    return csr_matrix((np.ones(len(nbrs)), nbrs, offsets), shape=(n, n))


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class FaceTable:
    """Triangular faces of an embedding and the dual graph.

    ``faces[f]`` lists the vertices of face ``f`` in traversal order and
    ``face_edges[f]`` the matching half-edges, so ``face_edges[f, k]`` runs
    from ``faces[f, k]`` to ``faces[f, (k + 1) % 3]``.  ``dual_adjacency[f, k]``
    is the face across ``face_edges[f, k]``.
    """

    faces: np.ndarray
    face_edges: np.ndarray
    left_face: np.ndarray
    dual_adjacency: np.ndarray
    outer_face_id: int

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def dual_matrix(self, blocked: np.ndarray | None = None) -> csr_matrix:
        """Dual graph as a sparse matrix, optionally without some dual edges.

        ``blocked`` is a boolean mask over half-edges; the dual edge crossing
        a blocked half-edge (or its twin) is dropped.
        """
        m = self.num_faces
        rows = np.repeat(np.arange(m), 3)
        cols = self.dual_adjacency.ravel()
        if blocked is not None:
            keep = ~blocked[self.face_edges.ravel()]
            rows, cols = rows[keep], cols[keep]
        data = np.ones(len(rows), dtype=np.int8)
        return csr_matrix((data, (rows, cols)), shape=(m, m))


@dataclass(frozen=True, eq=False)
class PlanarEmbedding:
    """A validated embedded maximal planar graph.

    Construct through :func:`build_embedding`, :func:`from_csr` or
    :func:`from_faces`; those check every invariant eagerly.
    """

    n: int
    offsets: np.ndarray
    nbrs: np.ndarray
    outer_face: tuple[int, int, int]
    coords: np.ndarray | None = None
    # derived per-half-edge arrays
    tail: np.ndarray = field(default=None, repr=False)
    twin: np.ndarray = field(default=None, repr=False)
    next_half: np.ndarray = field(default=None, repr=False)
    _keys: np.ndarray = field(default=None, repr=False)
    _key_order: np.ndarray = field(default=None, repr=False)
    _face_table: FaceTable = field(default=None, repr=False)

    # -- basic counts -------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.nbrs) // 2

    @property
    def num_faces(self) -> int:
        return 2 * self.n - 4

    @property
    def head(self) -> np.ndarray:
        return self.nbrs

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def rotation(self, v: int) -> list[int]:
        return self.nbrs[self.offsets[v] : self.offsets[v + 1]].tolist()

    @property
    def rotations(self) -> list[list[int]]:
        flat = self.nbrs.tolist()
        off = self.offsets.tolist()
        return [flat[off[v] : off[v + 1]] for v in range(self.n)]

    # -- lookups ------------------------------------------------------------

    def half_edges(self, us, vs) -> np.ndarray:
        """Vectorized half-edge lookup; ``-1`` where ``u -> v`` is not an edge."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        q = np.minimum(us, vs) * self.n + np.maximum(us, vs)
        pos = np.searchsorted(self._keys, q) & ~1
        pos = np.minimum(pos, len(self._keys) - 2)
        found = self._keys[pos] == q
        h = self._key_order[pos]
        h = np.where(self.tail[h] == us, h, self._key_order[pos + 1])
        return np.where(found, h, -1)

    def half_edge(self, u: int, v: int) -> int:
        return int(self.half_edges([u], [v])[0])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return self.half_edge(u, v) >= 0

    def adjacency_matrix(self) -> csr_matrix:
        return _csgraph(self.n, self.offsets, self.nbrs)

    @property
    def faces(self) -> FaceTable:
        return self._face_table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarEmbedding):
            return NotImplemented
        if self.n != other.n or tuple(self.outer_face) != tuple(other.outer_face):
            return False
        if not (
            np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.nbrs, other.nbrs)
        ):
            return False
        if (self.coords is None) != (other.coords is None):
            return False
        return self.coords is None or np.array_equal(
            self.coords, other.coords, equal_nan=True
        )

    __hash__ = None  # type: ignore[assignment]


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def _trace(n, offsets, nbrs):
    """Twin and next-half-edge arrays, plus sorted undirected keys for lookup.

    Sorting by undirected key puts the two half-edges of every edge next to
    each other, which yields twins and the symmetry check in one pass.
    """
    m = len(nbrs)
    tail = np.repeat(np.arange(n, dtype=np.int64), np.diff(offsets))
    if m and (nbrs.min() < 0 or nbrs.max() >= n):
        raise EmbeddingError("neighbor id out of range")
    if np.any(nbrs == tail):
        raise NotSymmetric("self-loop in rotation")
    if m % 2:
        raise NotSymmetric("odd number of rotation entries")

    ukeys = np.minimum(tail, nbrs) * n + np.maximum(tail, nbrs)
    order = np.argsort(ukeys)
    skeys = ukeys[order]
    first, second = order[0::2], order[1::2]
    if not np.array_equal(skeys[0::2], skeys[1::2]) or np.any(
        skeys[1:-1:2] == skeys[2::2]
    ):
        raise NotSymmetric("some edge is not listed exactly once at each endpoint")
    if np.any(tail[first] == tail[second]):
        raise NotSymmetric("repeated neighbor within a rotation")
    twin = np.empty(m, dtype=np.int64)
    twin[first] = second
    twin[second] = first

    # predecessor of each half-edge within its tail's rotation
    idx = np.arange(m, dtype=np.int64)
    prev = idx - 1
    is_first = offsets[:-1][tail] == idx
    prev[is_first] = offsets[1:][tail[is_first]] - 1
    next_half = prev[twin]
    return tail, twin, next_half, skeys, order


def _face_table(n, offsets, nbrs, tail, twin, next_half) -> tuple[np.ndarray, ...]:
    n2 = next_half[next_half]
    n3 = next_half[n2]
    idx = np.arange(len(nbrs), dtype=np.int64)
    if np.any(n3 != idx) or np.any(next_half == idx):
        raise NotTriangulated("a traced face walk does not have length 3")
    rep = np.minimum(np.minimum(idx, next_half), n2)
    is_rep = rep == idx
    face_of_rep = np.cumsum(is_rep) - 1
    left_face = face_of_rep[rep]
    reps = np.flatnonzero(is_rep)
    face_edges = np.stack([reps, next_half[reps], n2[reps]], axis=1)
    faces = tail[face_edges]
    dual = left_face[twin[face_edges]]
    return faces, face_edges, left_face, dual


def from_csr(
    n: int,
    offsets,
    nbrs,
    outer: Sequence[int] | None = None,
    coords: np.ndarray | None = None,
) -> PlanarEmbedding:
    """Validate CSR rotation arrays and wrap them in a :class:`PlanarEmbedding`."""
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)
    nbrs = np.ascontiguousarray(nbrs, dtype=np.int64)
    if len(offsets) != n + 1 or offsets[0] != 0 or offsets[-1] != len(nbrs):
        raise EmbeddingError("malformed rotation offsets")
    if np.any(np.diff(offsets) < 0):
        raise EmbeddingError("malformed rotation offsets")
    if np.any(np.diff(offsets) == 0):
        raise Disconnected("isolated vertex")

    tail, twin, next_half, skeys, order = _trace(n, offsets, nbrs)

    reached = breadth_first_order(_csgraph(n, offsets, nbrs), 0, directed=True,
                                  return_predecessors=False)
    if len(reached) != n:
        raise Disconnected(f"only {len(reached)} of {n} vertices reachable from 0")

    faces, face_edges, left_face, dual = _face_table(
        n, offsets, nbrs, tail, twin, next_half
    )
    n_edges = len(nbrs) // 2
    if n_edges != 3 * n - 6 or len(faces) != 2 * n - 4:
        raise EulerViolation(
            f"E={n_edges}, F={len(faces)}; expected E={3 * n - 6}, F={2 * n - 4}"
        )

    if outer is None:
        outer_id = int(left_face[0])
        outer_t = tuple(int(x) for x in faces[outer_id])
    else:
        outer_t = tuple(int(x) for x in outer)
        outer_id = _locate_face(n, tail, skeys, order, left_face, faces, outer_t)

    if coords is not None:
        coords = _frozen(np.asarray(coords, dtype=float).reshape(n, 2))

    table = FaceTable(
        faces=_frozen(faces),
        face_edges=_frozen(face_edges),
        left_face=_frozen(left_face),
        dual_adjacency=_frozen(dual),
        outer_face_id=outer_id,
    )
    return PlanarEmbedding(
        n=n,
        offsets=_frozen(offsets),
        nbrs=_frozen(nbrs),
        outer_face=outer_t,
        coords=coords,
        tail=_frozen(tail),
        twin=_frozen(twin),
        next_half=_frozen(next_half),
        _keys=_frozen(skeys),
        _key_order=_frozen(order),
        _face_table=table,
    )


def _locate_face(n, tail, skeys, order, left_face, faces, triple) -> int:
    if len(triple) != 3 or len(set(triple)) != 3:
        raise BadOuterFace(f"outer face must be three distinct vertices: {triple}")
    a, b, c = triple
    if not all(0 <= x < n for x in triple):
        raise BadOuterFace(f"outer face vertex out of range: {triple}")
    key = min(a, b) * n + max(a, b)
    pos = int(np.searchsorted(skeys, key))
    if pos < len(skeys) and skeys[pos] == key:
        for h in order[pos : pos + 2]:
            f = int(left_face[h])
            if c in faces[f]:
                return f
    raise BadOuterFace(f"{triple} is not a face of the embedding")


def build_embedding(
    n: int,
    rotations: Sequence[Sequence[int]],
    outer: Sequence[int] | None = None,
    coords: np.ndarray | None = None,
) -> PlanarEmbedding:
    """Validated embedding from per-vertex counterclockwise neighbor lists.

    ``outer`` may be any ordering of the outer face's vertices; when omitted
    the face left of vertex 0's first half-edge is used.
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    if len(rotations) != n:
        raise EmbeddingError(f"expected {n} rotations, got {len(rotations)}")
    lengths = np.fromiter((len(r) for r in rotations), dtype=np.int64, count=n)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    nbrs = np.fromiter(
        (x for r in rotations for x in r), dtype=np.int64, count=int(offsets[-1])
    )
    return from_csr(n, offsets, nbrs, outer, coords)


def from_faces(n: int, faces, outer: Sequence[int] | None = None) -> PlanarEmbedding:
    """Embedding from a consistently oriented list of all ``2n - 4`` faces.

    Each row ``(a, b, c)`` is a face traversed with its interior on the left,
    which makes ``c`` the counterclockwise successor of ``b`` around ``a``.
    Rotations start at each vertex's smallest neighbor id.
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    f = np.asarray(faces, dtype=np.int64).reshape(-1, 3)
    if len(f) == 0 or f.min() < 0 or f.max() >= n:
        raise EmbeddingError("face vertex out of range")
    # corner e = 3*face + k is the half-edge f[k] -> f[k+1]
    v = f.ravel()
    a = f[:, [1, 2, 0]].ravel()
    m = len(v)
    ukeys = np.minimum(v, a) * n + np.maximum(v, a)
    order = np.argsort(ukeys)
    skeys = ukeys[order]
    first, second = order[0::2], order[1::2]
    if (
        m % 2
        or not np.array_equal(skeys[0::2], skeys[1::2])
        or np.any(skeys[1:-1:2] == skeys[2::2])
        or np.any(v[first] == v[second])
    ):
        raise NotSymmetric("face list does not use every edge once per direction")
    twin = np.empty(m, dtype=np.int64)
    twin[first] = second
    twin[second] = first
    # successor of a around v is reached through the twin of b -> v
    idx = np.arange(m, dtype=np.int64)
    succ = twin[idx - idx % 3 + (idx + 2) % 3]

    mina = np.full(n, n, dtype=np.int64)
    np.minimum.at(mina, v, a)
    is_head = a == mina[v]
    deg = np.bincount(v, minlength=n)
    if np.any(deg == 0):
        raise Disconnected("isolated vertex")

    # list ranking by pointer jumping: each corner's distance to the corner
    # whose successor wraps around to the head
    nxt = succ.copy()
    terminal = is_head[succ]
    nxt[terminal] = idx[terminal]
    dist = (~terminal).astype(np.int64)
    for _ in range(m.bit_length() + 1):
        nn = nxt[nxt]
        if np.array_equal(nn, nxt):
            break
        dist += dist[nxt]
        nxt = nn
    else:
        raise NotTriangulated("rotation around some vertex is not a single cycle")
    rank = (deg[v] - 1) - dist
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=offsets[1:])
    slot = offsets[:-1][v] + rank
    if np.any(rank < 0) or np.any(np.bincount(slot, minlength=m) != 1):
        raise NotTriangulated("rotation around some vertex is not a single cycle")
    nbrs = np.empty(m, dtype=np.int64)
    nbrs[slot] = a
    return from_csr(n, offsets, nbrs, outer)


def enumerate_faces(g: PlanarEmbedding) -> FaceTable:
    """Face table of ``g`` (computed once during validation)."""
    return g.faces
