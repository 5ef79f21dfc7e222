"""Random maximal planar graph generators.

Generators work on an oriented face list and convert to rotations once at
the end, which keeps the per-step work constant.  Vertices are then
renumbered in breadth-first order from vertex 0, so that neighbours get
nearby ids; with insertion-order ids every pass over the graph is a random
memory access.
"""

from __future__ import annotations

import numpy as np

from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

from .embedding import PlanarEmbedding, from_faces
from .errors import TooSmall

__all__ = ["gen_apollonian", "gen_flipped", "gen_nested", "gen_pillow", "k4"]

# K4 with 0, 1, 2 on the outer triangle and 3 in the middle; row 0 is the
# outer face, traversed with the unbounded region on its left.
_K4_FACES = [(0, 2, 1), (0, 1, 3), (1, 2, 3), (2, 0, 3)]
OUTER = (0, 1, 2)


def k4() -> PlanarEmbedding:
    return from_faces(4, _K4_FACES, OUTER)


def _apollonian_faces(n: int, rng: np.random.Generator) -> tuple[list, list, list]:
    fa, fb, fc = (list(col) for col in zip(*_K4_FACES))
    steps = n - 4
    # bounded faces before step t: 3 + 2t, stored at indices 1 .. 3 + 2t
    picks = 1 + np.floor(rng.random(steps) * (3 + 2 * np.arange(steps))).astype(np.int64)
    for t, f in enumerate(picks.tolist()):
        x = 4 + t
        a, b, c = fa[f], fb[f], fc[f]
        fc[f] = x
        fa.append(b)
        fb.append(c)
        fc.append(x)
        fa.append(c)
        fb.append(a)
        fc.append(x)
    return fa, fb, fc


def gen_apollonian(n: int, seed: int | None = 0) -> PlanarEmbedding:
    """Random stacked triangulation (random Apollonian network) on ``n`` vertices.

    Starts from K4 and repeatedly inserts a degree-3 vertex into a uniformly
    random bounded face.  Deterministic for a fixed ``seed``.
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    fa, fb, fc = _apollonian_faces(n, rng)
    return _finish(n, _stack(fa, fb, fc), OUTER)


def gen_flipped(n: int, flips: int, seed: int | None = 0) -> PlanarEmbedding:
    """``gen_apollonian(n, seed)`` followed by ``flips`` random edge-flip attempts.

    An attempt picks a uniformly random edge not on the outer face and
    replaces it by the other diagonal of its quadrilateral, unless that
    diagonal is already an edge (then the attempt is skipped).
    """
    if n < 4:
        raise TooSmall(f"need n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    fa, fb, fc = _apollonian_faces(n, rng)
    if flips > 0:
        _flip(fa, fb, fc, n, flips, rng)
    return _finish(n, _stack(fa, fb, fc), OUTER)


def gen_nested(
    layers: int, width: int, flips: int = 0, seed: int | None = 0
) -> PlanarEmbedding:
    """Concentric ``width``-cycles joined by randomly triangulated strips.

    Vertex 0 sits inside the innermost cycle and the apex ``n - 1`` outside
    the outermost one, so ``n = layers * width + 2`` and the graph diameter
    grows linearly with ``layers``.  Optional random flips as in
    :func:`gen_flipped`.
    """
    if layers < 1 or width < 3:
        raise TooSmall("need layers >= 1 and width >= 3")
    n = layers * width + 2
    apex = n - 1
    rng = np.random.default_rng(seed)

    def ring(k: int, j: int) -> int:
        return 1 + k * width + j % width

    fa: list[int] = []
    fb: list[int] = []
    fc: list[int] = []

    def add(a: int, b: int, c: int) -> None:
        fa.append(a)
        fb.append(b)
        fc.append(c)

    last = layers - 1
    # outer face first so it keeps index 0
    add(ring(last, 0), apex, ring(last, 1))
    for j in range(1, width):
        add(ring(last, j), apex, ring(last, j + 1))
    for j in range(width):
        add(0, ring(0, j), ring(0, j + 1))
    diag = rng.random((max(layers - 1, 0), width)) < 0.5
    for k in range(layers - 1):
        for j in range(width):
            a, b = ring(k, j), ring(k, j + 1)
            c, d = ring(k + 1, j), ring(k + 1, j + 1)
            if diag[k, j]:
                add(a, c, d)
                add(a, d, b)
            else:
                add(a, c, b)
                add(c, d, b)
    if flips > 0:
        _flip(fa, fb, fc, n, flips, rng)
    return _finish(n, _stack(fa, fb, fc), (fa[0], fb[0], fc[0]))


def gen_pillow(
    rows: int,
    cols: int,
    flips: int = 0,
    seed: int | None = 0,
    skew: float = 0.5,
) -> PlanarEmbedding:
    """Two randomly triangulated ``rows x cols`` grids glued along their border.

    Long thin pillows have long shortest paths between the short ends, which
    makes the fundamental cycle from a corner long.  Grid vertex ``(i, j)`` of
    the top sheet is ``i * cols + j``; the bottom sheet reuses the border
    vertices.  Each cell gets the diagonal through its ``(i, j)`` corner with
    probability ``skew``; low values stretch distances from vertex 0.
    Optional random flips as in :func:`gen_flipped`.
    """
    if rows < 3 or cols < 3:
        raise TooSmall("need rows >= 3 and cols >= 3")
    rng = np.random.default_rng(seed)
    top = np.arange(rows * cols, dtype=np.int64).reshape(rows, cols)
    bottom = top.copy()
    inner = (rows - 2) * (cols - 2)
    bottom[1:-1, 1:-1] = rows * cols + np.arange(inner).reshape(rows - 2, cols - 2)
    n = rows * cols + inner

    fa: list[int] = []
    fb: list[int] = []
    fc: list[int] = []
    for sheet, mirrored in ((top, False), (bottom, True)):
        diag = rng.random((rows - 1, cols - 1)) < skew
        # in corner cells the diagonal must avoid joining two border
        # vertices, or both sheets could add the same edge
        diag[0, 0] = diag[-1, -1] = True
        diag[0, -1] = diag[-1, 0] = False
        for i in range(rows - 1):
            for j in range(cols - 1):
                a, b = int(sheet[i, j]), int(sheet[i, j + 1])
                c, d = int(sheet[i + 1, j + 1]), int(sheet[i + 1, j])
                tris = ((a, b, c), (a, c, d)) if diag[i, j] else ((a, b, d), (b, c, d))
                for x, y, z in tris:
                    if mirrored:
                        y, z = z, y
                    fa.append(x)
                    fb.append(y)
                    fc.append(z)
    if flips > 0:
        _flip(fa, fb, fc, n, flips, rng)
    return _finish(n, _stack(fa, fb, fc), (fa[0], fb[0], fc[0]))


def _flip(fa: list, fb: list, fc: list, n: int, flips: int, rng) -> None:
    """Random diagonal flips in place; face 0 (the outer face) is kept."""
    left: dict[int, int] = {}
    for f, tri in enumerate(zip(fa, fb, fc)):
        for k in range(3):
            left[tri[k] * n + tri[(k + 1) % 3]] = f
    edges = [key for key in left if key // n < key % n]
    picks = rng.integers(0, len(edges), size=flips).tolist()

    for e in picks:
        key = edges[e]
        a, b = divmod(key, n)
        f1 = left[key]
        f2 = left[b * n + a]
        if f1 == 0 or f2 == 0:
            continue
        c = _third(fa[f1], fb[f1], fc[f1], a, b)
        d = _third(fa[f2], fb[f2], fc[f2], a, b)
        if c * n + d in left:
            continue
        # (a, b, c) + (b, a, d)  ->  (c, a, d) + (d, b, c)
        fa[f1], fb[f1], fc[f1] = c, a, d
        fa[f2], fb[f2], fc[f2] = d, b, c
        del left[key], left[b * n + a]
        left[a * n + d] = f1
        left[d * n + c] = f1
        left[b * n + c] = f2
        left[c * n + d] = f2
        edges[e] = c * n + d if c < d else d * n + c


def _third(x: int, y: int, z: int, a: int, b: int) -> int:
    for w in (x, y, z):
        if w != a and w != b:
            return w
    raise AssertionError("degenerate face")


def _stack(fa: list, fb: list, fc: list) -> np.ndarray:
    return np.stack([np.array(fa, dtype=np.int64), np.array(fb, dtype=np.int64),
                     np.array(fc, dtype=np.int64)], axis=1)


def _finish(n: int, faces: np.ndarray, outer) -> PlanarEmbedding:
    src = faces.ravel()
    dst = faces[:, [1, 2, 0]].ravel()
    adj = csr_matrix((np.ones(len(src)), (src, dst)), shape=(n, n))
    order = breadth_first_order(adj, 0, directed=True, return_predecessors=False)
    new = np.empty(n, dtype=np.int64)
    new[order] = np.arange(n)
    return from_faces(n, new[faces], [int(new[x]) for x in outer])
