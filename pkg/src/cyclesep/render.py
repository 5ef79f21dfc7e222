"""SVG drawing of an embedding and, optionally, a separator.

Without stored coordinates the layout is barycentric: the outer face is pinned
to a triangle and every other vertex is moved to the average of its
neighbours until the largest move drops below ``tol``.  Plain averaging mixes
slowly on long thin graphs; ``method="solve"`` computes the same fixed point
with a sparse direct solve instead.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import quoteattr

import numpy as np
from scipy.sparse import diags
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import spsolve

from .assembly import SeparatorReport
from .embedding import PlanarEmbedding
from .errors import NoConvergence, NotSimple

__all__ = ["barycentric_layout", "inside_faces", "render_svg", "write_svg"]

SIZE = 800.0
MARGIN = 20.0


def barycentric_layout(
    g: PlanarEmbedding,
    tol: float = 1e-6,
    max_rounds: int = 10_000,
    method: str = "iterate",
) -> np.ndarray:
    ft = g.faces
    a, b, c = (int(x) for x in ft.faces[ft.outer_face_id])
    # the traced outer face runs clockwise in the drawing
    pinned = {a: (0.0, 0.0), b: (0.5, np.sqrt(3) / 2), c: (1.0, 0.0)}
    n = g.n
    xy = np.tile([0.5, np.sqrt(3) / 6], (n, 1))
    free = np.ones(n, dtype=bool)
    for v, p in pinned.items():
        xy[v] = p
        free[v] = False

    adj = g.adjacency_matrix()
    if method == "solve":
        idx = np.flatnonzero(free)
        lap = diags(np.diff(g.offsets).astype(float)) - adj
        rhs = -(lap[idx][:, ~free] @ xy[~free])
        xy[idx] = spsolve(lap[idx][:, idx].tocsc(), rhs).reshape(-1, 2)
        return xy
    if method != "iterate":
        raise ValueError(f"unknown layout method {method!r}")
    avg = diags(1.0 / np.diff(g.offsets)) @ adj
    for _ in range(max_rounds):
        nxt = avg @ xy
        move = np.abs(nxt[free] - xy[free]).max(initial=0.0)
        xy[free] = nxt[free]
        if move < tol:
            return xy
    raise NoConvergence(f"layout still moving after {max_rounds} rounds")


def inside_faces(g: PlanarEmbedding, rep: SeparatorReport) -> np.ndarray:
    """Faces on the side of the report's cycle away from the outer face."""
    ft = g.faces
    hs = rep.cycle.half_edges(g)
    if len(hs) == 0 or np.any(hs < 0):
        raise NotSimple("report cycle uses a non-edge")
    blocked = np.zeros(len(g.nbrs), dtype=bool)
    blocked[hs] = True
    blocked[g.twin[hs]] = True
    _, lab = connected_components(ft.dual_matrix(blocked), directed=False)
    return lab != lab[ft.outer_face_id]


def render_svg(
    g: PlanarEmbedding,
    rep: SeparatorReport | None = None,
    coords: np.ndarray | None = None,
    method: str = "iterate",
) -> str:
    xy = coords if coords is not None else g.coords
    if xy is None:
        xy = barycentric_layout(g, method=method)
    xy = np.asarray(xy, dtype=float)
    lo = xy.min(axis=0)
    span = float((xy.max(axis=0) - lo).max()) or 1.0
    pts = (xy - lo) / span * (SIZE - 2 * MARGIN) + MARGIN
    pts[:, 1] = SIZE - pts[:, 1]  # y up

    def fmt(v: int) -> str:
        return f"{pts[v, 0]:.2f},{pts[v, 1]:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:g}" height="{SIZE:g}" '
        f'viewBox="0 0 {SIZE:g} {SIZE:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    sep_edges: set[tuple[int, int]] = set()
    if rep is not None:
        ft = g.faces
        for f in np.flatnonzero(inside_faces(g, rep)).tolist():
            x, y, z = ft.faces[f].tolist()
            out.append(
                f'<polygon class="inside-face" points="{fmt(x)} {fmt(y)} {fmt(z)}" '
                f'fill="#fbd3d3" stroke="none"/>'
            )
        sep_edges = {(min(x, y), max(x, y)) for x, y in rep.cycle.edges()}

    tail, head = g.tail, g.nbrs
    for h in np.flatnonzero(tail < head).tolist():
        u, v = int(tail[h]), int(head[h])
        if (u, v) in sep_edges:
            continue
        out.append(_line("edge", u, v, pts, "#999999", 1.0))
    for u, v in sorted(sep_edges):
        out.append(_line("separator", u, v, pts, "#d62728", 3.0))
    if rep is not None:
        out.append(f"<title>{quoteattr(rep.branch)[1:-1]} separator, length {rep.length}</title>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _line(cls: str, u: int, v: int, pts: np.ndarray, color: str, width: float) -> str:
    return (
        f'<line class="{cls}" data-u="{u}" data-v="{v}" '
        f'x1="{pts[u, 0]:.2f}" y1="{pts[u, 1]:.2f}" x2="{pts[v, 0]:.2f}" y2="{pts[v, 1]:.2f}" '
        f'stroke="{color}" stroke-width="{width:g}"/>'
    )


def write_svg(path: str | Path, svg: str) -> None:
    Path(path).write_text(svg, encoding="utf-8")
