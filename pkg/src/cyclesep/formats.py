"""Text formats: ``planar-rot v1`` rotation files and JSON separator reports.

A rotation file looks like::

    planar-rot 1
    n 4
    outer 0 1 2
    v 0: 1 3 2
    v 1: 0 2 3
    v 2: 0 3 1
    v 3: 0 1 2
    coords 0 0.0 0.0

``#`` starts a comment.  ``coords`` lines are optional; when present they
must cover every vertex.
"""

from __future__ import annotations

import io
import json
import re
from pathlib import Path
from typing import TextIO

import numpy as np

from .assembly import SeparatorReport
from .embedding import PlanarEmbedding, build_embedding
from .errors import ParseError

__all__ = [
    "dump_rot",
    "load_rot",
    "parse_rot",
    "read_report",
    "read_rot",
    "serialize_rot",
    "write_report",
    "write_rot",
]

HEADER = "planar-rot 1"
_VERTEX = re.compile(r"^v\s*(\S+?)\s*:(.*)$")


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def load_rot(fh: TextIO) -> PlanarEmbedding:
    n = None
    outer = None
    rotations: dict[int, list[int]] = {}
    coords: dict[int, tuple[float, float]] = {}
    seen_header = False

    for lineno, raw in enumerate(fh, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line.split() != HEADER.split():
                raise ParseError(f"line {lineno}: expected header {HEADER!r}")
            seen_header = True
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: repeated 'n' line")
            n = _int(rest, lineno)
        elif head == "outer":
            toks = rest.split()
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: 'outer' needs three vertex ids")
            outer = tuple(_int(t, lineno) for t in toks)
        elif head == "v" or _VERTEX.match(line):
            m = _VERTEX.match(line)
            if m is None:
                raise ParseError(f"line {lineno}: malformed vertex line")
            v = _int(m.group(1), lineno)
            if v in rotations:
                raise ParseError(f"line {lineno}: vertex {v} listed twice")
            rotations[v] = [_int(t, lineno) for t in m.group(2).split()]
        elif head == "coords":
            toks = rest.split()
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: 'coords' needs an id and two numbers")
            v = _int(toks[0], lineno)
            try:
                coords[v] = (float(toks[1]), float(toks[2]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad coordinate") from None
        else:
            raise ParseError(f"line {lineno}: unknown record {head!r}")

    if not seen_header:
        raise ParseError("empty input")
    if n is None:
        raise ParseError("missing 'n' line")
    if n < 0:
        raise ParseError(f"negative vertex count {n}")
    if set(rotations) != set(range(n)):
        missing = sorted(set(range(n)) - set(rotations))[:5]
        extra = sorted(set(rotations) - set(range(n)))[:5]
        raise ParseError(f"vertex lines do not match n={n} (missing {missing}, extra {extra})")
    xy = None
    if coords:
        if set(coords) != set(range(n)):
            raise ParseError("coords must be given for every vertex or for none")
        xy = np.array([coords[v] for v in range(n)], dtype=float)
    return build_embedding(n, [rotations[v] for v in range(n)], outer, xy)


def parse_rot(text: str) -> PlanarEmbedding:
    return load_rot(io.StringIO(text))


def dump_rot(g: PlanarEmbedding, fh: TextIO) -> None:
    fh.write(f"{HEADER}\nn {g.n}\nouter {' '.join(map(str, g.outer_face))}\n")
    off = g.offsets.tolist()
    nb = g.nbrs.tolist()
    fh.writelines(
        f"v {v}: {' '.join(map(str, nb[off[v] : off[v + 1]]))}\n" for v in range(g.n)
    )
    if g.coords is not None:
        fh.writelines(f"coords {v} {x!r} {y!r}\n" for v, (x, y) in enumerate(g.coords.tolist()))


def serialize_rot(g: PlanarEmbedding) -> str:
    buf = io.StringIO()
    dump_rot(g, buf)
    return buf.getvalue()


def read_rot(path: str | Path) -> PlanarEmbedding:
    with open(path, encoding="utf-8") as fh:
        return load_rot(fh)


def write_rot(g: PlanarEmbedding, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        dump_rot(g, fh)


def write_report(rep: SeparatorReport, path: str | Path | None = None) -> str:
    text = json.dumps(rep.to_dict(), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_report(path: str | Path) -> SeparatorReport:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return SeparatorReport.from_dict(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad report file: {exc}") from None
