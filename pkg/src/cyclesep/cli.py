"""``cyclesep`` command line.

Exit codes: 0 success, 1 I/O or layout failure, 2 unreadable or invalid
input, 3 verification failure, 4 broken internal guarantee.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import assembly, formats, layers, oracle, render
from .bench import run_bench, write_csv
from .errors import EmbeddingError, InternalError, ParseError, SeparatorError
from .fundamental import find_root_cycle
from .generators import gen_apollonian, gen_flipped, gen_nested, gen_pillow
from .tree_partition import FreeTree, balanced_edge_cut

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _default_seed() -> int:
    raw = os.environ.get("PSEP_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"PSEP_SEED must be an integer, got {raw!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    if args.kind == "apollonian":
        g = gen_apollonian(args.n, seed)
    elif args.kind == "flipped":
        g = gen_flipped(args.n, args.n if args.flips is None else args.flips, seed)
    elif args.kind == "nested":
        g = gen_nested(args.layers, args.width, args.flips or 0, seed)
    else:
        g = gen_pillow(args.rows, args.cols, args.flips or 0, seed, args.skew)
    _emit(formats.serialize_rot(g), args.out)
    return EXIT_OK


def cmd_separate(args) -> int:
    g = formats.read_rot(args.graph)
    rep = assembly.separate(g)
    _emit(formats.write_report(rep), args.out)
    if args.svg:
        render.write_svg(args.svg, render.render_svg(g, rep, method=args.layout))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = formats.read_rot(args.graph)
    rep = formats.read_report(args.report)
    verdict = oracle.verify_separator(g, rep)
    for name, (ok, msg) in verdict.checks.items():
        print(f"{'PASS' if ok else 'FAIL'} {name}: {msg}")
    if not verdict.ok:
        print(f"first failure: {verdict.first_failure}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_layers(args) -> int:
    g = formats.read_rot(args.graph)
    ft = g.faces
    fc = find_root_cycle(g, ft)
    dec = assembly.decompose(g, ft, fc)
    delta = layers.delta_for(g.n)
    lines = ["level,size"]
    lines += [f"{i},{int(s)}" for i, s in enumerate(dec.cycle_sizes.tolist())]
    _emit("\n".join(lines) + "\n", args.out)
    ladder = "yes" if len(fc.S) > 2 * delta + 1 else "no"
    print(f"# hT={dec.hT} delta={delta} |S|={len(fc.S)} ladder={ladder}", file=sys.stderr)
    return EXIT_OK


def cmd_root_cycle(args) -> int:
    g = formats.read_rot(args.graph)
    fc = find_root_cycle(g)
    out = {
        "root": fc.root,
        "uv": list(fc.uv),
        "deep": fc.deep,
        "hT": fc.hT,
        "length": len(fc.S),
        "cycle": list(fc.S.vertices),
        "faces_inside": fc.faces_inside,
        "faces_outside": fc.faces_outside,
    }
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


def _read_tree(path: str, m: int | None, d: int | None) -> FreeTree:
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 2:
                raise ParseError(f"line {lineno}: expected 'x y'")
            try:
                edges.append((int(line[0]), int(line[1])))
            except ValueError:
                raise ParseError(f"line {lineno}: expected two integers") from None
    if m is None:
        m = 1 + max((max(e) for e in edges), default=0)
    try:
        return FreeTree.from_edges(m, edges, d)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_tree_cut(args) -> int:
    t = _read_tree(args.edges, args.m, args.degree)
    cut = balanced_edge_cut(t)
    out = {
        "edge": [cut.x, cut.y],
        "sizes": [cut.size_x_side, cut.size_y_side],
        "bound": cut.bound,
        "y_side": sorted(int(x) for x in cut.y_side),
    }
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    base = _default_seed() if args.seed is None else args.seed
    rows = run_bench(args.sizes, range(base, base + args.seeds), args.kind, args.flips)
    if args.out is None or args.out == "-":
        write_csv(rows, fh=sys.stdout)
    else:
        write_csv(rows, args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    g = formats.read_rot(args.graph)
    rep = formats.read_report(args.report) if args.report else None
    render.write_svg(args.out, render.render_svg(g, rep, method=args.layout))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclesep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a random maximal planar graph")
    s.add_argument("kind", choices=["apollonian", "flipped", "nested", "pillow"])
    s.add_argument("-n", "--n", type=int, default=1000)
    s.add_argument("--flips", type=int, default=None, help="flip attempts (flipped: default n)")
    s.add_argument("--layers", type=int, default=20)
    s.add_argument("--width", type=int, default=10)
    s.add_argument("--rows", type=int, default=10)
    s.add_argument("--cols", type=int, default=40)
    s.add_argument("--skew", type=float, default=0.5)
    s.add_argument("--seed", type=int, default=None, help="default: $PSEP_SEED or 0")
    s.add_argument("-o", "--out", default=None)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("separate", help="compute a separator, print the JSON report")
    s.add_argument("graph")
    s.add_argument("-o", "--out", default=None)
    s.add_argument("--svg", default=None)
    s.add_argument("--layout", choices=["iterate", "solve"], default="iterate")
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("verify", help="check a report with the independent oracle")
    s.add_argument("graph")
    s.add_argument("report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("layers", help="per-level boundary cycle sizes as CSV")
    s.add_argument("graph")
    s.add_argument("-o", "--out", default=None)
    s.set_defaults(func=cmd_layers)

    s = sub.add_parser("root-cycle", help="fundamental cycle of the first phase as JSON")
    s.add_argument("graph")
    s.add_argument("-o", "--out", default=None)
    s.set_defaults(func=cmd_root_cycle)

    s = sub.add_parser("tree-cut", help="balanced edge cut of a tree given as an edge list")
    s.add_argument("edges")
    s.add_argument("--m", type=int, default=None, help="node count (default: max id + 1)")
    s.add_argument("--degree", type=int, default=None, help="max degree d (default: actual)")
    s.add_argument("-o", "--out", default=None)
    s.set_defaults(func=cmd_tree_cut)

    s = sub.add_parser("bench", help="timing sweep as CSV")
    s.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000])
    s.add_argument("--seeds", type=int, default=3, help="seeds per size")
    s.add_argument("--seed", type=int, default=None, help="first seed (default: $PSEP_SEED or 0)")
    s.add_argument("--kind", choices=["apollonian", "flipped"], default="apollonian")
    s.add_argument("--flips", type=int, default=None)
    s.add_argument("-o", "--out", default=None)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("render", help="draw a graph and optional separator as SVG")
    s.add_argument("graph")
    s.add_argument("--report", default=None)
    s.add_argument("-o", "--out", required=True)
    s.add_argument("--layout", choices=["iterate", "solve"], default="iterate")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmbeddingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SeparatorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
