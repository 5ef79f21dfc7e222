"""Timing sweep over generated instances.

Each measurement covers validation of the raw rotation arrays plus the whole
separator pipeline; generation is excluded.  One untimed warm-up run precedes
the sweep.
"""

from __future__ import annotations

import csv
import gc
import math
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .assembly import SeparatorReport, separate
from .embedding import PlanarEmbedding, from_csr
from .generators import gen_apollonian, gen_flipped

__all__ = ["BenchRow", "FIELDS", "run_bench", "time_pipeline", "write_csv"]

FIELDS = ("n", "seed", "branch", "length", "sqrt8n", "wall_time")


@dataclass(frozen=True)
class BenchRow:
    n: int
    seed: int
    branch: str
    length: int
    sqrt8n: float
    wall_time: float


def time_pipeline(g: PlanarEmbedding) -> tuple[SeparatorReport, float]:
    gc.collect()
    start = time.perf_counter()
    h = from_csr(g.n, g.offsets, g.nbrs, g.outer_face)
    rep = separate(h)
    return rep, time.perf_counter() - start


def _instance(kind: str, n: int, seed: int, flips: int | None) -> PlanarEmbedding:
    if kind == "apollonian":
        return gen_apollonian(n, seed)
    if kind == "flipped":
        return gen_flipped(n, n if flips is None else flips, seed)
    raise ValueError(f"unknown instance kind {kind!r}")


def run_bench(
    sizes: Sequence[int],
    seeds: Iterable[int],
    kind: str = "apollonian",
    flips: int | None = None,
) -> list[BenchRow]:
    seeds = list(seeds)
    time_pipeline(_instance(kind, min(sizes), 0, flips))  # warm-up
    rows = []
    for n in sizes:
        for seed in seeds:
            rep, dt = time_pipeline(_instance(kind, n, seed, flips))
            rows.append(BenchRow(n, seed, rep.branch, rep.length, math.sqrt(8 * n), dt))
    rows.sort(key=lambda r: (r.n, r.seed))
    return rows


def write_csv(rows: Sequence[BenchRow], path: str | Path | None = None, fh=None) -> None:
    close = fh is None
    if fh is None:
        fh = open(path, "w", newline="", encoding="utf-8")
    try:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        for r in rows:
            w.writerow(asdict(r))
    finally:
        if close:
            fh.close()
