"""
Running time and cycle length as n grows
========================================

Times validation plus separation (generation excluded) over a few sizes and
prints the median per size.  Quadrupling n should roughly quadruple the time.
"""

import math
import statistics
from itertools import groupby

from cyclesep.bench import run_bench

sizes = [25_000, 100_000, 400_000]
rows = run_bench(sizes, seeds=range(5), kind="apollonian")

prev = None
print(f"{'n':>8} {'median s':>9} {'ratio':>6} {'max len':>8} {'sqrt(8n)':>9}")
for n, grp in groupby(rows, key=lambda r: r.n):
    grp = list(grp)
    med = statistics.median(r.wall_time for r in grp)
    ratio = f"{med / prev:6.2f}" if prev else " " * 6
    print(f"{n:>8} {med:9.3f} {ratio} {max(r.length for r in grp):>8} {math.sqrt(8 * n):9.1f}")
    prev = med
