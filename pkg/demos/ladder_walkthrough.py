"""
When the fundamental cycle is too long
======================================

Random stacked triangulations have small diameter, so the first cycle found
is already short.  A "pillow" (two grids glued along their border) is long
and thin; there the first cycle runs the whole length and the level cycles
take over.  This script walks through each stage on one pillow.
"""

import numpy as np

from cyclesep import find_root_cycle, gen_pillow, verify_separator
from cyclesep.assembly import assemble, decompose
from cyclesep.layers import delta_for, ladder_select, region_face_counts

g = gen_pillow(15, 40, flips=0, seed=0, skew=0.0)
ft = g.faces
F = ft.num_faces
delta = delta_for(g.n)
print(f"n={g.n}  F={F}  delta={delta}  short means length <= {2 * delta + 1}")

# Stage 1: balanced cut of the dual tree and its fundamental cycle S
fc = find_root_cycle(g, ft)
print(f"root {fc.root}, non-tree edge {fc.uv}, |S| = {len(fc.S)}")
print(f"S splits the faces {fc.faces_inside}/{fc.faces_outside}")

# Stage 2: level cycles C_i around the deep endpoint, one per BFS depth
dec = decompose(g, ft, fc)
print(f"deep endpoint at depth {dec.hT}; cycle sizes:")
print("  " + " ".join(str(s) for s in dec.cycle_sizes.tolist()))

# Stage 3: every delta-th level cycle, starting at the lightest offset
lad = ladder_select(dec, delta, g.n)
print(f"offset sums {lad.g.tolist()} -> offset {lad.i0}, budget n/delta = {g.n / delta:.1f}")
print(f"rungs at depths {list(lad.alpha)}")

# Stage 4: faces inside each rung, then pick or stitch a cycle
counts = region_face_counts(ft, lad, dec)
third = np.array([F / 3, 2 * F / 3])
print(f"faces inside rungs: {counts.counts.tolist()}  (middle third {third.round(1).tolist()})")

rep = assemble(g, ft, fc, lad, counts)
print(f"result: {rep.branch}, length {rep.length}, faces {rep.faces_inside}/{rep.faces_outside}")
print("verified:", verify_separator(g, rep).ok)
