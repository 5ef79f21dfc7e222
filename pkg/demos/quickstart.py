"""
Separating a random triangulation
=================================

Generate a random stacked triangulation, find a short cycle that splits its
faces roughly in thirds, and let the independent checker confirm it.
"""

import math

from cyclesep import gen_apollonian, separate, verify_separator

g = gen_apollonian(20_000, seed=1)
print(f"n={g.n}  edges={g.num_edges}  faces={g.num_faces}")

rep = separate(g)
print(f"branch: {rep.branch}")
print(f"length {rep.length}  (sqrt(8n) = {math.sqrt(8 * g.n):.1f})")
print(f"faces   inside/outside: {rep.faces_inside}/{rep.faces_outside}")
print(f"vertices inside/on/outside: {rep.vertices_inside}/{rep.vertices_on}/{rep.vertices_outside}")

# the checker rebuilds faces from the rotations and floods the dual itself
verdict = verify_separator(g, rep)
for name, (ok, msg) in verdict.checks.items():
    print(f"  {'ok  ' if ok else 'FAIL'} {name}: {msg}")
