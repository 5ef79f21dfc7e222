import os

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cyclesep import from_faces, gen_apollonian, gen_flipped, gen_nested, gen_pillow
from cyclesep.tree_partition import FreeTree

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (rows, cols, flips, seed, skew) -> branch reached by the separator
PINNED_PILLOWS = {
    "B1": (10, 10, 0, 0, 0.0),
    "B2": (20, 20, 0, 13, 0.1),
    "rung": (15, 40, 0, 0, 0.0),
    "C-combined": (7, 37, 10, 984, 0.1),
}

# K4 plus a vertex stacked into face (1, 2, 3)
STACKED5_FACES = [(0, 2, 1), (0, 1, 3), (2, 0, 3), (1, 2, 4), (2, 3, 4), (3, 1, 4)]


def stacked5():
    return from_faces(5, STACKED5_FACES, (0, 1, 2))


@st.composite
def embeddings(draw, max_n=400):
    kind = draw(st.sampled_from(["apollonian", "flipped", "nested", "pillow"]))
    seed = draw(st.integers(0, 2**31 - 1))
    if kind == "apollonian":
        return gen_apollonian(draw(st.integers(4, max_n)), seed)
    if kind == "flipped":
        n = draw(st.integers(4, max_n))
        return gen_flipped(n, draw(st.integers(0, 3 * n)), seed)
    if kind == "nested":
        layers = draw(st.integers(1, 12))
        width = draw(st.integers(3, 12))
        return gen_nested(layers, width, draw(st.integers(0, 40)), seed)
    rows = draw(st.integers(3, 14))
    cols = draw(st.integers(3, 30))
    skew = draw(st.sampled_from([0.0, 0.1, 0.5]))
    return gen_pillow(rows, cols, draw(st.integers(0, 30)), seed, skew)


def random_tree(m, d, rng):
    """Random labelled tree on ``m`` nodes with every degree at most ``d``."""
    perm = rng.permutation(m)
    deg = np.zeros(m, dtype=int)
    edges = []
    for i in range(1, m):
        j = int(rng.choice(np.flatnonzero(deg[:i] < d)))
        deg[i] += 1
        deg[j] += 1
        edges.append((int(perm[i]), int(perm[j])))
    return FreeTree.from_edges(m, edges, d)


# one line per acceptance criterion, repeated at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
