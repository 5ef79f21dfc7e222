"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The sweep over large generated instances runs once per module; criteria 1-4
read its records.  Independent checks (frontier BFS, offset sums, flood fill)
are written here or in the oracle, never borrowed from the pipeline.
"""

import math
import statistics
import time

import numpy as np
import pytest

from cyclesep import (
    find_root_cycle,
    gen_apollonian,
    gen_flipped,
    gen_nested,
    gen_pillow,
    separate,
    verify_separator,
)
from cyclesep.assembly import decompose, report_for
from cyclesep.bench import time_pipeline
from cyclesep.layers import delta_for, ladder_select, region_face_counts
from cyclesep.oracle import MUTATIONS, brute_force_tree_cut, flood_fill_faces, mutate_report
from cyclesep.tree_partition import balanced_edge_cut, cut_bound

from conftest import ACCEPTANCE_LINES, PINNED_PILLOWS, random_tree

SIZES = (1_000, 10_000, 100_000)
SEEDS = range(20)


def announce(capsys, k, ok, detail):
    line = f"criterion {k} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print(f"\n{line}")


def frontier_bfs(g, src):
    """Level-synchronous BFS over the raw rotation arrays."""
    off, nb = np.asarray(g.offsets), np.asarray(g.nbrs)
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[src] = 0
    front = np.array([src])
    d = 0
    while len(front):
        d += 1
        lens = off[front + 1] - off[front]
        starts = np.repeat(off[front] - np.concatenate([[0], np.cumsum(lens)[:-1]]), lens)
        cand = nb[starts + np.arange(lens.sum())]
        cand = np.unique(cand[dist[cand] < 0])
        dist[cand] = d
        front = cand
    return dist


def root_cycle_record(g, fc):
    """Criterion 4 measurements for one instance."""
    F = g.num_faces
    bound = -(-2 * F // 3)
    # the oracle recounts both sides of S
    s_rep = report_for(g, g.faces, fc.S, fc.inside_S, "S-direct")
    s_counts = verify_separator(g, s_rep).checks["b_face_counts"][0]
    s_balance = max(fc.faces_inside, fc.faces_outside) <= bound
    eu = {frozenset(e) for e in zip(fc.p_u, fc.p_u[1:])}
    ev = {frozenset(e) for e in zip(fc.p_v, fc.p_v[1:])}
    depths = np.array_equal(fc.tree.rdist, frontier_bfs(g, fc.root))
    return {"s_counts": s_counts, "s_balance": s_balance, "disjoint": not eu & ev,
            "depths": depths}


@pytest.fixture(scope="module")
def sweep():
    records = []
    pipeline_time = 0.0
    for kind in ("apollonian", "flipped"):
        for n in SIZES:
            for seed in SEEDS:
                g = gen_apollonian(n, seed) if kind == "apollonian" else gen_flipped(n, n, seed)
                t0 = time.perf_counter()
                rep = separate(g)
                pipeline_time += time.perf_counter() - t0
                verdict = verify_separator(g, rep)
                fc = find_root_cycle(g)
                rec = {"kind": kind, "n": n, "seed": seed, "F": g.num_faces, "rep": rep,
                       "checks": verdict.checks}
                rec.update(root_cycle_record(g, fc))
                records.append(rec)
    return records, pipeline_time


def test_length_bound(sweep, capsys):
    records, pipeline_time = sweep
    bad = []
    worst = 0.0
    for r in records:
        n, L = r["n"], r["rep"].length
        delta = delta_for(n)
        ok = (L <= 4 or (L - 4) ** 2 <= 8 * n) and L <= 2 * delta + -(-n // delta)
        ok = ok and r["checks"]["a_simple"][0] and r["checks"]["e_length"][0]
        worst = max(worst, L / math.sqrt(8 * n))
        if not ok:
            bad.append((r["kind"], n, r["seed"], L))
    ok = not bad and pipeline_time < 30
    announce(
        capsys, 1, ok,
        f"{len(records)} instances, {len(bad)} over bound, max length/sqrt(8n) {worst:.3f}, "
        f"pipeline time {pipeline_time:.1f}s",
    )
    assert not bad, bad[:5]
    assert pipeline_time < 30


def test_face_balance(sweep, capsys):
    records, _ = sweep
    bad = []
    for r in records:
        rep, F = r["rep"], r["F"]
        bound = -(-2 * F // 3)
        ok = F == 2 * r["n"] - 4 and max(rep.faces_inside, rep.faces_outside) <= bound
        ok = ok and r["checks"]["b_face_counts"][0] and r["checks"]["c_face_balance"][0]
        if not ok:
            bad.append((r["kind"], r["n"], r["seed"]))
    announce(capsys, 2, not bad, f"{len(records)} instances checked by flood fill, {len(bad)} failed")
    assert not bad, bad[:5]


def test_vertex_balance(sweep, capsys):
    records, _ = sweep
    bad = []
    for r in records:
        rep, n = r["rep"], r["n"]
        # d_vertex_counts: reported counts equal the direct count and the formula
        ok = r["checks"]["d_vertex_counts"][0]
        ok = ok and max(rep.vertices_inside, rep.vertices_outside) <= 2 * n // 3 + 1
        if not ok:
            bad.append((r["kind"], n, r["seed"]))
    announce(capsys, 3, not bad, f"{len(records)} instances, {len(bad)} failed")
    assert not bad, bad[:5]


def test_root_cycle_phase(sweep, capsys):
    records, _ = sweep
    keys = ("s_counts", "s_balance", "disjoint", "depths")
    fails = {k: sum(not r[k] for r in records) for k in keys}
    ok = not any(fails.values())
    announce(capsys, 4, ok, f"{len(records)} instances, failures per check {fails}")
    assert ok, fails


def layer_instances():
    rng = np.random.default_rng(20240501)
    out = []
    for i in range(200):
        seed = int(rng.integers(2**31))
        kind = i % 4
        if kind == 0:
            out.append(gen_apollonian(int(rng.integers(4, 10_001)), seed))
        elif kind == 1:
            n = int(rng.integers(4, 10_001))
            out.append(gen_flipped(n, int(rng.integers(0, 2 * n)), seed))
        elif kind == 2:
            layers = int(rng.integers(1, 100))
            width = int(rng.integers(3, 10_000 // layers))
            out.append(gen_nested(layers, width, int(rng.integers(0, 200)), seed))
        else:
            rows = int(rng.integers(3, 40))
            cols = int(rng.integers(3, 10_000 // (2 * rows)))
            skew = float(rng.choice([0.0, 0.05, 0.1, 0.3, 0.5]))
            out.append(gen_pillow(rows, cols, int(rng.integers(0, 200)), seed, skew))
    return out


def test_layer_structure(capsys):
    bad = []
    cycles = deepest = 0
    for idx, g in enumerate(layer_instances()):
        assert g.n <= 10_000
        fc = find_root_cycle(g)
        dec = decompose(g, g.faces, fc)
        dist = frontier_bfs(g, fc.root)
        on_S = set(fc.S.vertices)
        seen = set()
        deepest = max(deepest, dec.hT)
        for i, c in enumerate(dec.cycles):
            cycles += 1
            vs = c.vertices
            simple = len(set(vs)) == len(vs) and (
                len(vs) < 3 or all(g.has_edge(x, y) for x, y in c.edges())
            )
            depth = all(dist[x] == i for x in vs)
            disjoint = not seen & set(vs)
            meets = bool(on_S & set(vs))
            seen |= set(vs)
            if not (simple and depth and disjoint and meets):
                bad.append((idx, i, simple, depth, disjoint, meets))
    announce(
        capsys, 5, not bad,
        f"200 instances, {cycles} level cycles (max depth {deepest}), {len(bad)} violations",
    )
    assert not bad, bad[:5]


def test_ladder_bound(capsys):
    rng = np.random.default_rng(77)
    pool = [gen_pillow(*p) for p in PINNED_PILLOWS.values()]
    for _ in range(150):
        rows = int(rng.integers(4, 30))
        cols = int(rng.integers(10, 10_000 // (2 * rows)))
        skew = float(rng.choice([0.0, 0.05, 0.1, 0.2]))
        pool.append(gen_pillow(rows, cols, int(rng.integers(0, 100)), int(rng.integers(2**31)),
                               skew))
    pool += [g for g in layer_instances() if g.n > 50]

    reached = 0
    bad = []
    agree_bad = []
    for idx, g in enumerate(pool):
        fc = find_root_cycle(g)
        delta = delta_for(g.n)
        if len(fc.S) <= 2 * delta + 1:
            continue
        reached += 1
        dec = decompose(g, g.faces, fc)
        lad = ladder_select(dec, delta, g.n)
        explicit = [
            sum(len(dec.cycles[a].vertices) for a in range(i, dec.hT, delta))
            for i in range(delta)
        ]
        gi = explicit[lad.i0]
        ok = (
            lad.g.tolist() == explicit
            and gi == min(explicit)
            and gi > 0
            and gi * delta <= g.n
        )
        if not ok:
            bad.append((idx, lad.i0, explicit))
        # faces inside S and inside every rung agree with the flood fill
        counts = region_face_counts(g.faces, lad, dec)
        inside_S, _ = flood_fill_faces(g, fc.S)
        if len(inside_S) != fc.faces_inside:
            agree_bad.append((idx, "S"))
        root_faces = {tuple(sorted(f)) for f in g.faces.faces.tolist() if fc.root in f}
        for j in range(1, lad.k):
            if len(lad.rungs[j].vertices) < 3:
                continue
            a, b = flood_fill_faces(g, lad.rungs[j])
            side = a if root_faces <= a else b
            if len(side) != counts.counts[j]:
                agree_bad.append((idx, j))
    ok = reached > 0 and not bad and not agree_bad
    announce(
        capsys, 6, ok,
        f"ladder reached on {reached} of {len(pool)} instances, {len(bad)} bound violations, "
        f"{len(agree_bad)} count disagreements",
    )
    assert reached > 0
    assert not bad, bad[:5]
    assert not agree_bad, agree_bad[:5]


def test_tree_cut(capsys):
    rng = np.random.default_rng(5)
    bad = []
    per_d = {d: 0 for d in (2, 3, 4, 5)}
    for i in range(1000):
        d = 2 + i % 4
        m = int(rng.integers(2, 51))
        t = random_tree(m, d, rng)
        cut = balanced_edge_cut(t)
        feasible, _ = brute_force_tree_cut(t)
        edge = (min(cut.x, cut.y), max(cut.x, cut.y))
        if cut.worse_side > cut_bound(m, d) or edge not in feasible:
            bad.append((i, m, d, edge))
        per_d[d] += 1
    announce(capsys, 7, not bad, f"1000 trees, per degree {per_d}, {len(bad)} failures")
    assert not bad, bad[:5]


def test_linear_time(capsys):
    time_pipeline(gen_apollonian(10_000, 0))  # warm-up
    med = {}
    for n in (100_000, 400_000):
        times = [time_pipeline(gen_apollonian(n, seed))[1] for seed in range(10)]
        med[n] = statistics.median(times)
    ratio = med[400_000] / med[100_000]

    t0 = time.perf_counter()
    g = gen_apollonian(1_000_000, 0)
    gen_time = time.perf_counter() - t0
    rep, big = time_pipeline(g)
    ok = ratio <= 5 and big < 10 and verify_separator(g, rep).ok
    announce(
        capsys, 8, ok,
        f"median t(1e5)={med[100_000]:.3f}s t(4e5)={med[400_000]:.3f}s ratio {ratio:.2f}; "
        f"n=1e6 validate+separate {big:.2f}s (generation {gen_time:.1f}s)",
    )
    assert ratio <= 5
    assert big < 10


def test_fault_injection(capsys):
    rng = np.random.default_rng(11)
    graphs = [gen_apollonian(n, s) for n in (100, 1_000, 10_000) for s in range(4)]
    graphs += [gen_flipped(n, n, s) for n in (100, 1_000, 10_000) for s in range(4)]
    graphs += [gen_pillow(*p) for p in PINNED_PILLOWS.values()]
    applied = {k: 0 for k in MUTATIONS}
    missed = {k: 0 for k in MUTATIONS}
    for g in graphs:
        rep = separate(g)
        assert verify_separator(g, rep).ok
        for kind in MUTATIONS:
            for _ in range(3):
                bad = mutate_report(g, rep, kind, rng)
                if bad is None:
                    continue
                applied[kind] += 1
                if verify_separator(g, bad).ok:
                    missed[kind] += 1
    total = sum(applied.values())
    caught = total - sum(missed.values())
    ok = caught == total and all(applied.values())
    announce(
        capsys, 9, ok,
        f"{caught}/{total} corrupted reports rejected across {len(MUTATIONS)} mutation kinds",
    )
    assert all(applied.values()), applied
    assert caught == total, missed
