import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from cyclesep import gen_pillow, k4, read_rot, separate, write_report, write_rot
from cyclesep.cli import main
from cyclesep.oracle import mutate_report

from conftest import PINNED_PILLOWS


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.rot"
    write_rot(k4(), p)
    return p


def test_gen_separate_verify(tmp_path, capsys):
    graph = tmp_path / "g.rot"
    report = tmp_path / "r.json"
    assert main(["gen", "apollonian", "-n", "500", "--seed", "3", "-o", str(graph)]) == 0
    assert main(["separate", str(graph), "-o", str(report)]) == 0
    assert main(["verify", str(graph), str(report)]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 5
    assert json.loads(report.read_text())["n"] == 500


def test_gen_kinds_and_env_seed(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PSEP_SEED", "9")
    for kind in ("apollonian", "flipped", "nested", "pillow"):
        assert main(["gen", kind, "-n", "60"]) == 0
        first = capsys.readouterr().out
        assert main(["gen", kind, "-n", "60", "--seed", "9"]) == 0
        assert capsys.readouterr().out == first
    monkeypatch.setenv("PSEP_SEED", "x")
    assert main(["gen", "apollonian"]) == 2


def test_verify_failure_exit_code(tmp_path, capsys):
    g = gen_pillow(*PINNED_PILLOWS["B1"])
    graph, report = tmp_path / "g.rot", tmp_path / "r.json"
    write_rot(g, graph)
    bad = mutate_report(g, separate(g), "faces_inside_off_by_one", np.random.default_rng(0))
    write_report(bad, report)
    assert main(["verify", str(graph), str(report)]) == 3
    captured = capsys.readouterr()
    assert "FAIL b_face_counts" in captured.out
    assert "first failure" in captured.err


def test_invalid_input_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.rot"
    p.write_text("planar-rot 1\nn 4\nv 0: 1 2\nv 1: 0 2 3\nv 2: 0 3 1\nv 3: 0 1 2\n")
    assert main(["separate", str(p)]) == 2
    assert "NotSymmetric" in capsys.readouterr().err
    p.write_text("garbage\n")
    assert main(["separate", str(p)]) == 2


def test_missing_file_exit_code(tmp_path):
    assert main(["separate", str(tmp_path / "nope.rot")]) == 1


def test_separate_svg(tmp_path, k4_file, capsys):
    svg = tmp_path / "k4.svg"
    assert main(["separate", str(k4_file), "--svg", str(svg)]) == 0
    rep = json.loads(capsys.readouterr().out)
    root = ET.fromstring(svg.read_text())
    sep = {
        tuple(sorted((int(e.get("data-u")), int(e.get("data-v")))))
        for e in root.iter("{http://www.w3.org/2000/svg}line")
        if e.get("class") == "separator"
    }
    cyc = rep["cycle"]
    assert sep == {tuple(sorted(p)) for p in zip(cyc, cyc[1:] + cyc[:1])}


def test_render(tmp_path, k4_file):
    out = tmp_path / "plain.svg"
    assert main(["render", str(k4_file), "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_layers(tmp_path, capsys):
    graph = tmp_path / "p.rot"
    write_rot(gen_pillow(*PINNED_PILLOWS["rung"]), graph)
    assert main(["layers", str(graph)]) == 0
    captured = capsys.readouterr()
    rows = list(csv.DictReader(io.StringIO(captured.out)))
    assert rows[0] == {"level": "0", "size": "1"}
    assert [int(r["level"]) for r in rows] == list(range(len(rows)))
    assert "ladder=yes" in captured.err


def test_root_cycle(k4_file, capsys):
    assert main(["root-cycle", str(k4_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cycle"] == [0, 3, 1]
    assert (out["faces_inside"], out["faces_outside"]) == (1, 3)


def test_tree_cut(tmp_path, capsys):
    p = tmp_path / "star.txt"
    p.write_text("# star\n0 1\n0 2\n0 3\n")
    assert main(["tree-cut", str(p), "--degree", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sizes"] == [3, 1] and out["bound"] == 3
    p.write_text("0 1\n1 2 3\n")
    assert main(["tree-cut", str(p)]) == 2
    p.write_text("0 1\n2 3\n")
    assert main(["tree-cut", str(p)]) == 2


def test_bench(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--sizes", "200", "400", "--seeds", "2", "-o", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == ["n", "seed", "branch", "length", "sqrt8n", "wall_time"]
    keys = [(int(r["n"]), int(r["seed"])) for r in rows]
    assert keys == [(200, 0), (200, 1), (400, 0), (400, 1)]


def test_module_entry_point(tmp_path, k4_file):
    proc = subprocess.run(
        [sys.executable, "-m", "cyclesep", "separate", str(k4_file)],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["branch"] == "S-direct"
    assert read_rot(k4_file) == k4()
