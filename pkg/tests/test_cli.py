import csv
import io
import json
import math
from contextlib import redirect_stdout

import numpy as np
import pytest

import weylcub.grids
from weylcub import cli, tables
from weylcub.liealg import build_algebra, enumerate_dominant
from weylcub.xmap import sqrt_K_function


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def test_nodes_csv(tmp_path):
    out = tmp_path / "a2.csv"
    assert run(["nodes", "--algebra", "A2", "--M", "15", "--out", str(out)])[0] == 0
    rows = list(csv.reader(out.open()))
    assert tuple(rows[0]) == cli.CSV_HEADER
    assert len(rows) - 1 == 136
    rec = dict(zip(rows[0], rows[1]))
    assert float(rec["weight"]) == pytest.approx(int(rec["eps"]) * math.pi**2 / (9 * 225), rel=1e-15)


def test_nodes_csv_rank_one_leaves_second_coordinate_blank():
    code, text = run(["nodes", "--algebra", "A1", "--M", "3"])
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 4
    assert all(r["s2"] == r["a2"] == r["y2"] == "" for r in rows)


def test_nodes_json_single_node():
    code, text = run(["nodes", "--algebra", "G2", "--M", "1", "--format", "json"])
    doc = json.loads(text)
    assert code == 0
    assert set(doc) == {"algebra", "M", "prefactor", "nodes"}
    assert len(doc["nodes"]) == 1
    node = doc["nodes"][0]
    assert node["index"] == [1, 0, 0] and node["eps"] == 1
    assert node["weight"] == pytest.approx(math.pi**2 / 3)


@pytest.mark.parametrize("label", ["A2", "C2", "G2"])
def test_json_round_trip_reproduces_area_estimates(label):
    # the re-read file summed in-process gives the table entry bit for bit
    got = tables.table3()[label]
    for M, want in zip(tables.TABLE3_M, got):
        doc = json.loads(run(["nodes", "--algebra", label, "--M", str(M), "--format", "json"])[1])
        y = np.array([n["y"] for n in doc["nodes"]])
        w = np.array([n["weight"] for n in doc["nodes"]])
        assert math.fsum((w * sqrt_K_function(label)(y)).tolist()) == want


def test_nodes_svg(tmp_path):
    out = tmp_path / "c2.svg"
    assert run(["nodes", "--algebra", "C2", "--M", "15", "--format", "svg", "--out", str(out)])[0] == 0
    text = out.read_text()
    assert text.count("<polyline") == 3
    assert text.count("<circle") == len(weylcub.grids.build_grid(build_algebra("C2"), 15))
    assert 'viewBox="-4.4' in text


def test_exit_codes(tmp_path):
    assert run(["nodes", "--algebra", "B2", "--M", "3"])[0] == 2
    assert run(["nodes", "--algebra", "A2", "--M", "0"])[0] == 2
    assert run(["table", "7"])[0] == 2
    assert run([])[0] == 2
    assert run(["nodes", "--algebra", "A2", "--M", "3", "--out", str(tmp_path / "no" / "x.csv")])[0] == 3


def test_table_1_and_2():
    code, text = run(["table", "1"])
    assert code == 0
    assert text.splitlines()[2].split() == ["(0,0)", "6", "8", "12"]
    assert run(["table", "2"])[0] == 0


def test_table_1_mismatch_exits_nonzero(monkeypatch):
    golden = {k: dict(v) for k, v in tables.TABLE1_GOLDEN.items()}
    golden["(0,0)"]["G2"] = 11
    monkeypatch.setattr(tables, "TABLE1_GOLDEN", golden)
    assert run(["table", "1"])[0] == 1


def test_table_3_layout():
    code, text = run(["table", "3"])
    assert code == 0
    row = text.splitlines()[1].split()
    assert row == ["10", "6.0751", "10.056", "7.4789"]


@pytest.mark.parametrize("label", ["A1", "A2", "C2", "G2"])
def test_approx_smallest_case(tmp_path, label):
    prefix = tmp_path / label
    code, text = run(["approx", "--algebra", label, "--M", "1", "--out", str(prefix), "--R", "256", "--samples", "8"])
    assert code == 0 and "L2_K error" in text
    doc = json.loads((tmp_path / f"{label}_coeffs.json").read_text())
    assert len(doc["coefficients"]) == len(enumerate_dominant(build_algebra(label), 1))
    rows = list(csv.reader((tmp_path / f"{label}_samples.csv").open()))
    assert len(rows[0]) == build_algebra(label).rank + 2


def test_approx_coefficient_count(tmp_path):
    code, _ = run(["approx", "--M", "10", "--out", str(tmp_path / "c2"), "--R", "256", "--samples", "4"])
    doc = json.loads((tmp_path / "c2_coeffs.json").read_text())
    assert code == 0
    assert len(doc["coefficients"]) == len(enumerate_dominant(build_algebra("C2"), 10))


def test_verify_quick_passes():
    code, text = run(["verify", "--level", "quick"])
    assert code == 0, text
    assert "FAIL" not in text


def test_verify_quick_catches_corrupted_eps(monkeypatch):
    real = weylcub.grids.epsilon

    def corrupted(data, x):
        e = real(data, x)
        return 1 if e == 3 else e

    monkeypatch.setattr(weylcub.grids, "epsilon", corrupted)
    code, text = run(["verify", "--level", "quick"])
    assert code == 1
    assert "FAIL" in text
