import csv
import io
import json
import math
import subprocess
import sys

import pytest

from qgzeta.cli import main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def single_edge(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("# one edge\n0 1\n")
    return str(path)


def test_energy_star(capsys):
    doc = run_json(capsys, "energy", "--family", "star", "5", "--length", "1")
    assert doc["results"][0]["vacuum_energy"] == pytest.approx(math.pi / 24, abs=1e-14)
    assert doc["graph"] == {"V": 6, "E": 5, "beta": 0, "bipartite": True, "mult_even": 1, "mult_odd": 1}
    assert doc["L"] == 1.0


def test_determinant_k23(capsys):
    doc = run_json(capsys, "determinant", "--family", "complete-bipartite", "2", "3", "--length", "1")
    row = doc["results"][0]
    assert row["spectral_determinant"] == pytest.approx(64, rel=1e-13)
    assert row["log_spectral_determinant"] == pytest.approx(math.log(64), rel=1e-13)


def test_zeta_single_edge_file(capsys, single_edge):
    doc = run_json(capsys, "zeta", "--graph", single_edge, "--length", "1", "--s", "2")
    (row,) = doc["results"]
    assert row["re"] == pytest.approx(1 / 90, rel=1e-13)
    assert row["method"] == "hurwitz"


def test_zeta_negative_s_adds_series_row(capsys):
    doc = run_json(capsys, "zeta", "--family", "cycle", "5", "--s", "-0.5", "--s", "-1+0.5i", "--s", "3")
    methods = [(r["s_re"], r["s_im"], r["method"]) for r in doc["results"]]
    assert methods == [
        (-0.5, 0.0, "hurwitz"),
        (-0.5, 0.0, "discrete-zeta-series"),
        (-1.0, 0.5, "hurwitz"),
        (-1.0, 0.5, "discrete-zeta-series"),
        (3.0, 0.0, "hurwitz"),
    ]
    hur, ser = doc["results"][2], doc["results"][3]
    assert abs(complex(hur["re"], hur["im"]) - complex(ser["re"], ser["im"])) < 1e-8


def test_spectrum_round_trip_is_lossless(capsys, tmp_path):
    spec_doc = run_json(capsys, "spectrum", "--family", "complete", "5", "--length", "1.3")
    assert len(spec_doc["results"]) == 5
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec_doc))
    s_args = ["--s", "0.75", "--s", "-1.5", "--s", "2+1i", "--length", "1.3"]
    from_graph = run_json(capsys, "zeta", "--family", "complete", "5", *s_args)
    from_spec = run_json(capsys, "zeta", "--spectrum", str(path), *s_args)
    assert from_spec["results"] == from_graph["results"]
    assert from_spec["graph"] == from_graph["graph"]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "zeta", "--family", "star", "3", "--s", "2", "--s", "-0.25", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["method"] for r in rows] == ["hurwitz", "hurwitz", "discrete-zeta-series"]
    assert float(rows[1]["re"]) == pytest.approx(float(rows[2]["re"]), abs=1e-9)


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "complete-bipartite", "2", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [float(r["phase"]) for r in rows] == [0.0, 0.25, 0.25, 0.25, 0.5]


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["energy"], "--graph"),
        (["energy", "--family", "wheel", "5"], "--family"),
        (["energy", "--family", "star"], "--family"),
        (["energy", "--family", "star", "x"], "--family"),
        (["energy", "--family", "cycle", "2"], "--family"),
        (["energy", "--family", "star", "3", "--length", "0"], "--length"),
        (["energy", "--family", "star", "3", "--length", "abc"], "--length"),
        (["zeta", "--family", "star", "3", "--s", "0.5"], "--s"),
        (["zeta", "--family", "star", "3", "--s", "two"], "--s"),
        (["zeta", "--family", "star", "3"], "--s"),
        (["energy", "--graph", "/nonexistent/g.edges"], "--graph"),
        (["energy", "--spectrum", "/nonexistent/s.json"], "--spectrum"),
        (["energy", "--family", "star", "3", "--zero-tolerance", "0.1"], "--zero-tolerance"),
    ],
)
def test_input_errors_exit_1_and_name_the_flag(capsys, argv, flag):
    try:
        code = main(argv)
    except SystemExit as exc:  # usage errors raised by the parser itself
        code = exc.code
    out, err = capsys.readouterr()
    assert code == 1
    assert flag in err
    assert out == ""


@pytest.mark.parametrize("argv", [["energy"], ["zeta", "--family", "star", "3"], ["frobnicate"]])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1
    assert "error" in capsys.readouterr().err


def test_bad_edge_file(capsys, tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("0 1\n1 1\n")
    code, _, err = run(capsys, "energy", "--graph", str(path))
    assert code == 1
    assert "--graph" in err and "self-loop" in err


def test_bad_spectrum_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text('{"graph": {"E": 3}, "results": [{"eigenvalue": 0.0}, {"eigenvalue": 3.0}]}')
    code, _, err = run(capsys, "zeta", "--spectrum", str(path), "--s", "2")
    assert code == 1 and "--spectrum" in err


def test_verify_passes(capsys):
    code, out, err = run(capsys, "verify")
    doc = json.loads(out)
    assert code == 0, err
    assert doc["summary"] == {"passed": 10, "failed": 0}
    assert err.count("[PASS]") == 10


def test_verify_with_graph(capsys):
    code, out, err = run(capsys, "verify", "--family", "complete-bipartite", "2", "3")
    doc = json.loads(out)
    assert code == 0, err
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["passed"] > 10
    assert doc["graph"]["beta"] == 2


def test_parse_complex():
    assert parse_complex("2") == 2
    assert parse_complex("-0.5") == -0.5
    assert parse_complex("0.75+1i") == complex(0.75, 1)
    assert parse_complex("1e-3-2.5i") == complex(1e-3, -2.5)
    assert parse_complex("3j") == 3j
    for bad in ("", "abc", "nan", "inf"):
        with pytest.raises(ValueError):
            parse_complex(bad)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgzeta", "energy", "--family", "complete-bipartite", "2", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["results"][0]["vacuum_energy"] == pytest.approx(-math.pi / 16, abs=1e-14)
