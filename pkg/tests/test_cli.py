import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from tokengraphs.cli import main
from tokengraphs.cycles import f2_cycle_spectrum


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_spectrum_json_matches_library():
    code, text = run("spectrum", "--graph", "cycle:9", "--k", "2", "--method", "lift", "--format", "json")
    assert code == 0
    data = json.loads(text)
    np.testing.assert_allclose(data["spectrum"], f2_cycle_spectrum(9).values, atol=1e-11)


def test_spectrum_deterministic():
    argv = ("spectrum", "--graph", "petersen", "--k", "2", "--format", "json")
    assert run(*argv) == run(*argv)


def test_csv_roundtrip_equals_json():
    base = ("spectrum", "--graph", "cycle:8", "--k", "2", "--method", "overlift")
    _, js = run(*base, "--format", "json")
    _, cs = run(*base, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert [float(r["value"]) for r in rows] == json.loads(js)["spectrum"]
    assert [int(r["index"]) for r in rows] == list(range(28))


def test_brute_and_lift_agree():
    _, a = run("spectrum", "--graph", "cycle:10", "--k", "2", "--format", "json")
    _, b = run("spectrum", "--graph", "cycle:10", "--k", "2", "--method", "lift", "--format", "json")
    np.testing.assert_allclose(json.loads(a)["spectrum"], json.loads(b)["spectrum"], atol=1e-10)


def test_table_format():
    code, text = run("spectrum", "--graph", "complete:4")
    assert code == 0 and "x3" in text


def test_file_graph(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, text = run("spectrum", "--graph", f"file:{f}", "--format", "json")
    assert code == 0
    np.testing.assert_allclose(json.loads(text)["spectrum"], [0, 3, 3], atol=1e-12)
    assert run("spectrum", "--graph", f"file:{tmp_path / 'missing'}")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("spectrum", "--graph", "nosuch:3"),
        ("spectrum", "--graph", "cycle:8", "--k", "2", "--method", "lift"),
        ("spectrum", "--graph", "cycle:9", "--k", "2", "--method", "overlift"),
        ("spectrum", "--graph", "petersen", "--k", "2", "--method", "lift"),
        ("spectrum", "--graph", "cycle:9", "--k", "3", "--method", "lift"),
        ("spectrum", "--graph", "cycle:5", "--k", "9"),
        ("spectrum", "--graph", "cycle:5", "--bogus"),
        ("quotient", "--n", "7", "--shape", "u"),
        ("overlift", "--n", "7"),
        ("asympt", "--n", "8", "--r", "2"),
        ("alpha", "--graph", "cycle:5", "--delete", "9"),
        ("nosuchverb",),
        (),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    assert capsys.readouterr().err


def test_cap_exceeded_exit_1(capsys):
    code, _ = run("spectrum", "--graph", "cycle:40", "--k", "3")
    assert code == 1
    assert "computation failed" in capsys.readouterr().err


def test_token_edges_and_json():
    code, text = run("token", "--graph", "cycle:5", "--k", "2")
    assert code == 0
    code, js = run("token", "--graph", "cycle:5", "--k", "2", "--format", "json")
    data = json.loads(js)
    assert (data["n"], data["m"]) == (10, 15) and data["vertices"][:3] == [[0, 1], [0, 2], [1, 2]]


def test_alpha_outputs():
    _, text = run("alpha", "--graph", "petersen", "--delete", "0")
    assert float(text) == pytest.approx(3 - 3**0.5, abs=1e-10)
    _, js = run("alpha", "--graph", "cycle:9", "--k", "2", "--format", "json")
    assert json.loads(js)["alpha"] == pytest.approx(0.467911113762, abs=1e-11)


def test_alpha_relations():
    code, js = run("alpha", "--graph", "cycle:9", "--k", "2", "--relations")
    assert code == 0 and json.loads(js)["checks"]


def test_alpha_disconnected_warns(capsys):
    code, text = run("alpha", "--graph", "star:4", "--delete", "0")
    assert code == 0 and float(text) == 0.0
    assert "warning" in capsys.readouterr().err


def test_quotient_json():
    code, js = run("quotient", "--n", "8", "--shape", "u", "--format", "json")
    data = json.loads(js)
    assert code == 0 and len(data["matrix"]) == 7 and len(data["partition"]["cells"]) == 7
    _, table = run("quotient", "--n", "8")
    assert "spectrum:" in table


def test_overlift_per_r():
    code, js = run("overlift", "--n", "8", "--per-r")
    data = json.loads(js)
    assert code == 0 and len(data["per_r"]) == 8 and len(data["lambda_removed"]) == 4
    _, cs = run("overlift", "--n", "8", "--per-r", "--format", "csv")
    assert cs.splitlines()[0] == "r,index,value" and len(cs.splitlines()) == 33


def test_asympt():
    code, js = run("asympt", "--n", "201", "--r", "1")
    data = json.loads(js)
    assert code == 0 and data["max_deviation"] < 1e-5 and len(data["asymptotic"]) == 100


def test_verify_exit_codes():
    code, text = run("verify", "--suite", "paper-tables")
    assert code == 0 and "8/8 passed" in text
    code, js = run("verify", "--suite", "paper-tables", "--tol", "1e-9", "--format", "json")
    assert code == 1 and not json.loads(js)["pass"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tokengraphs", "alpha", "--graph", "complete:5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and float(proc.stdout) == pytest.approx(5.0)
