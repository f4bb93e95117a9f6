import csv
import io
import json
import math
import subprocess
import sys

import pytest

from refined_bohr.cli import main
from refined_bohr.verify import TABLE_COLUMNS


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_radius_json():
    code, text = run("radius", "--m", "1", "--p", "2", "--k", "0", "--N", "1",
                     "--weights", "geometric")
    assert code == 0
    rep = json.loads(text)
    assert abs(rep["radius"] - 1 / 3) < 1e-10 and rep["residual"] < 1e-10
    assert rep["strict_crossing"] is True
    assert rep["problem"]["p"] == 2.0


def test_radius_K_flag():
    _, text = run("radius", "--p", "1", "--K", "3", "--limit-m")
    assert json.loads(text)["radius"] == pytest.approx(0.25, abs=1e-12)
    assert json.loads(text)["problem"]["m"] is None


def test_radius_csv():
    code, text = run("radius", "--weights", "even", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 1
    assert float(rows[0]["radius"]) == pytest.approx(math.sqrt(2) - 1, abs=1e-12)


def test_table_csv():
    code, text = run("table", "--preset", "known-constants", "--format", "csv")
    assert code == 0
    reader = csv.DictReader(io.StringIO(text))
    assert tuple(reader.fieldnames) == TABLE_COLUMNS
    rows = list(reader)
    assert len(rows) == 31
    assert all(float(r["abs_diff"]) < 1e-9 for r in rows)


def test_verify_function():
    code, text = run("verify", "--p", "2", "--function", "mobius:a=0.9")
    rep = json.loads(text)
    assert code == 0 and rep["passed"]
    assert set(rep) >= {"problem", "radius", "function_id", "r_grid", "max_lhs", "argmax",
                        "margin", "truncation_worst", "passed"}


def test_verify_corpus_records_seed():
    code, text = run("verify", "--p", "1", "--corpus", "--seed", "7", "--r-steps", "4",
                     "--z-steps", "16", "--order", "128")
    reps = json.loads(text)
    assert code == 0 and len(reps) == 230
    assert all(r["seed"] == 7 and r["passed"] for r in reps)


def test_verify_corpus_deterministic():
    args = ("verify", "--corpus", "--r-steps", "3", "--z-steps", "8", "--order", "64",
            "--format", "csv")
    assert run(*args) == run(*args)


def test_verify_failure_exit(capsys):
    code, text = run("verify", "--p", "1", "--function", "extremal:a=0.999", "--tol", "-1")
    assert code == 1 and json.loads(text)["passed"] is False


def test_probe():
    code, text = run("probe", "--r", "0.35", "--m", "1", "--p", "2", "--k", "0",
                     "--weights", "geometric")
    rep = json.loads(text)
    assert code == 0 and rep["exceeds"] is True
    assert set(rep) >= {"r_probe", "a_witness", "lhs_at_witness", "q_limit_value", "exceeds"}


def test_psi_check():
    code, text = run("psi-check", "--p", "0.5")
    rep = json.loads(text)
    assert code == 0 and rep["monotone"] and rep["convex"]


def test_lemma_c():
    code, text = run("lemma-c", "--function", "mobius:a=0.3", "--k", "0.5", "--lambda", "1j",
                     "--r", "0.4")
    rep = json.loads(text)
    assert code == 0 and rep["holds"]
    assert rep["lhs"] == pytest.approx(rep["rhs"], rel=1e-12)


@pytest.mark.parametrize("argv", [
    ("radius", "--weights", "junk"),
    ("radius", "--k", "0.5", "--K", "2"),
    ("radius", "--p", "3"),
    ("radius", "--k", "0.5", "--N", "2"),
    ("probe", "--r", "0.2", "--p", "2"),
    ("psi-check", "--r", "0.9"),
    ("verify", "--function", "nope:a=1"),
    ("verify",),
    ("bogus",),
])
def test_usage_errors(argv, capsys):
    code, text = run(*argv)
    assert code == 2 and text == ""
    assert capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "refined_bohr", "radius", "--p", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["radius"] == pytest.approx(1 / 3, abs=1e-10)
