from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from braidlevel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "n=3;A={1,2}")
    assert code == 0
    data = json.loads(out)
    assert data["r"] == ["0", "6", "6", "6"]
    assert data["total"] == "18"
    assert data["schema"] == "braidlevel/1"


def test_census_formats(capsys):
    code, out, _ = run(capsys, "census", "--spec", "n=3;A={1,2}", "--format", "csv", "--method", "geometric")
    assert code == 0
    assert out.splitlines()[0] == "n,l,value,method"
    assert out.splitlines()[2] == "3,1,6,geometric"
    _, out, _ = run(capsys, "census", "n=3;A={1,2}", "--format", "text")
    assert "total = 18" in out


def test_charpoly_default(capsys):
    code, out, _ = run(capsys, "charpoly", "n=3;preset=shi;b=1")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs"] == ["0", "9", "-6", "1"]
    assert data["method"] == "finite_field"


@pytest.mark.parametrize("method", ["ff", "whitney", "closed", "census"])
def test_charpoly_methods(capsys, method):
    code, out, _ = run(capsys, "charpoly", "n=3;preset=interval;a=0;b=2", "--method", method)
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "21", "-9", "1"]


def test_charpoly_falls_back_to_census(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDLEVEL_CAP", "100")
    # finite field needs more than 100 rows for n = 4; the census of 3^6 choices fits under an explicit cap
    code, out, _ = run(capsys, "charpoly", "n=4;A={0,1}", "--cap", "1000")
    assert code == 0
    assert json.loads(out)["method"] == "from_census"


def test_levels(capsys):
    code, out, _ = run(capsys, "levels", "n=3;preset=catalan;b=1", "--method", "closed")
    assert code == 0
    data = json.loads(out)
    assert [d["value"] for d in data["levels"]] == ["0", "12", "12", "6"]
    for method in ("digraph", "ff", "whitney", "census"):
        _, out, _ = run(capsys, "levels", "n=3;preset=catalan;b=1", "--method", method, "--l", "1")
        assert json.loads(out)["levels"] == [{"l": 1, "value": "12"}]


def test_levels_strict_linial(capsys):
    code, out, _ = run(capsys, "levels", "n=3;preset=linial;b=1", "--method", "closed", "--strict-44-1", "--format", "csv")
    assert code == 0
    assert "3,1,5/2,linial_formula_strict" in out.splitlines()
    _, out, _ = run(capsys, "levels", "n=3;preset=linial;b=1", "--method", "closed", "--format", "csv")
    assert "3,1,1,linial_formula" in out.splitlines()


def test_levels_closed_needs_interval(capsys):
    code, _, err = run(capsys, "levels", "n=3;A={1,3}", "--method", "closed")
    assert code == 2
    assert "closed level formulas" in err


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "n=2;preset=shi;b=1")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True
    assert [r["root"] for r in data["certified_roots"]] == ["0", "2"]
    code, out, _ = run(capsys, "roots", "n=3;A={1,2,3}", "--format", "text")
    assert code == 0
    assert "verdict: True" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "n=3;A={1,2}")
    assert code == 0
    assert out.strip().endswith("ALL PASS")
    assert all(line.startswith(("PASS", "SKIP", "ALL")) for line in out.splitlines())


def test_verify_small_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2")
    assert code == 0
    assert "FAIL" not in out


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "n=2;A={0,1}")
    assert code == 0
    regions = json.loads(out)["regions"]
    assert len(regions) == 3
    for r in regions:
        x1, x2 = (Fraction(v) for v in r["point"])
        assert x1 - x2 not in (0, 1)
    _, out, _ = run(capsys, "sample", "n=3;A={1,2}", "--cap", "5")
    assert len(json.loads(out)["regions"]) == 5


@pytest.mark.parametrize("argv,needle", [
    (["census", "n=2;A={1,1}"], "duplicate offset"),
    (["census", "n=2;A=1"], "syntax error"),
    (["census"], "needs an arrangement spec"),
    (["census", "n=6;preset=shi;b=1", "--cap", "10"], "exceeds cap"),
    (["charpoly", "n=3;A={1,2}", "--method", "geometric"], "does not support"),
    (["census", "n=3;A={1,2}", "--method", "ff"], "census supports"),
])
def test_invalid_input_exits_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_bad_verb_exits_2(capsys):
    code, _, _ = run(capsys, "explode")
    assert code == 2


def test_parallel_output_identical(capsys):
    _, one, _ = run(capsys, "census", "n=4;preset=catalan;b=1")
    _, three, _ = run(capsys, "census", "n=4;preset=catalan;b=1", "--jobs", "3")
    assert one == three


def test_json_numbers_are_strings(capsys):
    _, out, _ = run(capsys, "charpoly", "n=3;A={-1/2,1}")
    data = json.loads(out)
    assert all(isinstance(c, str) for c in data["coeffs"])
    _, out, _ = run(capsys, "census", "n=3;A={-1/2,1}")
    data = json.loads(out)
    assert data["A"] == ["-1/2", "1"]
    assert sum(int(v) for v in data["r"]) == int(data["total"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "braidlevel", "census", "n=3;A={1,2}"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["total"] == "18"
