import json
import subprocess
import sys

import pytest

from togliatti.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_cubic(capsys):
    code, out, _ = run(capsys, "check", "--n", "2", "--d", "3", "x0^3,x1^3,x2^3,x0*x1*x2", "--with-smooth")
    rep = json.loads(out)
    assert code == 0
    assert rep["togliatti"] and rep["minimal_removal"] and rep["minimal_prop33"] and rep["smooth"] is True
    assert rep["ideal"] == "x0^3,x0*x1*x2,x1^3,x2^3"


def test_check_complete_intersection(capsys):
    code, out, _ = run(capsys, "check", "--n", "2", "--d", "3", "x0^3,x1^3,x2^3")
    rep = json.loads(out)
    assert code == 0 and rep["togliatti"] is False
    assert rep["minimal_removal"] is None and rep["smooth"] == "skipped"


def test_check_bound_exceeded(capsys):
    code, _, err = run(capsys, "check", "--n", "2", "--d", "3", "x0^3,x1^3,x2^3,x0*x1*x2,x0^2*x1")
    assert code == 2 and "BoundExceeded" in err


def test_check_not_artinian(capsys):
    code, _, err = run(capsys, "check", "--n", "2", "--d", "3", "x0^3,x1^3")
    assert code == 2 and "NotArtinian" in err


@pytest.mark.parametrize("text", ["x0^3,x1^", "x0^3,x1^2,x2^3", "x0^3,x5^3"])
def test_check_parse_errors(capsys, text):
    code, _, _ = run(capsys, "check", "--n", "2", "--d", "3", text)
    assert code == 1


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "2"])
    assert exc.value.code == 1


def test_check_reports_family(capsys):
    code, out, _ = run(capsys, "check", "--n", "2", "--d", "5", "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2")
    assert json.loads(out)["matched_family"] == "T36:ii"


def test_enumerate_t36(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "5", "--mu", "5")
    data = json.loads(out)
    assert code == 0 and data["count"] == 2
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "4", "--mu", "5", "--smooth-only")
    assert json.loads(out)["count"] == 1


def test_enumerate_errors(capsys):
    assert run(capsys, "enumerate", "--n", "2", "--d", "5", "--mu", "9")[0] == 2
    assert run(capsys, "enumerate", "--n", "2", "--d", "10", "--mu", "7", "--ceiling", "10")[0] == 3


def test_enumerate_bytes_independent_of_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "enumerate", "--n", "2", "--d", "6", "--mu", "7", "--jobs", "1", "--out", str(a))[0] == 0
    assert run(capsys, "enumerate", "--n", "2", "--d", "6", "--mu", "7", "--jobs", "3", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["count"] == 87


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--d", "5", "--mu", "5", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("ideal,n,d,r,") and len(lines) == 3


def test_smooth_command(capsys):
    code, out, _ = run(capsys, "smooth", "--n", "2", "--d", "4", "x0^4,x1^4,x2^4,x0*x1*x2^2,x0^2*x1^2")
    data = json.loads(out)
    assert code == 0 and data["smooth"] is False and data["failures"]


def test_verify_agreement_and_disagreement(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T36", "--d", "5")
    assert code == 0 and json.loads(out)["agrees"]
    code, out, _ = run(capsys, "verify", "--theorem", "MAIN1", "--d", "6")
    data = json.loads(out)
    assert code == 4
    assert data["missing"] == [] and data["fixture_not_found"] == []
    assert set(data["explained_by_fixture"]) <= set(data["fixture"])
    assert data["extras"] and data["unexplained"]
    code, out, _ = run(capsys, "verify", "--theorem", "MAIN1", "--d", "8")
    data = json.loads(out)
    assert code == 0 and data["extras"] and not data["agrees"] and data["agrees_with_fixture"]


def test_verify_custom_fixture_dir(tmp_path, capsys):
    assert run(capsys, "verify", "--theorem", "MAIN1", "--d", "10", "--fixtures", str(tmp_path), "--ceiling", "5")[0] == 3
    code, _, err = run(capsys, "verify", "--theorem", "MAIN1", "--d", "8", "--fixtures", str(tmp_path))
    assert code == 1 and "FileNotFoundError" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "togliatti", "check", "--n", "2", "--d", "3", "x0^3,x1^3,x2^3,x0*x1*x2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["togliatti"]
