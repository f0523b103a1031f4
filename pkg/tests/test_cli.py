import json
import subprocess
import sys

import pytest

from pretzelkit.cli import main
from pretzelkit.lspace import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_lspace_knot(capsys):
    code, out, _ = run(capsys, "analyze", "(-2,3,7)")
    assert code == 0
    assert "LSpaceKnot" in out and "NegTwoThreeQ(7)" in out


def test_analyze_exception_prints_table(capsys):
    code, out, _ = run(capsys, "analyze", "(3,-5,3,-2)")
    assert code == 0
    assert "NotLSpaceKnot" in out and "HFK" in out
    assert "F^4" in out


def test_analyze_normalizes(capsys):
    code, out, _ = run(capsys, "analyze", "(1,-1,3)")
    assert code == 0
    assert "normalized:    (3)" in out
    assert "reduces to:    unknot" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "(3,-3,1,3,2)", "--format", "json")
    rep = json.loads(out)
    assert rep["fiberedness"]["type"] == "Type2A"
    assert rep["det"]["formula"] == rep["det"]["alexander"] == 99
    assert rep["auxiliary_link"] == "(-2,2,-2,2)"


def test_analyze_dump_graphs(capsys):
    code, out, _ = run(capsys, "analyze", "(1,1,1)", "--dump-graphs")
    assert code == 0 and "graph checkerboard" in out


@pytest.mark.parametrize("text", ["(2,0,3)", "(2,2)", "nonsense"])
def test_analyze_bad_input(capsys, text):
    code, _, err = run(capsys, "analyze", text)
    assert code == 1 and err.startswith("error:")


def test_usage_errors_exit_one(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--max-tangles", "2", "--report-dir", str(tmp_path))
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--max-tangles", "x"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_verify_json_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--max-tangles", "3", "--max-twist", "5", "--format", "json", "--report-dir", str(tmp_path))
    assert code == 0 and "counterexamples: 0" in out
    text = (tmp_path / "verify_r3_n5.json").read_text()
    rep = VerificationReport.from_json(json.loads(text))
    assert rep.render_json() + "\n" == text


def test_verify_deterministic_across_workers(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "verify", "--max-tangles", "4", "--max-twist", "4", "--workers", "1", "--report-dir", str(a))[0] == 0
    assert run(capsys, "verify", "--max-tangles", "4", "--max-twist", "4", "--workers", "2", "--report-dir", str(b))[0] == 0
    fa, fb = (a / "verify_r4_n4.csv").read_bytes(), (b / "verify_r4_n4.csv").read_bytes()
    assert fa == fb
    assert fa.splitlines()[0] == b"code,type,fibered,genus,det,coeff_ok,family,verdict,elimination_reason"


def test_environment_overrides(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PRETZEL_REPORT_DIR", str(tmp_path))
    monkeypatch.setenv("PRETZEL_WORKERS", "1")
    assert run(capsys, "verify", "--max-tangles", "3", "--max-twist", "3", "--format", "text")[0] == 0
    assert (tmp_path / "verify_r3_n3.txt").exists()


def test_oracle_subcommand_is_hidden(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "oracle" not in capsys.readouterr().out
    code, out, _ = run(capsys, "oracle", "(-2,3,7)")
    assert code == 0 and "agree:        True" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pretzelkit.cli", "analyze", "(1,1,-3)"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "Type1" in proc.stdout
