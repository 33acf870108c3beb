import io
import json

import mpmath
import pytest

import analysis.verification_pipeline as pipeline
from app import RunConfig, build_parser, main
from config.constants import SCHEMA, UNITS_NOTE


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _field(out: str, name: str) -> str:
    line = next(l for l in out.splitlines() if l.startswith(f"{name}:"))
    return line[len(name) + 1:].strip()


# =============================================================================
# derive
# =============================================================================
@pytest.mark.parametrize("argv, energy", [
    (["--system", "sho1d", "--n", "2"], "5/2"),
    (["--system", "coul3d", "--n", "2", "--l", "0"], "-1/8"),
    (["--system", "osc2d", "--m", "1", "--k", "0"], "2"),
    (["--system", "osc3d", "--n", "3", "--l", "1"], "9/2"),
    (["--system", "coul2d", "--m", "-1", "--k", "1"], "-2/25"),
])
def test_derive_reports_the_energy(capsys, argv, energy):
    code, out, _ = _run(capsys, "derive", *argv)
    assert code == 0
    assert _field(out, "Energy") == energy
    assert _field(out, "Routes agree") == "yes"
    assert _field(out, "Eigen residual") == "0"
    assert out.rstrip().endswith(UNITS_NOTE)


def test_derive_json(capsys):
    code, out, _ = _run(capsys, "derive", "--system", "coul3d", "--n", "1", "--l", "0", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema"] == SCHEMA
    assert payload["agree"] is True
    assert payload["rodrigues"]["qn"] == {"n": 1, "k": 0, "l": 0}


def test_derive_latex(capsys):
    code, out, _ = _run(capsys, "derive", "--system", "sho1d", "--n", "2", "--format", "latex")
    assert code == 0
    assert "E = \\frac{5}{2}" in out


def test_derive_prints_floats_at_the_requested_precision(capsys):
    code, out, _ = _run(capsys, "derive", "--system", "sho1d", "--n", "0", "--precision", "200")
    norm = _field(out, "Norm")
    assert code == 0
    assert norm.startswith("pi^(-1/4)")
    digits = norm[norm.index("[") + 1:norm.index("]")]
    with mpmath.workprec(400):
        error = abs(mpmath.mpf(digits) - mpmath.pi ** (mpmath.mpf(-1) / 4))
    assert len(digits) > 50
    assert error < mpmath.mpf(10) ** -55


@pytest.mark.parametrize("argv", [
    ["derive", "--system", "sho1d"],
    ["derive", "--system", "coul3d", "--n", "2", "--l", "2"],
    ["derive", "--system", "morse", "--n", "1"],
    ["derive", "--system", "coul3d", "--n", "20", "--l", "0"],
    ["derive", "--system", "sho1d", "--n", "2", "--precision", "40"],
    ["derive", "--system", "sho1d", "--n", "2", "--l", "1"],
    ["chain", "--system", "sho1d", "--format", "latex"],
    ["eval", "--system", "coul3d", "--n", "1", "--l", "0", "--points=-1:1:0.5"],
    ["eval", "--system", "coul3d", "--n", "1", "--l", "0", "--points", "0:1"],
    [],
])
def test_bad_input_exits_with_two(capsys, argv):
    code, _, _ = _run(capsys, *argv)
    assert code == 2


# =============================================================================
# chain / eval / table
# =============================================================================
def test_chain_text_grid(capsys):
    code, out, _ = _run(capsys, "chain", "--system", "sho1d", "--max-level", "4")
    assert code == 0
    assert "H0" in out and "9/2" in out
    assert out.rstrip().endswith(UNITS_NOTE)


def test_chain_csv_and_json(capsys):
    _, out, _ = _run(capsys, "chain", "--system", "coul3d", "--max-level", "2", "--format", "csv")
    assert out.splitlines()[0] == "row,column,energy,level,k"
    _, out, _ = _run(capsys, "chain", "--system", "coul3d", "--max-level", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    assert payload["rows"][0]["energy"] == "-1/2"


def test_eval_hydrogen_ground_state(capsys):
    code, out, _ = _run(capsys, "eval", "--system", "coul3d", "--n", "1", "--l", "0", "--points", "0:10:0.5")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "t,re,im"
    assert len(lines) == 22
    assert lines[1] == "0,2,0"
    assert lines[3] == "1,0.735758882343,0"


def test_table_of_both_routes(capsys):
    code, out, _ = _run(capsys, "table", "--poly", "laguerre", "--alpha", "1/2", "--max-degree", "4",
                        "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "degree,power,recurrence,operator,agree"
    assert all(line.endswith("True") for line in lines[1:])
    assert len(lines) == 1 + sum(n + 1 for n in range(5))


def test_output_file(capsys, tmp_path):
    target = tmp_path / "hermite.txt"
    code, out, _ = _run(capsys, "table", "--max-degree", "3", "-o", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").endswith(UNITS_NOTE + "\n")


# =============================================================================
# expr
# =============================================================================
def test_expr_commutator_example(capsys):
    code, out, _ = _run(capsys, "expr", "-e", "[p, exp(-x^2)]")
    assert code == 0
    assert out == "2*i*x*exp(-x^2)\n"


def test_expr_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x*p\n\n[x, p]\n"))
    code, out, _ = _run(capsys, "expr")
    assert code == 0
    assert out == "x*p\ni\n"


def test_expr_parse_error_points_at_the_offset(capsys):
    code, _, err = _run(capsys, "expr", "-e", "x + $")
    lines = err.splitlines()
    assert code == 2
    assert lines[0].startswith("error: offset 4")
    assert lines[1] == "  x + $"
    assert lines[2] == "      ^"


def test_expr_lowering_error(capsys):
    code, out, err = _run(capsys, "expr", "-e", "exp(1 + x)")
    assert code == 2
    assert err.startswith("error:")


# =============================================================================
# verify
# =============================================================================
def test_verify_small_run(capsys, monkeypatch):
    monkeypatch.setitem(pipeline.VERIFY_GRID, "confluence_cases", 3)
    monkeypatch.setitem(pipeline.VERIFY_GRID, "roundtrip_cases", 3)
    code, out, _ = _run(capsys, "verify", "--system", "sho1d", "--max-level", "2")
    assert code == 0
    assert out.startswith("Verification summary")
    assert _field(out, "Failed") == "0"


def test_verify_json_with_printed_coulomb(capsys, monkeypatch):
    monkeypatch.setitem(pipeline.VERIFY_GRID, "confluence_cases", 2)
    monkeypatch.setitem(pipeline.VERIFY_GRID, "roundtrip_cases", 2)
    code, out, _ = _run(capsys, "verify", "--system", "coul3d", "--max-level", "2",
                        "--compare-printed-coulomb", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["expected_mismatches"]
    assert report["config"]["printed_coulomb"] is True


def test_long_report_keys_keep_a_separator(capsys, monkeypatch):
    monkeypatch.setitem(pipeline.VERIFY_GRID, "confluence_cases", 2)
    monkeypatch.setitem(pipeline.VERIFY_GRID, "roundtrip_cases", 2)
    _, out, _ = _run(capsys, "verify", "--system", "coul3d", "--max-level", "2", "--compare-printed-coulomb")
    lines = out.splitlines()
    assert any(line.startswith("printed_coulomb/l=00,n=01: printed norm") for line in lines)
    assert not any(":printed" in line for line in lines)


# =============================================================================
# Configuration
# =============================================================================
def test_run_config_defaults():
    cfg = RunConfig.from_args(build_parser().parse_args(["eval", "--system", "sho1d", "--n", "0",
                                                         "--points", "0:1:1"]))
    assert cfg.fmt == "csv"
    assert cfg.max_level == 12
    cfg.validate()


def test_jobs_must_not_be_zero():
    cfg = RunConfig.from_args(build_parser().parse_args(["verify", "--jobs", "0"]))
    with pytest.raises(ValueError):
        cfg.validate()
