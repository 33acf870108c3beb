"""
LadderKit — Report Generator

Renders the results of `derive` and `verify` as text, LaTeX or JSON.
Text reports are built from titled sections of aligned key/value lines.
"""

import json
from typing import Dict, List

import mpmath

from algebra.operators import OpExpr
from algebra.scalar import scalar_to_float
from analysis.wavefunction import Wavefunction
from config.constants import FLOAT_FORMAT, SCHEMA, UNITS_NOTE
from models.system_spec import SystemSpec
from opdsl.render import (expr_to_json, polynomial_latex, polynomial_text, render_latex,
                          render_text, scalar_latex, scalar_text)

KEY_WIDTH = 26


def _section_title(lines: List[str], title: str):
    if lines:
        lines.append("")
    lines.append(title)
    lines.append("-" * len(title))


def _kv(lines: List[str], key: str, value: object):
    lines.append(f"{key + ':':<{KEY_WIDTH - 1}} {value}")


def _float(value: mpmath.mpc, precision: int) -> str:
    """Decimal rendering carrying the digits the working precision supports."""
    digits = mpmath.libmp.prec_to_dps(precision)
    if value.imag == 0:
        return mpmath.nstr(value.real, digits)
    return f"{mpmath.nstr(value.real, digits)} + {mpmath.nstr(value.imag, digits)}i"


def _qn_text(system: SystemSpec, psi: Wavefunction) -> str:
    label = psi.qn.label(system)
    return ", ".join(f"{name}={label[name]}" for name in sorted(label))


# =============================================================================
# derive
# =============================================================================
def derive_report(derivation: Dict[str, object], fmt: str = "text", precision: int = 64) -> str:
    """
    Parameters
    ----------
    derivation : dict
        Output of app.derive: system, ladder and rodrigues Wavefunctions,
        constant (chain product C), closed_form, agree, phase, residual.
    fmt : {"text", "latex", "json"}
    precision : int
        Bits used for the float rendering of exact constants.
    """
    if fmt == "json":
        return _derive_json(derivation)
    if fmt == "latex":
        return _derive_latex(derivation)
    return _derive_text(derivation, precision)


def _derive_text(d: Dict[str, object], precision: int) -> str:
    system: SystemSpec = d["system"]
    psi: Wavefunction = d["ladder"]
    rod: Wavefunction = d["rodrigues"]
    lines: List[str] = []

    _section_title(lines, f"{system.title} ({system.name})")
    _kv(lines, "Quantum numbers", _qn_text(system, psi))
    _kv(lines, "Energy", psi.energy)
    constant = _float(scalar_to_float(d["constant"], precision), precision)
    _kv(lines, "Chain constant C", f"{scalar_text(d['constant'])}  [{constant}]")
    _kv(lines, "Closed-form C", scalar_text(d["closed_form"]))
    norm = _float(scalar_to_float(rod.norm, precision), precision)
    _kv(lines, "Norm", f"{scalar_text(rod.norm)}  [{norm}]")
    _kv(lines, "Phase", f"(-i)^{psi.phase}")
    if system.dimension == 2:
        _kv(lines, "Angular factor", f"{scalar_text(rod.angular)} * exp(i*m*phi)")

    _section_title(lines, "Polynomial")
    _kv(lines, "Argument", f"u = {rod.poly.argument.label}")
    _kv(lines, "P(u)", polynomial_text(rod.poly))

    _section_title(lines, "Wavefunction")
    _kv(lines, "Envelope", render_text(_envelope_expr(rod)))
    _kv(lines, "Ladder route", render_text(psi.to_state().expr))
    _kv(lines, "Rodrigues route", render_text(rod.to_state().expr))

    _section_title(lines, "Checks")
    _kv(lines, "Routes agree", "yes" if d["agree"] else "NO")
    _kv(lines, "Eigen residual", render_text(d["residual"]))
    _kv(lines, "Closed form matches C", "yes" if d["constant"] == d["closed_form"] else "NO")
    lines.append("")
    lines.append(UNITS_NOTE)
    return "\n".join(lines)


def _envelope_expr(psi: Wavefunction) -> OpExpr:
    return OpExpr.function(psi.envelope)


def _derive_latex(d: Dict[str, object]) -> str:
    system: SystemSpec = d["system"]
    rod: Wavefunction = d["rodrigues"]
    psi: Wavefunction = d["ladder"]
    phase = "" if psi.phase == 0 else f"(-i)^{{{psi.phase}}}\\,"
    lines = [
        f"% {system.title}, {_qn_text(system, psi)}",
        f"% {UNITS_NOTE}",
        f"E = {_fraction_latex(psi.energy)}",
        f"C = {scalar_latex(d['constant'])}",
        f"P(u) = {polynomial_latex(rod.poly)}, \\quad u = {rod.poly.argument.label}",
        f"\\psi = {phase}{render_latex(rod.to_state().expr)}",
    ]
    return "\n".join(lines)


def _fraction_latex(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _derive_json(d: Dict[str, object]) -> str:
    payload = {
        "schema": SCHEMA,
        "units": UNITS_NOTE,
        "system": d["system"].name,
        "ladder": d["ladder"].to_json(),
        "rodrigues": d["rodrigues"].to_json(),
        "constant": d["constant"].to_json(),
        "closed_form": d["closed_form"].to_json(),
        "agree": d["agree"],
        "residual": expr_to_json(d["residual"]),
    }
    return json.dumps(payload, sort_keys=True, indent=2)


# =============================================================================
# verify
# =============================================================================
def verify_report(report: Dict[str, object], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    summary = report["summary"]
    lines: List[str] = []
    _section_title(lines, "Verification summary")
    _kv(lines, "Systems", ", ".join(report["config"]["systems"]))
    _kv(lines, "Max level", report["config"]["max_level"])
    _kv(lines, "Seed", report["config"]["seed"])
    _kv(lines, "Checks", summary["checks"])
    _kv(lines, "Passed", summary["passed"])
    _kv(lines, "Failed", summary["failed"])

    _section_title(lines, "Suites")
    for suite, counts in summary["by_suite"].items():
        _kv(lines, suite, f"{counts['passed']} passed, {counts['failed']} failed")

    failures = [r for r in report["checks"] if not r["passed"]]
    if failures:
        _section_title(lines, "Failures")
        for record in failures:
            lines.append(f"{record['key']}  {record.get('error', '')}".rstrip())

    if report["expected_mismatches"]:
        _section_title(lines, "Expected mismatches (printed Coulomb prefactor)")
        for entry in report["expected_mismatches"]:
            _kv(lines, entry["key"],
                f"printed norm {FLOAT_FORMAT % entry['printed_norm']}, "
                f"re-derived {FLOAT_FORMAT % entry['rederived_norm']}")

    if report["errors"]:
        _section_title(lines, "Suite errors")
        for suite, message in sorted(report["errors"].items()):
            _kv(lines, suite, message)
    lines.append("")
    lines.append(UNITS_NOTE)
    return "\n".join(lines)
