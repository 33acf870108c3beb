"""
LadderKit — Command-Line Front Door
=====================================
Exact factorization-method and operator-Rodrigues engine

Entry point: python app.py <command> [options]

  derive   one state by the ladder route and the Rodrigues route
  verify   the identity, spectrum, eigen, orthonormality and DSL suites
  chain    the factorization-chain energy grid
  eval     ψ(t) on a range of points
  expr     parse, normal-order and render DSL expressions
  table    Hermite / Laguerre coefficients from both routes

Exit codes: 0 success, 1 a check or route comparison failed, 2 bad input.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

# ── Internal imports ──────────────────────────────────────────────────────────
from config.constants import DEFAULTS, EXIT, MIN_PRECISION
from config.systems import SYSTEM_NAMES

from algebra.errors import LadderKitError, ParseError

from models.chain import chain_energies
from models.normalization import closed_form_constant, normalization_constant
from models.system_spec import QuantumNumbers, check_level, get_system

from analysis.builders import build_by_ladder, build_by_rodrigues, eigencheck, routes_agree
from analysis.verification_pipeline import VerificationPipeline, report_passed

from opdsl.lower import to_operator
from opdsl.render import render

from visualization.report_generator import derive_report, verify_report
from visualization.tables import (chain_grid, chain_table, coefficient_table, parse_points,
                                  point_table, render_table)

logger = logging.getLogger("ladderkit")

COMMAND_FORMATS = {
    "derive": ("text", "latex", "json"),
    "verify": ("text", "json"),
    "chain": ("text", "csv", "json"),
    "eval": ("csv", "text", "json"),
    "expr": ("text", "latex", "json"),
    "table": ("text", "csv", "json"),
}


# ─────────────────────────────────────────────────────────────────────────────
# Run configuration
# ─────────────────────────────────────────────────────────────────────────────
@dataclass
class RunConfig:
    command: str
    system: Optional[str] = None
    n: Optional[int] = None
    l: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    fmt: str = DEFAULTS["format"]
    precision: int = DEFAULTS["precision"]
    max_level: int = DEFAULTS["max_level"]
    seed: int = DEFAULTS["seed"]
    jobs: int = DEFAULTS["jobs"]
    compare_printed_coulomb: bool = False
    timings: bool = False
    start_level: int = 0
    points: Optional[str] = None
    expressions: List[str] = field(default_factory=list)
    poly: str = "hermite"
    alpha: Fraction = Fraction(0)
    max_degree: int = 6
    output: Optional[str] = None
    verbosity: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        values = {name: getattr(args, name) for name in cls.__dataclass_fields__
                  if hasattr(args, name) and getattr(args, name) is not None}
        if args.fmt is None:
            values["fmt"] = COMMAND_FORMATS[args.command][0]
        if getattr(args, "expression", None) is not None:
            values["expressions"] = [args.expression]
        return cls(**values)

    def validate(self):
        """Cross-field checks argparse cannot express; raises ValueError."""
        allowed = COMMAND_FORMATS[self.command]
        if self.fmt not in allowed:
            raise ValueError(f"{self.command} supports --format {', '.join(allowed)}, not {self.fmt}")
        if self.precision < MIN_PRECISION:
            raise ValueError(f"--precision must be at least {MIN_PRECISION} bits, got {self.precision}")
        if self.max_level < 0:
            raise ValueError(f"--max-level must be non-negative, got {self.max_level}")
        if self.jobs == 0:
            raise ValueError("--jobs must be a positive count or negative (joblib convention)")

    def quantum_numbers(self):
        system = get_system(self.system)
        qn = QuantumNumbers.from_flags(system, n=self.n, l=self.l, m=self.m, k=self.k)
        check_level(qn.level, self.max_level)
        check_level(qn.k, self.max_level)
        return system, qn


# ─────────────────────────────────────────────────────────────────────────────
# Commands: each returns (rendered output, exit code)
# ─────────────────────────────────────────────────────────────────────────────
def derive(system, qn, printed_coulomb: bool = False) -> dict:
    ladder = build_by_ladder(system, qn)
    return {
        "system": system,
        "ladder": ladder,
        "rodrigues": build_by_rodrigues(system, qn, printed_coulomb),
        "constant": normalization_constant(system, qn),
        "closed_form": closed_form_constant(system, qn),
        "agree": routes_agree(system, qn),
        "residual": eigencheck(system, ladder),
    }


def cmd_derive(cfg: RunConfig):
    system, qn = cfg.quantum_numbers()
    logger.info("deriving %s %s", system.name, qn.label(system))
    d = derive(system, qn, cfg.compare_printed_coulomb)
    ok = d["agree"] and d["residual"].is_zero and d["constant"] == d["closed_form"]
    return derive_report(d, cfg.fmt, cfg.precision), EXIT["ok"] if ok else EXIT["failure"]


def cmd_verify(cfg: RunConfig):
    systems = [cfg.system] if cfg.system else ["all"]
    pipeline = VerificationPipeline(
        systems=systems,
        max_level=cfg.max_level,
        seed=cfg.seed,
        jobs=cfg.jobs,
        printed_coulomb=cfg.compare_printed_coulomb,
        timings=cfg.timings,
    )
    report = pipeline.run()
    ok = report_passed(report)
    return verify_report(report, cfg.fmt), EXIT["ok"] if ok else EXIT["failure"]


def cmd_chain(cfg: RunConfig):
    system = get_system(cfg.system)
    table = chain_table(chain_energies(system, cfg.max_level, cfg.start_level))
    if cfg.fmt == "text":
        return render_table(chain_grid(table), "text", index=True), EXIT["ok"]
    return render_table(table, cfg.fmt), EXIT["ok"]


def cmd_eval(cfg: RunConfig):
    if cfg.points is None:
        raise ValueError("eval needs --points start:stop:step")
    system, qn = cfg.quantum_numbers()
    psi = build_by_rodrigues(system, qn, cfg.compare_printed_coulomb)
    return render_table(point_table(psi, parse_points(cfg.points)), cfg.fmt), EXIT["ok"]


def cmd_table(cfg: RunConfig):
    df = coefficient_table(cfg.poly, cfg.max_degree, cfg.alpha)
    ok = bool(df["agree"].all())
    return render_table(df, cfg.fmt), EXIT["ok"] if ok else EXIT["failure"]


def cmd_expr(cfg: RunConfig):
    """Each expression on its own output line; a bad line is reported and skipped."""
    sources = cfg.expressions or [line.rstrip("\n") for line in sys.stdin]
    lines, code = [], EXIT["ok"]
    for source in sources:
        if not source.strip():
            continue
        try:
            lines.append(render(to_operator(source, cfg.max_level), cfg.fmt))
        except ParseError as e:
            _report_parse_error(source, e)
            code = EXIT["bad_input"]
        except LadderKitError as e:
            print(f"error: {e}", file=sys.stderr)
            code = EXIT["bad_input"]
    return "\n".join(lines), code


COMMANDS = {
    "derive": cmd_derive,
    "verify": cmd_verify,
    "chain": cmd_chain,
    "eval": cmd_eval,
    "expr": cmd_expr,
    "table": cmd_table,
}


# ─────────────────────────────────────────────────────────────────────────────
# Argument parsing
# ─────────────────────────────────────────────────────────────────────────────
def _add_common(p: argparse.ArgumentParser):
    p.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0,
                   help="-v for INFO, -vv for DEBUG diagnostics on stderr")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "latex", "csv"),
                   help="output format (the first supported one by default)")
    p.add_argument("--precision", type=int, help=f"bits for exact-constant floats (≥ {MIN_PRECISION})")
    p.add_argument("--max-level", dest="max_level", type=int, help="guard on level and chain depth")
    p.add_argument("-o", "--output", help="write the result to a file instead of stdout")


def _add_state(p: argparse.ArgumentParser, required_system: bool = True):
    p.add_argument("--system", choices=SYSTEM_NAMES, required=required_system)
    p.add_argument("--n", type=int, help="principal quantum number")
    p.add_argument("--l", type=int, help="orbital index (3D systems)")
    p.add_argument("--m", type=int, help="magnetic index (2D systems); the sign enters the angular factor only")
    p.add_argument("--k", type=int, help="radial quantum number / number of raising steps")
    p.add_argument("--compare-printed-coulomb", dest="compare_printed_coulomb", action="store_true",
                   help="use the printed Coulomb prefactor instead of the re-derived one")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladderkit",
        description="Exact factorization method and operator Rodrigues formulas for five quantum systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="derive one wavefunction by both routes")
    _add_state(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--system", choices=SYSTEM_NAMES + ("all",))
    p.add_argument("--seed", type=int, help="seed of the randomized suites")
    p.add_argument("--jobs", type=int, help="joblib worker count")
    p.add_argument("--timings", action="store_true", help="record wall time per check")
    p.add_argument("--compare-printed-coulomb", dest="compare_printed_coulomb", action="store_true",
                   help="report the printed Coulomb prefactor as an expected mismatch")
    _add_common(p)

    p = sub.add_parser("chain", help="print the factorization-chain energy grid")
    p.add_argument("--system", choices=SYSTEM_NAMES, required=True)
    p.add_argument("--start-level", dest="start_level", type=int, help="angular index of the first column")
    _add_common(p)

    p = sub.add_parser("eval", help="tabulate ψ(t) over a range of points")
    _add_state(p)
    p.add_argument("--points", required=True, help="start:stop:step, endpoints inclusive")
    _add_common(p)

    p = sub.add_parser("expr", help="parse, normal-order and render operator expressions")
    p.add_argument("-e", "--expression", help="expression text; lines are read from stdin otherwise")
    _add_common(p)

    p = sub.add_parser("table", help="polynomial coefficient tables from both routes")
    p.add_argument("--poly", choices=("hermite", "laguerre"), default="hermite")
    p.add_argument("--alpha", type=Fraction, help="Laguerre parameter, e.g. 1/2")
    p.add_argument("--max-degree", dest="max_degree", type=int, help="highest degree tabulated")
    _add_common(p)
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s", force=True)


def _report_parse_error(source: str, error: ParseError):
    print(f"error: {error}", file=sys.stderr)
    print(f"  {source}", file=sys.stderr)
    print(f"  {' ' * error.offset}^", file=sys.stderr)


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    elif text:
        print(text)


# ─────────────────────────────────────────────────────────────────────────────
# Entry point
# ─────────────────────────────────────────────────────────────────────────────
def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT["ok"] if e.code == 0 else EXIT["bad_input"]

    _configure_logging(args.verbosity)
    try:
        cfg = RunConfig.from_args(args)
        cfg.validate()
        text, code = COMMANDS[cfg.command](cfg)
    except (LadderKitError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT["bad_input"]

    _emit(text, cfg.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
