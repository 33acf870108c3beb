"""
LadderKit — Verification Pipeline
Runs every exact and numerical check over the configured grid and returns a
single report dictionary.

Each suite turns into a list of (key, check, args) tasks that fan out over a
joblib worker pool. A check returns a bool or (bool, detail). A check that
raises is recorded as failed with its error; a suite whose grid cannot be
built lands in the report's `errors` block. The report is always assembled,
sorted by key, so identical runs give identical reports.
"""

import logging
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from analysis.builders import build_by_rodrigues, eigencheck, ground_wavefunction, routes_agree
from analysis.nodes import count_nodes
from analysis.quadrature import gram_matrix, inner_product
from analysis.sampling import confluence_case, random_expr
from config.constants import SCHEMA, UNITS_NOTE, VERIFY_GRID
from models.gauge import similarity_check, solve_gauge
from models.ladder import factorization_check, intertwine_check, lowering_op
from models.normalization import (closed_form_constant, exact_ground_norm, normalization_constant,
                                  printed_ground_norm)
from models.system_spec import QuantumNumbers, SystemSpec, all_systems, get_system
from opdsl.lower import to_operator
from opdsl.render import render_text
from polynomials.classical import chain_identity_2d, hermite_parity, laguerre_recurrences
from polynomials.rodrigues import (coulomb_induction_identity, hermite_operator_recurrence,
                                   planar_induction_identity, rodrigues_equivalence)

logger = logging.getLogger(__name__)

Task = Tuple[str, Callable, tuple]


# =============================================================================
# Grids
# =============================================================================
def state_grid(system: SystemSpec, cap: int) -> List[QuantumNumbers]:
    """
    States of the acceptance grid, bounded by `cap`:
        sho1d  n ≤ cap
        osc*d  level + 2k ≤ cap
        coul3d n ≤ cap, all l < n
        coul2d m + k ≤ cap
    """
    if system.name == "sho1d":
        return [QuantumNumbers(0, k) for k in range(cap + 1)]
    if system.is_oscillator:
        return [QuantumNumbers(level, k) for level in range(cap + 1)
                for k in range((cap - level) // 2 + 1)]
    if system.name == "coul3d":
        return [QuantumNumbers(l, n - l - 1) for n in range(1, cap + 1) for l in range(n)]
    return [QuantumNumbers(m, k) for m in range(cap + 1) for k in range(cap - m + 1)]


def principal_grid(system: SystemSpec, cap: int) -> List[QuantumNumbers]:
    """States with principal number ≤ cap."""
    wide = state_grid(system, cap + 1)
    return [qn for qn in wide if qn.principal(system) <= cap]


def _qn_key(system: SystemSpec, qn: QuantumNumbers) -> str:
    label = qn.label(system)
    return ",".join(f"{name}={label[name]:02d}" for name in sorted(label))


# =============================================================================
# Checks (module level so worker processes can unpickle them)
# =============================================================================
def _check_gauge(system: SystemSpec, level: int):
    a = lowering_op(system, level)
    solution = solve_gauge(a, system.shift)
    expected_power = level if system.is_radial else 0
    return similarity_check(a, solution) and solution.ground.power == expected_power


def _check_normalization(system: SystemSpec, qn: QuantumNumbers):
    product = normalization_constant(system, qn)
    closed = closed_form_constant(system, qn)
    return product == closed, {"constant": str(product)}


def _check_ground_norm(system: SystemSpec, level: int, tolerance: float):
    exact = exact_ground_norm(system, level)
    psi = ground_wavefunction(system, level)
    numeric = inner_product(psi, psi)
    passed = exact == printed_ground_norm(system, level) and abs(numeric - 1.0) < tolerance
    return passed, {"norm": str(exact), "quadrature": numeric}


def _check_spectrum(system: SystemSpec, qn: QuantumNumbers):
    energy = system.energy(qn)
    return energy == system.energy_law(qn), {"energy": str(energy)}


def _check_recurrences(k: int, alpha: Fraction):
    results = laguerre_recurrences(k, alpha)
    return all(results.values()), {name: ok for name, ok in sorted(results.items())}


def _check_eigen(system: SystemSpec, qn: QuantumNumbers):
    residual = eigencheck(system, build_by_rodrigues(system, qn))
    return residual.is_zero, {"residual_terms": len(residual)}


def _check_orthonormality(system: SystemSpec, level: int, size: int, tolerance: float):
    states = [build_by_rodrigues(system, QuantumNumbers(level, k)) for k in range(size)]
    gram = gram_matrix(states)
    deviation = float(np.max(np.abs(gram - np.eye(size))))
    return deviation < tolerance, {"max_deviation": deviation}


def _check_nodes(system: SystemSpec, qn: QuantumNumbers):
    counts = count_nodes(build_by_rodrigues(system, qn))
    return counts["exact"] == counts["sampled"] == counts["expected"], counts


def _check_confluence(seed: int, index: int):
    return confluence_case(np.random.default_rng([seed, index]))


def _check_roundtrip(seed: int, index: int):
    expr = random_expr(np.random.default_rng([seed, 1_000_000 + index]))
    text = render_text(expr)
    return to_operator(text) == expr, {"text": text}


def _check_commutator_example():
    text = render_text(to_operator("[p, exp(-x^2)]"))
    return text == "2*i*x*exp(-x^2)", {"text": text}


def _check_printed_coulomb(qn: QuantumNumbers, tolerance: float):
    coul3d = get_system("coul3d")
    printed = build_by_rodrigues(coul3d, qn, printed_coulomb=True)
    rederived = build_by_rodrigues(coul3d, qn)
    printed_norm = inner_product(printed, printed)
    rederived_norm = inner_product(rederived, rederived)
    return abs(rederived_norm - 1.0) < tolerance, {
        "printed_norm": printed_norm,
        "rederived_norm": rederived_norm,
        "mismatch": abs(printed_norm - 1.0) >= tolerance,
    }


def run_check(key: str, check: Callable, args: tuple, timings: bool) -> Dict[str, object]:
    start = time.perf_counter()
    record: Dict[str, object] = {"key": key}
    try:
        outcome = check(*args)
        passed, detail = outcome if isinstance(outcome, tuple) else (outcome, None)
        record["passed"] = bool(passed)
        if detail is not None:
            record["detail"] = detail
    except Exception as e:
        record["passed"] = False
        record["error"] = f"{type(e).__name__}: {e}"
    if timings:
        record["seconds"] = round(time.perf_counter() - start, 6)
    return record


# =============================================================================
# Pipeline
# =============================================================================
class VerificationPipeline:
    """
    Parameters
    ----------
    systems : sequence of str
        System names, or ["all"].
    max_level : int
        Upper bound on levels and on every state grid.
    seed : int
        Seed of the randomized suites.
    jobs : int
        joblib worker count.
    printed_coulomb : bool
        Add the printed-prefactor comparison for coul3d.
    timings : bool
        Record wall time per check (breaks byte-identical reports).
    """

    def __init__(self, systems: Sequence[str] = ("all",), max_level: int = 12, seed: int = 0,
                 jobs: int = 1, printed_coulomb: bool = False, timings: bool = False,
                 grid: Optional[Dict] = None):
        if "all" in systems:
            self.systems = all_systems()
        else:
            self.systems = [get_system(name) for name in systems]
        self.max_level = max_level
        self.seed = seed
        self.jobs = jobs
        self.printed_coulomb = printed_coulomb
        self.timings = timings
        self.grid = dict(VERIFY_GRID, **(grid or {}))

    def _cap(self, name: str) -> int:
        return min(self.grid[name], self.max_level)

    def _names(self) -> List[str]:
        return [s.name for s in self.systems]

    # ------------------------------------------------------------------
    # Suites
    # ------------------------------------------------------------------
    def _identity_tasks(self) -> List[Task]:
        tasks = []
        for system in self.systems:
            levels = range(self.max_level + 1) if system.is_radial else [0]
            for level in levels:
                tail = f"{system.name}/level={level:02d}"
                tasks.append((f"factorization/{tail}", factorization_check, (system, level)))
                tasks.append((f"intertwining/{tail}", intertwine_check, (system, level)))
                tasks.append((f"gauge/{tail}", _check_gauge, (system, level)))
        return tasks

    def _grid_cap(self, system: SystemSpec) -> int:
        if system.name == "sho1d":
            return self._cap("hermite_max")
        if system.name == "osc3d":
            return self._cap("osc3d_max")
        if system.name == "coul3d":
            return self._cap("coul3d_max")
        return self._cap("planar_max")

    def _state_tasks(self) -> List[Task]:
        tasks = []
        tolerance = self.grid["ground_tolerance"]
        for system in self.systems:
            for qn in state_grid(system, self._grid_cap(system)):
                tail = f"{system.name}/{_qn_key(system, qn)}"
                tasks.append((f"rodrigues/{tail}", rodrigues_equivalence, (system, qn)))
                tasks.append((f"spectra/{tail}", _check_spectrum, (system, qn)))
                if system.is_radial:
                    tasks.append((f"normalization/{tail}", _check_normalization, (system, qn)))
            levels = range(self._cap("max_level") + 1) if system.is_radial else [0]
            for level in levels:
                tasks.append((f"ground_norms/{system.name}/level={level:02d}",
                              _check_ground_norm, (system, level, tolerance)))
        return tasks

    def _eigen_grid(self, system: SystemSpec) -> List[QuantumNumbers]:
        """The acceptance grid plus every state with principal number within max_level."""
        grid = state_grid(system, self._grid_cap(system))
        return grid + [qn for qn in principal_grid(system, self._cap("max_level")) if qn not in grid]

    def _eigen_tasks(self) -> List[Task]:
        tasks = []
        for system in self.systems:
            for qn in self._eigen_grid(system):
                tail = f"{system.name}/{_qn_key(system, qn)}"
                tasks.append((f"eigencheck/{tail}", _check_eigen, (system, qn)))
                tasks.append((f"routes/{tail}", routes_agree, (system, qn)))
                if qn.k <= self.grid["gram_size"]:
                    tasks.append((f"nodes/{tail}", _check_nodes, (system, qn)))
        return tasks

    def _orthonormality_tasks(self) -> List[Task]:
        tasks = []
        size, tolerance = self.grid["gram_size"], self.grid["gram_tolerance"]
        for system in self.systems:
            levels = range(min(size, self.max_level + 1)) if system.is_radial else [0]
            for level in levels:
                tasks.append((f"orthonormality/{system.name}/level={level:02d}",
                              _check_orthonormality, (system, level, size, tolerance)))
        return tasks

    def _polynomial_tasks(self) -> List[Task]:
        tasks = []
        names = self._names()
        top = self._cap("recurrence_alpha_max")
        alphas = [Fraction(2 * j + 1, 2) for j in range(top + 1)] + [Fraction(j) for j in range(1, top + 1)]
        for alpha in alphas:
            for k in range(top + 1):
                tasks.append((f"recurrences/laguerre/alpha={float(alpha):05.1f}/k={k:02d}",
                              _check_recurrences, (k, alpha)))
        if "sho1d" in names:
            for n in range(self._cap("hermite_max") + 3):
                tasks.append((f"recurrences/hermite_parity/n={n:02d}", hermite_parity, (n,)))
            for n in range(1, self._cap("hermite_max")):
                tasks.append((f"recurrences/hermite_operator/n={n:02d}",
                              hermite_operator_recurrence, (n,)))
        chain_max = self._cap("chain_identity_max")
        if "coul2d" in names:
            for m in range(1, chain_max + 1):
                for k in range(chain_max + 1):
                    tasks.append((f"chain_identity/m={m:02d}/k={k:02d}", chain_identity_2d, (k, m)))
                    tasks.append((f"induction/coul2d/m={m:02d}/k={k:02d}",
                                  planar_induction_identity, (m, k)))
        if "coul3d" in names:
            for n in range(2, self._cap("coul3d_max") + 1):
                for l in range(n - 1):
                    tasks.append((f"induction/coul3d/l={l:02d},n={n:02d}",
                                  coulomb_induction_identity, (n, l)))
        return tasks

    def _random_tasks(self) -> List[Task]:
        tasks = [("roundtrip/commutator_example", _check_commutator_example, ())]
        for i in range(self.grid["confluence_cases"]):
            tasks.append((f"confluence/case={i:04d}", _check_confluence, (self.seed, i)))
        for i in range(self.grid["roundtrip_cases"]):
            tasks.append((f"roundtrip/case={i:04d}", _check_roundtrip, (self.seed, i)))
        return tasks

    def _printed_coulomb_tasks(self) -> List[Task]:
        if not self.printed_coulomb or "coul3d" not in self._names():
            return []
        tolerance = self.grid["ground_tolerance"]
        tasks = []
        for n in range(1, 5):
            for l in range(min(n, 3)):
                qn = QuantumNumbers(l, n - l - 1)
                tasks.append((f"printed_coulomb/l={l:02d},n={n:02d}",
                              _check_printed_coulomb, (qn, tolerance)))
        return tasks

    # ------------------------------------------------------------------
    # Run
    # ------------------------------------------------------------------
    def run(self) -> Dict[str, object]:
        errors: Dict[str, str] = {}
        tasks: List[Task] = []
        suites = {
            "identities": self._identity_tasks,
            "states": self._state_tasks,
            "eigen": self._eigen_tasks,
            "orthonormality": self._orthonormality_tasks,
            "polynomials": self._polynomial_tasks,
            "random": self._random_tasks,
            "printed_coulomb": self._printed_coulomb_tasks,
        }
        for name, build in suites.items():
            try:
                tasks.extend(build())
            except Exception as e:
                errors[name] = str(e)

        logger.info("running %d checks on %d worker(s)", len(tasks), self.jobs)
        start = time.perf_counter()
        records = Parallel(n_jobs=self.jobs)(
            delayed(run_check)(key, check, args, self.timings) for key, check, args in tasks
        )
        elapsed = time.perf_counter() - start
        logger.info("verification finished in %.2f s", elapsed)

        records = sorted(records, key=lambda r: r["key"])
        mismatches = [
            {"key": r["key"], **r["detail"]}
            for r in records
            if r["key"].startswith("printed_coulomb/") and r.get("detail", {}).get("mismatch")
        ]
        failed = [r["key"] for r in records if not r["passed"]]
        for key in failed:
            logger.debug("check failed: %s", key)

        report = {
            "schema": SCHEMA,
            "units": UNITS_NOTE,
            "config": {
                "systems": self._names(),
                "max_level": self.max_level,
                "seed": self.seed,
                "printed_coulomb": self.printed_coulomb,
            },
            "summary": {
                "checks": len(records),
                "passed": len(records) - len(failed),
                "failed": len(failed),
                "suite_errors": len(errors),
                "by_suite": _suite_counts(records),
            },
            "checks": records,
            "expected_mismatches": mismatches,
            "errors": errors,
        }
        if self.timings:
            report["summary"]["seconds"] = round(elapsed, 3)
        return report


def _suite_counts(records: Sequence[Dict[str, object]]) -> Dict[str, Dict[str, int]]:
    counts: Dict[str, Dict[str, int]] = {}
    for r in records:
        suite = r["key"].split("/", 1)[0]
        entry = counts.setdefault(suite, {"passed": 0, "failed": 0})
        entry["passed" if r["passed"] else "failed"] += 1
    return dict(sorted(counts.items()))


def report_passed(report: Dict[str, object]) -> bool:
    summary = report["summary"]
    return summary["failed"] == 0 and summary["suite_errors"] == 0
