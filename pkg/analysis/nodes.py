"""
LadderKit — Node Counting

The oscillation theorem says the k-th state of a chain has exactly k sign
changes on the open domain. Two independent counts:

  exact    real roots of the rational polynomial factor, isolated with
           sympy (u > 0 on the radial half-line, all of ℝ in 1D), bounded
           above by the Descartes sign-variation count
  sampled  sign changes of ψ on a uniform grid, ignoring values that are
           numerically zero
"""

import logging
from typing import Dict

import numpy as np
import sympy

from algebra.errors import WavefunctionError
from analysis.quadrature import cutoff
from analysis.wavefunction import Wavefunction
from config.constants import NODE_SAMPLING
from polynomials.polynomial import Polynomial

logger = logging.getLogger(__name__)

_U = sympy.Symbol("u")


def _sympy_poly(poly: Polynomial) -> sympy.Poly:
    if not poly.is_rational:
        raise WavefunctionError("node counting needs a rational polynomial factor")
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.rational_coeffs())]
    return sympy.Poly(coeffs, _U)


def descartes_bound(poly: Polynomial) -> int:
    """Sign variations of the non-zero coefficients: an upper bound on positive roots."""
    signs = [1 if c > 0 else -1 for c in poly.rational_coeffs() if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def exact_root_count(poly: Polynomial, positive_only: bool) -> int:
    """Distinct real roots of odd multiplicity, restricted to u > 0 when positive_only."""
    if poly.degree < 1:
        return 0
    sp = _sympy_poly(poly)
    intervals = sp.intervals(inf=0) if positive_only else sp.intervals()
    count = 0
    for (low, high), multiplicity in intervals:
        if multiplicity % 2 == 0:
            continue
        if positive_only and low == 0 and high == 0:
            continue
        count += 1
    if positive_only and count > descartes_bound(poly):
        raise WavefunctionError("root isolation exceeded the Descartes bound")
    return count


def sampled_sign_changes(psi: Wavefunction, config: Dict = NODE_SAMPLING) -> int:
    upper = cutoff([psi])
    lower = 0.0 if psi.system.is_radial else -upper
    # open interval: drop the endpoints
    grid = np.linspace(lower, upper, config["samples"] + 2)[1:-1]
    values = np.real(psi.values(grid))
    scale = np.max(np.abs(values)) if values.size else 0.0
    significant = values[np.abs(values) > config["zero_tolerance"] * scale]
    signs = np.sign(significant)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def count_nodes(psi: Wavefunction) -> Dict[str, int]:
    """Exact and sampled node counts of ψ on the open domain."""
    exact = exact_root_count(psi.poly, positive_only=psi.system.is_radial)
    sampled = sampled_sign_changes(psi)
    logger.debug("%s %s: %d exact nodes, %d sampled", psi.system.name, psi.qn, exact, sampled)
    return {"expected": psi.qn.k, "exact": exact, "sampled": sampled}


def node_check(psi: Wavefunction) -> bool:
    counts = count_nodes(psi)
    return counts["exact"] == counts["sampled"] == counts["expected"]
