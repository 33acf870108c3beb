"""
LadderKit — Numerical Inner Products

Adaptive composite Gauss–Legendre quadrature of ψ1·ψ2·t^measure on [0, T]
(radial) or [−T, T] (1D). The cutoff T is the point beyond which the
envelope bound

    |norm| · Σ|c_j||u(t)|^j · |t|^a · exp(g t² + l t)

of the integrand stays below the tail bound. Panel counts double until two
successive estimates agree.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Sequence, Tuple

import numpy as np
from scipy.special import roots_legendre

from algebra.errors import QuadratureNoConvergence
from analysis.wavefunction import Wavefunction
from config.constants import QUADRATURE

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_legendre(order)
    return nodes, weights


def _panel_sum(fn: Callable[[np.ndarray], np.ndarray], lower: float, upper: float,
               panels: int, order: int) -> float:
    nodes, weights = _legendre(order)
    edges = np.linspace(lower, upper, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    points = mid[:, None] + half[:, None] * nodes[None, :]
    values = fn(points)
    return float(np.sum(values * weights[None, :] * half[:, None]))


def integrate(fn: Callable[[np.ndarray], np.ndarray], lower: float, upper: float,
              config: Dict = QUADRATURE) -> float:
    """
    Integrate a vectorized real function over [lower, upper].

    Raises
    ------
    QuadratureNoConvergence if successive estimates still differ after
    `max_doublings` refinements.
    """
    panels = config["initial_panels"]
    previous = _panel_sum(fn, lower, upper, panels, config["order"])
    change = float("inf")
    for _ in range(config["max_doublings"]):
        panels *= 2
        estimate = _panel_sum(fn, lower, upper, panels, config["order"])
        change = abs(estimate - previous)
        if change < config["rel_change"] * max(1.0, abs(estimate)):
            logger.debug("quadrature converged on %d panels: %.15g", panels, estimate)
            return estimate
        previous = estimate
    raise QuadratureNoConvergence(previous, change, panels)


# -----------------------------------------------------------------------------
# Cutoff
# -----------------------------------------------------------------------------
def envelope_bound(psi: Wavefunction, t: np.ndarray) -> np.ndarray:
    """Pointwise upper bound of |ψ(t)| from the absolute polynomial coefficients."""
    t = np.abs(np.asarray(t, dtype=float))
    u = np.abs(psi.poly.argument.of(t))
    magnitude = np.zeros_like(t)
    for c in reversed(psi.poly.coeffs):
        magnitude = magnitude * u + abs(c.to_complex())
    return abs(psi.norm.to_complex()) * magnitude * np.abs(psi.envelope.evaluate(t))


def cutoff(states: Sequence[Wavefunction], config: Dict = QUADRATURE) -> float:
    """Smallest grid point T beyond which the product bound stays under the tail bound."""
    grid = np.geomspace(1.0, config["max_cutoff"], 4000)
    measure = float(states[0].measure)
    bound = np.ones_like(grid) * grid ** measure
    for psi in states:
        bound = bound * envelope_bound(psi, grid)
    above = np.nonzero(bound >= config["tail_bound"])[0]
    if above.size == 0:
        return float(grid[0])
    index = min(above[-1] + 1, grid.size - 1)
    return float(grid[index])


# -----------------------------------------------------------------------------
# Inner products
# -----------------------------------------------------------------------------
def _check_compatible(psi1: Wavefunction, psi2: Wavefunction):
    if psi1.system.name != psi2.system.name:
        raise ValueError(f"states of different systems: {psi1.system.name} and {psi2.system.name}")
    if psi1.system.is_radial and psi1.qn.level != psi2.qn.level:
        raise ValueError(
            f"radial states with different angular index ({psi1.qn.level} vs {psi2.qn.level}) "
            "are orthogonal through their angular parts"
        )


def inner_product(psi1: Wavefunction, psi2: Wavefunction, config: Dict = QUADRATURE) -> float:
    """
    ∫ ψ1 ψ2 t^measure dt over the system's domain, phases omitted.

    Returns
    -------
    float with an absolute error well inside 1e-10 for unit-norm states.
    """
    _check_compatible(psi1, psi2)
    upper = cutoff([psi1, psi2], config)
    lower = 0.0 if psi1.system.is_radial else -upper
    measure = float(psi1.measure)

    def integrand(t):
        weight = np.abs(t) ** measure if measure else 1.0
        return np.real(psi1.values(t) * psi2.values(t)) * weight

    return integrate(integrand, lower, upper, config)


def gram_matrix(states: Sequence[Wavefunction], config: Dict = QUADRATURE) -> np.ndarray:
    size = len(states)
    gram = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            gram[i, j] = gram[j, i] = inner_product(states[i], states[j], config)
    return gram
