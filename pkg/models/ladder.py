"""
LadderKit — Ladder Operators and the Factorization Chain

Implements:
  Â_level  = (1/√2)(p − i W_level)
  Â†_level = (1/√2)(p + i W_level)
  Ĥ_level  = p²/2 + centrifugal/x² + V

and the two exact identities every chain link must satisfy:
  Â†Â + E(level) = Ĥ_level
  ÂÂ† + E(level) = Ĥ_{level+1} + shift        (factorization chain)
  Ĥ_level Â† = Â† (Ĥ_{level+1} + shift)        (intertwining)
"""

import logging
from fractions import Fraction

from algebra.operators import OpExpr, adjoint
from algebra.scalar import I, INV_SQRT2
from models.system_spec import SystemSpec, check_level

logger = logging.getLogger(__name__)


def superpotential_op(system: SystemSpec, level: int) -> OpExpr:
    alpha, beta, gamma = system.superpotential(level)
    return (
        OpExpr.coordinate(-1, alpha)
        + OpExpr.coordinate(1, beta)
        + OpExpr.scalar(gamma)
    )


def lowering_op(system: SystemSpec, level: int) -> OpExpr:
    check_level(level)
    w = superpotential_op(system, level)
    return (OpExpr.momentum(1) - w.scale(I)).scale(INV_SQRT2)


def raising_op(system: SystemSpec, level: int) -> OpExpr:
    return adjoint(lowering_op(system, level))


def hamiltonian(system: SystemSpec, level: int) -> OpExpr:
    check_level(level)
    kinetic = OpExpr.momentum(2, Fraction(1, 2))
    centrifugal = OpExpr.coordinate(-2, system.centrifugal(level))
    if system.is_oscillator:
        potential = OpExpr.coordinate(2, Fraction(1, 2))
    else:
        potential = OpExpr.coordinate(-1, -1)
    return kinetic + centrifugal + potential


def factorization_check(system: SystemSpec, level: int) -> bool:
    """True iff Â†Â + E = Ĥ_level and ÂÂ† + E = Ĥ_{level+1} + shift hold exactly."""
    a = lowering_op(system, level)
    a_dag = adjoint(a)
    e = system.ground_energy(level)

    lower_ok = (a_dag * a + e - hamiltonian(system, level)).is_zero
    upper_ok = (a * a_dag + e - hamiltonian(system, level + 1) - system.chain_shift).is_zero
    if not (lower_ok and upper_ok):
        logger.debug("factorization failed for %s level %d (A†A: %s, AA†: %s)",
                     system.name, level, lower_ok, upper_ok)
    return lower_ok and upper_ok


def intertwine_check(system: SystemSpec, level: int) -> bool:
    """True iff Ĥ_level Â†_level = Â†_level (Ĥ_{level+1} + shift) exactly."""
    a_dag = raising_op(system, level)
    shifted = hamiltonian(system, level + 1) + system.chain_shift
    residual = hamiltonian(system, level) * a_dag - a_dag * shifted
    if not residual.is_zero:
        logger.debug("intertwining failed for %s level %d: %d residual terms",
                     system.name, level, len(residual))
    return residual.is_zero
