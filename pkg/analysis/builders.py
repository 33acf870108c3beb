"""
LadderKit — Eigenfunction Builders

Two independent routes to the same normalized eigenfunction:

  build_by_ladder     C · Â†_level Â†_{level+1} … Â†_{top−1} |φ_top⟩, applied
                      to the function-class ground state of the top level
  build_by_rodrigues  final_norm · P(u) · envelope, with P from the nested
                      commutator form

The ladder route finds its own phase (a power of −i); the Rodrigues route
is phase-free, and routes_agree compares the two after applying the
expected phase.
"""

import logging
from fractions import Fraction

from algebra.errors import WavefunctionError
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr
from algebra.scalar import Scalar, minus_i_power
from algebra.states import FnState, apply_to_state
from analysis.wavefunction import Wavefunction
from models.gauge import solve_gauge
from models.ladder import hamiltonian, lowering_op, raising_op
from models.normalization import (angular_factor, exact_ground_norm, final_norm,
                                  normalization_constant)
from models.system_spec import QuantumNumbers, SystemSpec, check_level
from polynomials.classical import standard_lead
from polynomials.polynomial import Polynomial
from polynomials.rodrigues import read_polynomial, rodrigues_nested, system_argument

logger = logging.getLogger(__name__)


def _envelope(system: SystemSpec, qn: QuantumNumbers) -> FunctionFactor:
    """x^level · exp(−x²/2) for oscillators, x^level · exp(−x/ν_top) for Coulomb."""
    power = qn.level if system.is_radial else 0
    if system.is_oscillator:
        return FunctionFactor(power, Fraction(-1, 2))
    return FunctionFactor(power, 0, -1 / system.angular_index(qn.level + qn.k))


def expected_phase(system: SystemSpec, qn: QuantumNumbers) -> int:
    """Power of −i the ladder route carries: 3k mod 4 in 1D, k mod 4 for radial chains."""
    if system.is_radial:
        return qn.k % 4
    return (3 * qn.k) % 4


def _phase_of(ratio: Scalar) -> int:
    """q with ratio = (−i)^q · r for a positive real r."""
    if ratio.im == 0 and ratio.re > 0:
        return 0
    if ratio.re == 0 and ratio.im < 0:
        return 1
    if ratio.im == 0 and ratio.re < 0:
        return 2
    if ratio.re == 0 and ratio.im > 0:
        return 3
    raise WavefunctionError(f"leading ratio {ratio} is not a power of −i times a positive real")


# -----------------------------------------------------------------------------
# Ground states
# -----------------------------------------------------------------------------
def ground_wavefunction(system: SystemSpec, level: int) -> Wavefunction:
    """Normalized ground state of Ĥ_level: the gauge envelope F with its exact norm."""
    check_level(level)
    if not system.is_radial:
        level = 0
    gauge = solve_gauge(lowering_op(system, level), system.shift)
    qn = QuantumNumbers(level=level, k=0)
    return Wavefunction(
        system=system,
        qn=qn,
        norm=exact_ground_norm(system, level),
        poly=Polynomial.constant(1, system_argument(system, qn)),
        envelope=gauge.ground,
        measure=system.measure_exponent,
        angular=angular_factor(system),
        route="ground",
    )


# -----------------------------------------------------------------------------
# Routes
# -----------------------------------------------------------------------------
def build_by_ladder(system: SystemSpec, qn: QuantumNumbers) -> Wavefunction:
    """
    Raise the top-level ground state down the chain and read off the
    polynomial in standard normalization.

    Raises
    ------
    NonPolynomialResidue if the envelope does not divide the raised state.
    WavefunctionError if the leading ratio carries an unexpected phase.
    """
    top_level = qn.level + qn.k if system.is_radial else 0
    ground = ground_wavefunction(system, top_level)
    state = FnState(OpExpr.function(ground.envelope, ground.norm), system.shift)

    # -------------------------------------------------------------------
    # Â†_{top−1} first, Â†_level last
    # -------------------------------------------------------------------
    for step in range(qn.k - 1, -1, -1):
        level = qn.level + step if system.is_radial else 0
        state = apply_to_state(raising_op(system, level), state)
    state = state.scale(normalization_constant(system, qn))

    envelope = _envelope(system, qn)
    argument = system_argument(system, qn)
    raw = read_polynomial(state.expr * OpExpr.function(envelope.inverse()), argument)

    ratio = raw.lead / Scalar(re=standard_lead(system.polynomial, qn.k))
    phase = _phase_of(ratio)
    norm = ratio * minus_i_power(-phase)
    logger.debug("ladder %s %s: phase %d, norm %s", system.name, qn, phase, norm)
    return Wavefunction(
        system=system,
        qn=qn,
        norm=norm,
        poly=raw.scale(ratio.inverse()),
        envelope=envelope,
        measure=system.measure_exponent,
        phase=phase,
        angular=angular_factor(system),
        route="ladder",
    )


def build_by_rodrigues(system: SystemSpec, qn: QuantumNumbers,
                       printed_coulomb: bool = False) -> Wavefunction:
    return Wavefunction(
        system=system,
        qn=qn,
        norm=final_norm(system, qn, printed_coulomb),
        poly=rodrigues_nested(system, qn),
        envelope=_envelope(system, qn),
        measure=system.measure_exponent,
        angular=angular_factor(system),
        route="rodrigues",
    )


def routes_agree(system: SystemSpec, qn: QuantumNumbers) -> bool:
    """Ladder and Rodrigues states coincide exactly once the expected phase is applied."""
    ladder = build_by_ladder(system, qn)
    rodrigues = build_by_rodrigues(system, qn)
    phase = expected_phase(system, qn)
    if ladder.phase != phase:
        logger.debug("%s %s: ladder phase %d, expected %d", system.name, qn, ladder.phase, phase)
        return False
    same = ladder.to_state() == rodrigues.with_phase(phase).to_state()
    if not same:
        logger.debug("%s %s: ladder and Rodrigues states differ", system.name, qn)
    return same


def eigencheck(system: SystemSpec, psi: Wavefunction) -> OpExpr:
    """Residual (Ĥ_level − E)ψ as an exact expression; zero for an eigenfunction."""
    state = psi.to_state()
    applied = apply_to_state(hamiltonian(system, psi.qn.level), state)
    return (applied - state.scale(psi.energy)).expr
