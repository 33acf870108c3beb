"""
LadderKit — Wavefunctions

A Wavefunction is the exact product

    ψ(t) = (−i)^phase · norm · P(u(t)) · t^a · exp(g t² + l t)

with a positive real norm, a polynomial in the system's argument u and the
function-class envelope. The phase is kept apart from the norm, the way the
standard radial forms drop their overall (−i)^k. The planar angular factor
1/√(2π) is carried in `angular` and never enters radial comparisons.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict

import numpy as np

from algebra.errors import DomainError
from algebra.function_factor import FunctionFactor
from algebra.scalar import ONE, Scalar, minus_i_power
from algebra.states import FnState
from config.constants import ORIGIN_CUTOFF
from models.system_spec import QuantumNumbers, SystemSpec
from polynomials.polynomial import Polynomial
from polynomials.rodrigues import polynomial_operator


@dataclass(frozen=True)
class Wavefunction:
    system: SystemSpec
    qn: QuantumNumbers
    norm: Scalar
    poly: Polynomial
    envelope: FunctionFactor
    measure: Fraction
    phase: int = 0
    angular: Scalar = ONE
    route: str = "rodrigues"

    @property
    def energy(self) -> Fraction:
        return self.system.energy(self.qn)

    @property
    def coefficient(self) -> Scalar:
        """(−i)^phase · norm."""
        return minus_i_power(self.phase) * self.norm

    def with_phase(self, phase: int) -> "Wavefunction":
        return replace(self, phase=phase % 4)

    def to_state(self) -> FnState:
        """The exact function-class state, phase included, angular factor excluded."""
        expr = polynomial_operator(self.poly, self.envelope).scale(self.coefficient)
        return FnState(expr, self.system.shift)

    def values(self, t, include_phase: bool = False) -> np.ndarray:
        """Vectorized ψ(t) for trusted points; no domain checks."""
        t = np.asarray(t, dtype=float)
        scale = (self.coefficient if include_phase else self.norm).to_complex()
        return scale * self.poly.evaluate(self.poly.argument.of(t)) * self.envelope.evaluate(t)

    def to_json(self) -> Dict[str, object]:
        return {
            "system": self.system.name,
            "qn": self.qn.label(self.system),
            "energy": [self.energy.numerator, self.energy.denominator],
            "norm": self.norm.to_json(),
            "poly": self.poly.to_json(),
            "envelope": self.envelope.to_json(),
            "measure": [self.measure.numerator, self.measure.denominator],
            "phase": self.phase,
            "angular": self.angular.to_json(),
            "route": self.route,
        }


def evaluate(psi: Wavefunction, t: float, cutoff: float = ORIGIN_CUTOFF) -> complex:
    """
    Float value norm · P(u(t)) · t^a · e^(g t² + l t), phase omitted.

    Raises
    ------
    DomainError for negative t on a radial system, or |t| below the origin
    cutoff when the envelope has a negative or fractional power.
    """
    t = float(t)
    if psi.system.is_radial and t < 0:
        raise DomainError(f"radial coordinate must be non-negative, got {t}")
    power = psi.envelope.power
    if (power < 0 or power.denominator != 1) and abs(t) < cutoff:
        raise DomainError(f"|t| = {abs(t)} below origin cutoff {cutoff} for power {power}")
    return complex(psi.values(np.array([t]))[0])
