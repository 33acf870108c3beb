"""
LadderKit — Gauge Solutions of the Subsidiary Condition

For Â = s(p − iW) with W = α/x + βx + γ, the function

    f = x^(−α) · exp(−β x²/2 − γ x)

satisfies f′ = −W f, hence

    Â · f = s · f · p                      (similarity form)
    Â · F = s · F · (p + i c/x)            with F = f · x^(−c)

so Â annihilates F·K whenever K is the kernel of (p + i c/x). F is the
unnormalized ground envelope of the level.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from algebra.errors import NoGauge
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, adjoint
from algebra.scalar import I, MINUS_I, Scalar

Number = Union[int, Fraction]


@dataclass(frozen=True)
class GaugeSolution:
    f: FunctionFactor
    s: Scalar
    shift: Fraction

    @property
    def ground(self) -> FunctionFactor:
        """Ground envelope F = f · x^(−c)."""
        return self.f * FunctionFactor(-self.shift)


def solve_gauge(a: OpExpr, c: Number) -> GaugeSolution:
    """
    Recover the gauge of a lowering operator of superpotential form.

    Parameters
    ----------
    a : OpExpr
        An operator s·p − i·s·(α/x + βx + γ).
    c : Rational
        Kernel shift of the system.

    Returns
    -------
    GaugeSolution whose identities have been re-verified by normal ordering.

    Raises
    ------
    NoGauge if the operator has another shape or the identities leave a residual.
    """
    c = Fraction(c)
    momentum_terms = [t for t in a.terms if t.mom == 1]
    if len(momentum_terms) != 1 or not momentum_terms[0].fn.is_one or a.max_momentum != 1:
        raise NoGauge("operator is not first order in p with a constant p coefficient")
    s = momentum_terms[0].coeff

    # -------------------------------------------------------------------
    # Match the p-free part against −i·s·(α/x + βx + γ)
    # -------------------------------------------------------------------
    coefficients = {Fraction(-1): Fraction(0), Fraction(1): Fraction(0), Fraction(0): Fraction(0)}
    scale = (MINUS_I * s).inverse()
    for t in a.terms:
        if t.mom != 0:
            continue
        if t.fn.has_exponential or t.fn.power not in coefficients:
            raise NoGauge(f"term x^{t.fn.power} with exponential part is outside α/x + βx + γ")
        value = t.coeff * scale
        if not value.is_rational:
            raise NoGauge(f"superpotential coefficient {value} is not a real rational")
        coefficients[t.fn.power] = value.as_fraction()

    alpha, beta, gamma = coefficients[Fraction(-1)], coefficients[Fraction(1)], coefficients[Fraction(0)]
    f = FunctionFactor(-alpha, -beta / 2, -gamma)
    solution = GaugeSolution(f=f, s=s, shift=c)

    # -------------------------------------------------------------------
    # Re-verify both identities exactly
    # -------------------------------------------------------------------
    f_op = OpExpr.function(f)
    if not (a * f_op - (f_op * OpExpr.momentum(1)).scale(s)).is_zero:
        raise NoGauge("Â·f − s·f·p does not vanish")
    ground_op = OpExpr.function(solution.ground)
    kernel_op = OpExpr.momentum(1) + OpExpr.coordinate(-1, I * c)
    if not (a * ground_op - (ground_op * kernel_op).scale(s)).is_zero:
        raise NoGauge("Â·F − s·F·(p + i c/x) does not vanish")
    return solution


def similarity_check(a: OpExpr, solution: GaugeSolution) -> bool:
    """
    The raising operator as a similarity transform of p:
        Â† = s̄ · f⁻¹ · p · f
    """
    inverse = OpExpr.function(solution.f.inverse())
    transformed = (inverse * OpExpr.momentum(1) * OpExpr.function(solution.f)).scale(solution.s.conjugate())
    return (adjoint(a) - transformed).is_zero
