"""
LadderKit — Operator Rodrigues Formulas

Builds each system's orthogonal polynomial as a nested commutator, evaluated
innermost first, and reads the momentum-free result off as a polynomial in the
system's argument u.

  1D          H_n(x)        = (−i)^n e^{x²} [p, [p, … [p, e^{−x²}]]]
  oscillators L_k^(α)(x²)   = x^{−2α} e^{x²} / k! · [B, … [B, x^{2(k+α)} e^{−x²}]],
                              B = (1/x)(i p / 2), so [B, f] = f′/(2x)
  Coulomb     L_k^(2ν−1)(2x/ν_top) = c_k · x^{−2ν} e^{x(1/ν + 1/ν_top)}
                              · [p, g_ν [p, g_{ν+1} … [p, g_{top−1} x^{2ν_top} e^{−2x/ν_top}]]]
              with g_λ = x^{−1} e^{−x/(ν_λ ν_{λ+1})}, ν = level + c

The dressing factors must cancel exactly; any surviving momentum,
exponential or stray power raises NonPolynomialResidue.
"""

import logging
from fractions import Fraction
from math import factorial

from algebra.errors import InvalidQuantumNumbers, NonPolynomialResidue
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, Term, commutator
from algebra.scalar import I, Scalar, minus_i_power
from models.system_spec import QuantumNumbers, SystemSpec
from polynomials.classical import double_factorial, hermite, laguerre_explicit
from polynomials.polynomial import Argument, Polynomial

logger = logging.getLogger(__name__)


def system_argument(system: SystemSpec, qn: QuantumNumbers) -> Argument:
    return Argument(system.argument_tag, system.argument_power(),
                    system.argument_scale(qn.level, qn.k))


def reference_polynomial(system: SystemSpec, qn: QuantumNumbers) -> Polynomial:
    """H_n or L_k^(α) from the recurrence / explicit sum, in the system's argument."""
    argument = system_argument(system, qn)
    if system.polynomial == "hermite":
        return hermite(qn.k).with_argument(argument)
    return laguerre_explicit(qn.k, system.laguerre_alpha(qn.level)).with_argument(argument)


# -----------------------------------------------------------------------------
# Polynomial ↔ operator conversion
# -----------------------------------------------------------------------------
def read_polynomial(expr: OpExpr, argument: Argument) -> Polynomial:
    """Read a momentum-free, exponential-free OpExpr as a polynomial in u."""
    coeffs = {}
    for t in expr.terms:
        if t.mom != 0:
            raise NonPolynomialResidue(f"momentum p^{t.mom} survived the reduction")
        if t.fn.has_exponential:
            raise NonPolynomialResidue(f"uncancelled exponential in {t.fn}")
        power = t.fn.power
        if power.denominator != 1 or power < 0 or int(power) % argument.power:
            raise NonPolynomialResidue(f"x^{power} is not a power of u = {argument.label}")
        j = int(power) // argument.power
        # x^{power·j} = u^j / scale^j
        coeffs[j] = t.coeff * Scalar(re=1 / argument.scale ** j)
    degree = max(coeffs, default=-1)
    return Polynomial(tuple(coeffs.get(j, Scalar()) for j in range(degree + 1)), argument)


def polynomial_operator(poly: Polynomial, fn: FunctionFactor = FunctionFactor()) -> OpExpr:
    """P(u(x)) · fn as a momentum-free OpExpr."""
    argument = poly.argument
    return OpExpr.from_terms(
        Term(c * Scalar(re=argument.scale ** j), fn * FunctionFactor(argument.power * j))
        for j, c in enumerate(poly.coeffs)
    )


# -----------------------------------------------------------------------------
# Nested commutators
# -----------------------------------------------------------------------------
def _hermite_nested(n: int) -> OpExpr:
    inner = OpExpr.function(FunctionFactor(0, -1))
    momentum = OpExpr.momentum(1)
    for _ in range(n):
        inner = commutator(momentum, inner)
    return (inner * OpExpr.function(FunctionFactor(0, 1))).scale(minus_i_power(n))


def _oscillator_nested(k: int, alpha: Fraction) -> OpExpr:
    b = OpExpr.from_terms([Term(Scalar(im=Fraction(1, 2)), FunctionFactor(-1), 1)])
    inner = OpExpr.function(FunctionFactor(2 * (k + alpha), -1))
    for _ in range(k):
        inner = commutator(b, inner)
    dressing = OpExpr.function(FunctionFactor(-2 * alpha, 1), Fraction(1, factorial(k)))
    return dressing * inner


def _coulomb_prefactor(system: SystemSpec, level: int, k: int) -> Scalar:
    if system.dimension == 3:
        l, n = level, level + k + 1
        rational = Fraction(factorial(n + l) * factorial(n - 1),
                            factorial(2 * n - 1) * factorial(l) * factorial(k))
        return Scalar(re=rational) * (Scalar(im=Fraction(2)) ** k)
    m = level
    rational = Fraction(factorial(2 * m + k),
                        factorial(k) * double_factorial(2 * m - 1) * double_factorial(2 * m + 2 * k))
    return Scalar(re=rational) * (I ** k)


def _coulomb_nested(system: SystemSpec, level: int, k: int) -> OpExpr:
    nu = system.angular_index
    top = nu(level + k)
    inner = OpExpr.function(FunctionFactor(2 * top, 0, -2 / top))
    momentum = OpExpr.momentum(1)
    for lam in range(level + k - 1, level - 1, -1):
        dressing = OpExpr.function(FunctionFactor(-1, 0, -1 / (nu(lam) * nu(lam + 1))))
        inner = commutator(momentum, dressing * inner)
    undress = OpExpr.function(FunctionFactor(-2 * nu(level), 0, 1 / nu(level) + 1 / top))
    return (undress * inner).scale(_coulomb_prefactor(system, level, k))


def rodrigues_nested(system: SystemSpec, qn: QuantumNumbers) -> Polynomial:
    """The system's polynomial from its operator Rodrigues form, exactly."""
    if not system.is_radial and qn.level != 0:
        raise InvalidQuantumNumbers("the 1D chain has a single level 0")
    argument = system_argument(system, qn)
    if system.polynomial == "hermite":
        expr = _hermite_nested(qn.k)
    elif system.is_oscillator:
        expr = _oscillator_nested(qn.k, system.laguerre_alpha(qn.level))
    else:
        expr = _coulomb_nested(system, qn.level, qn.k)
    poly = read_polynomial(expr, argument)
    if poly.degree != qn.k:
        raise NonPolynomialResidue(f"degree {poly.degree} where {qn.k} was expected")
    return poly


def hermite_nested(n: int) -> Polynomial:
    return read_polynomial(_hermite_nested(n), Argument())


def laguerre_nested(k: int, alpha: Fraction) -> Polynomial:
    """L_k^(α) for any α > −1 from the oscillator commutator, read in u = x²."""
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise InvalidQuantumNumbers(f"Laguerre parameter must exceed -1, got {alpha}")
    poly = read_polynomial(_oscillator_nested(k, alpha), Argument("x2", 2))
    return poly.with_argument(Argument())


def rodrigues_equivalence(system: SystemSpec, qn: QuantumNumbers) -> bool:
    """True iff the nested-commutator polynomial equals the reference polynomial exactly."""
    nested = rodrigues_nested(system, qn)
    same = nested == reference_polynomial(system, qn)
    if not same:
        logger.debug("Rodrigues mismatch for %s %s", system.name, qn)
    return same


# -----------------------------------------------------------------------------
# Identities used by the induction arguments
# -----------------------------------------------------------------------------
def hermite_operator_recurrence(n: int) -> bool:
    """H_{n+1} = 2y H_n − 2n H_{n−1} for the nested-commutator polynomials, n ≥ 1."""
    lhs = hermite_nested(n + 1)
    rhs = hermite_nested(n).times_argument().scale(2) - hermite_nested(n - 1).scale(2 * n)
    return lhs == rhs


def coulomb_induction_identity(n: int, l: int) -> bool:
    """
    For k = n − l − 1 ≥ 1 and u = 2x/n:

      [p, x^{−k} L_k^(2l+1)(u)]
        = i x^{−k−1} (u L_{k−1}^(2l+2)(u) + k L_k^(2l+1)(u))
        = i (n+l) x^{−k−1} L_{k−1}^(2l+1)(u)
    """
    k = n - l - 1
    if k < 1 or l < 0:
        raise InvalidQuantumNumbers(f"the induction step needs 0 ≤ l < n − 1, got n={n}, l={l}")
    argument = Argument("2x/n", 1, Fraction(2, n))
    current = laguerre_explicit(k, 2 * l + 1).with_argument(argument)
    lower = laguerre_explicit(k - 1, 2 * l + 1).with_argument(argument)
    shifted = laguerre_explicit(k - 1, 2 * l + 2).with_argument(argument)

    lhs = commutator(OpExpr.momentum(1), polynomial_operator(current, FunctionFactor(-k)))
    middle = polynomial_operator(shifted.times_argument() + current.scale(k),
                                 FunctionFactor(-k - 1)).scale(I)
    rhs = polynomial_operator(lower, FunctionFactor(-k - 1)).scale(I * (n + l))
    return lhs == middle == rhs


def planar_induction_identity(m: int, k: int) -> bool:
    """
    For m ≥ 1, N = m + k + 1/2, u = 2x/N and b = (2m+k)/((m − 1/2) N):

      L_{k+1}^(2m−2)(u) = i (2m−1) / ((k+1)(2m+k)) · x^{1−2m} e^{b x}
                          · [p, x^{2m} e^{−b x} L_k^(2m)(u)]
    """
    if m < 1 or k < 0:
        raise InvalidQuantumNumbers(f"the planar induction step needs m ≥ 1, k ≥ 0, got m={m}, k={k}")
    big_n = m + k + Fraction(1, 2)
    argument = Argument("2x/(n-1/2)", 1, 2 / big_n)
    b = Fraction(2 * m + k) / ((m - Fraction(1, 2)) * big_n)
    inner = polynomial_operator(laguerre_explicit(k, 2 * m).with_argument(argument),
                                FunctionFactor(2 * m, 0, -b))
    outer = OpExpr.function(FunctionFactor(1 - 2 * m, 0, b),
                            I * Fraction(2 * m - 1, (k + 1) * (2 * m + k)))
    lhs = polynomial_operator(laguerre_explicit(k + 1, 2 * m - 2).with_argument(argument))
    return lhs == outer * commutator(OpExpr.momentum(1), inner)
