"""
LadderKit — Normalization Constants

Three families of constants, kept separate so they can be compared rather
than assumed equal:

  normalization_constant   product over the chain links,
                           C = Π_j 1/√(E_target − E_aux(j))
  closed_form_constant     the simplified per-system closed forms of C
  ground norms             exact_ground_norm from moment integrals and
                           printed_ground_norm from the standard closed forms

final_norm gives the textbook prefactor of the complete eigenfunction; the
printed Coulomb variant with (n+1)! is kept for comparison only.
"""

from fractions import Fraction
from math import factorial
from typing import List

from algebra.function_factor import FunctionFactor
from algebra.scalar import ONE, Scalar
from models.gauge import solve_gauge
from models.ladder import lowering_op
from models.system_spec import QuantumNumbers, SystemSpec
from polynomials.classical import double_factorial


# =============================================================================
# Chain product
# =============================================================================
def auxiliary_energies(system: SystemSpec, qn: QuantumNumbers) -> List[Fraction]:
    """E_aux(0..k): ground energies of the auxiliary Hamiltonians, shifts included."""
    return [system.auxiliary_energy(qn.level, j) for j in range(qn.k + 1)]


def normalization_constant(system: SystemSpec, qn: QuantumNumbers) -> Scalar:
    energies = auxiliary_energies(system, qn)
    target = energies[-1]
    product = Fraction(1)
    for e in energies[:-1]:
        product *= target - e
    return Scalar.sqrt_of(1 / product)


def closed_form_constant(system: SystemSpec, qn: QuantumNumbers) -> Scalar:
    """
    Closed forms of the chain product.

    Returns
    -------
    Scalar
        sho1d   1/√(k!)
        osc*d   1/√(2^k k!)
        coul3d  (n√2)^k (n−1)!/l! · √((n+l)! / ((2n−1)! (n−l−1)!))
        coul2d  (√2 N)^k (2m+2k−1)!! / (2^k (2m−1)!!) · √((2m+k)! / (k! (2m+2k)!)),
                N = m + k + 1/2
    """
    k, level = qn.k, qn.level
    if system.name == "sho1d":
        return Scalar.sqrt_of(Fraction(1, factorial(k)))
    if system.is_oscillator:
        return Scalar.sqrt_of(Fraction(1, 2 ** k * factorial(k)))
    if system.name == "coul3d":
        n, l = level + k + 1, level
        rational = Fraction(n ** k * factorial(n - 1), factorial(l))
        root = Fraction(factorial(n + l), factorial(2 * n - 1) * factorial(n - l - 1))
        return Scalar(re=rational) * Scalar.power_of(2, Fraction(k, 2)) * Scalar.sqrt_of(root)
    m = level
    big_n = m + k + Fraction(1, 2)
    rational = big_n ** k * Fraction(double_factorial(2 * m + 2 * k - 1),
                                     2 ** k * double_factorial(2 * m - 1))
    root = Fraction(factorial(2 * m + k), factorial(k) * factorial(2 * m + 2 * k))
    return Scalar(re=rational) * Scalar.power_of(2, Fraction(k, 2)) * Scalar.sqrt_of(root)


# =============================================================================
# Ground norms
# =============================================================================
def _gamma_half(h: Fraction) -> Scalar:
    """Γ(h) for positive integer or half-integer h, exactly."""
    if h.denominator == 1:
        return Scalar(re=Fraction(factorial(int(h) - 1)))
    j = int(h - Fraction(1, 2))
    # Γ(j + 1/2) = (2j)! / (4^j j!) · √π
    return Scalar(re=Fraction(factorial(2 * j), 4 ** j * factorial(j)), pi_quarter=2)


def gaussian_moment(s: int, b: Fraction) -> Scalar:
    """∫_0^∞ x^s e^(−b x²) dx = Γ((s+1)/2) / (2 b^((s+1)/2))."""
    half = Fraction(s + 1, 2)
    return _gamma_half(half) * Scalar.power_of(b, -half) * Scalar(re=Fraction(1, 2))


def exponential_moment(s: int, b: Fraction) -> Scalar:
    """∫_0^∞ x^s e^(−b x) dx = s! / b^(s+1)."""
    return Scalar(re=Fraction(factorial(s)) / Fraction(b) ** (s + 1))


def envelope_norm_squared(envelope: FunctionFactor, measure: Fraction, full_line: bool) -> Scalar:
    """Exact ∫ |envelope|² x^measure dx over (0, ∞), or over ℝ when full_line."""
    s = 2 * envelope.power + measure
    if s.denominator != 1 or s < 0:
        raise ValueError(f"moment x^{s} is not a non-negative integer power")
    s = int(s)
    if envelope.linear == 0 and envelope.gauss < 0:
        moment = gaussian_moment(s, -2 * envelope.gauss)
        if full_line:
            if s % 2:
                return Scalar()
            moment = moment * 2
        return moment
    if envelope.gauss == 0 and envelope.linear < 0 and not full_line:
        return exponential_moment(s, -2 * envelope.linear)
    raise ValueError(f"no closed-form moment for envelope {envelope}")


def ground_envelope(system: SystemSpec, level: int) -> FunctionFactor:
    return solve_gauge(lowering_op(system, level), system.shift).ground


def exact_ground_norm(system: SystemSpec, level: int) -> Scalar:
    """Positive constant N with ∫ (N·F)² x^measure dx = 1 for the ground envelope F."""
    envelope = ground_envelope(system, level)
    weight = envelope_norm_squared(envelope, system.measure_exponent, not system.is_radial)
    return weight.inverse() ** Fraction(1, 2)


def printed_ground_norm(system: SystemSpec, level: int) -> Scalar:
    """The standard closed forms of the ground normalization."""
    if system.name == "sho1d":
        return Scalar.pi_power(-1)
    if system.name == "osc3d":
        l = level
        return (Scalar.power_of(2, Fraction(l, 2) + 1) * Scalar.pi_power(-1)
                * Scalar.sqrt_of(Fraction(1, double_factorial(2 * l + 1))))
    if system.name == "coul3d":
        n = level + 1
        return (Scalar.power_of(Fraction(2, n), n + Fraction(1, 2))
                * Scalar.sqrt_of(Fraction(1, factorial(2 * n))))
    if system.name == "osc2d":
        return Scalar.sqrt_of(Fraction(2, factorial(level)))
    m = level
    return (Scalar.power_of(2 / (m + Fraction(1, 2)), m + 1)
            * Scalar.sqrt_of(Fraction(1, factorial(2 * m + 1))))


# =============================================================================
# Prefactor of the complete eigenfunction
# =============================================================================
def final_norm(system: SystemSpec, qn: QuantumNumbers, printed_coulomb: bool = False) -> Scalar:
    """
    Positive prefactor of norm · P(u) · envelope in standard polynomial normalization.

    Parameters
    ----------
    printed_coulomb : bool
        For coul3d use √((n−l−1)! / (2n (n+1)!)) instead of the re-derived
        √((n−l−1)! / (2n (n+l)!)). The two agree only for l = 1.
    """
    k, level = qn.k, qn.level
    if system.name == "sho1d":
        return Scalar.sqrt_of(Fraction(1, factorial(k) * 2 ** k)) * Scalar.pi_power(-1)
    if system.name == "osc3d":
        l = level
        return Scalar.pi_power(-1) * Scalar.sqrt_of(
            Fraction(2 ** (l + k + 2) * factorial(k), double_factorial(2 * (l + k) + 1)))
    if system.name == "osc2d":
        m = level
        return Scalar.sqrt_of(Fraction(2 * factorial(k), factorial(m + k)))
    if system.name == "coul3d":
        l, n = level, level + k + 1
        tail = factorial(n + 1) if printed_coulomb else factorial(n + l)
        return (Scalar.power_of(Fraction(2, n), l + Fraction(3, 2))
                * Scalar.sqrt_of(Fraction(factorial(n - l - 1), 2 * n * tail)))
    m = level
    big_n = m + k + Fraction(1, 2)
    return (Scalar.power_of(2 / big_n, m + 1)
            * Scalar.sqrt_of(Fraction(factorial(k), (2 * m + 2 * k + 1) * factorial(2 * m + k))))


def angular_factor(system: SystemSpec) -> Scalar:
    """1/√(2π) for the planar systems, 1 otherwise."""
    if system.dimension == 2:
        return Scalar.sqrt_of(Fraction(1, 2)) * Scalar.pi_power(-2)
    return ONE
