"""
LadderKit — Exact Scalars

Coefficient field for every derivation in the package:

    value = (re + i·im) · √radicand · π^(pi_quarter / 4)

re and im are Fractions. The radicand is kept as a square-free integer, so
equal values always have equal representations and equality is structural.
Sums only exist inside one stratum (same radicand, same π power); anything
else raises IncompatibleStrata and the expression layer keeps the two parts
as separate terms.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Tuple, Union

import mpmath
from sympy.ntheory.factor_ import core

from algebra.errors import IncompatibleStrata
from config.constants import MIN_PRECISION

Number = Union[int, Fraction]


def _square_free(value: Fraction) -> Tuple[Fraction, int]:
    """Split a positive rational as factor² · radicand with a square-free integer radicand."""
    # p/q = p·q / q²
    whole = value.numerator * value.denominator
    radicand = int(core(whole))
    root = isqrt(whole // radicand)
    return Fraction(root, value.denominator), radicand


def _as_pair(value: Fraction) -> List[int]:
    return [value.numerator, value.denominator]


@dataclass(frozen=True)
class Scalar:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    radicand: Fraction = Fraction(1)
    pi_quarter: int = 0

    def __post_init__(self):
        re = Fraction(self.re)
        im = Fraction(self.im)
        radicand = Fraction(self.radicand)
        pi_quarter = int(self.pi_quarter)
        if radicand <= 0:
            raise ValueError(f"radicand must be positive, got {radicand}")

        if re == 0 and im == 0:
            radicand, pi_quarter = Fraction(1), 0
        else:
            # perfect squares migrate out of the root into re/im
            factor, free = _square_free(radicand)
            re, im, radicand = re * factor, im * factor, Fraction(free)

        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "pi_quarter", pi_quarter)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def of(cls, value: Union["Scalar", Number]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(re=Fraction(value))
        raise TypeError(f"cannot build an exact scalar from {type(value).__name__}")

    @classmethod
    def sqrt_of(cls, value: Number) -> "Scalar":
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"square root of negative rational {value}")
        if value == 0:
            return cls()
        return cls(re=Fraction(1), radicand=value)

    @classmethod
    def pi_power(cls, quarters: int) -> "Scalar":
        """π^(quarters/4)."""
        return cls(re=Fraction(1), pi_quarter=quarters)

    @classmethod
    def power_of(cls, base: Number, exponent: Number) -> "Scalar":
        """base^exponent for a positive rational base and an integer or half-integer exponent."""
        base = Fraction(base)
        exponent = Fraction(exponent)
        if base == 1:
            return cls(re=Fraction(1))
        if base <= 0:
            raise ValueError(f"fractional power of non-positive base {base}")
        if exponent.denominator not in (1, 2):
            raise ValueError(f"exponent {exponent} is neither integer nor half-integer")
        whole = exponent.numerator // exponent.denominator
        value = cls(re=base ** whole)
        if exponent.denominator == 2:
            value = value * cls.sqrt_of(base)
        return value

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------
    @property
    def stratum(self) -> Tuple[Fraction, int]:
        return self.radicand, self.pi_quarter

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_rational(self) -> bool:
        return self.im == 0 and self.radicand == 1 and self.pi_quarter == 0

    @property
    def is_positive(self) -> bool:
        return self.im == 0 and self.re > 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not a rational number")
        return self.re

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __mul__(self, other) -> "Scalar":
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return Scalar(
            re=self.re * other.re - self.im * other.im,
            im=self.re * other.im + self.im * other.re,
            radicand=self.radicand * other.radicand,
            pi_quarter=self.pi_quarter + other.pi_quarter,
        )

    __rmul__ = __mul__

    def __add__(self, other) -> "Scalar":
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.stratum != other.stratum:
            raise IncompatibleStrata(f"cannot add {self} and {other}")
        return Scalar(self.re + other.re, self.im + other.im, self.radicand, self.pi_quarter)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im, self.radicand, self.pi_quarter)

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.of(other) + (-self)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.radicand, self.pi_quarter)

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("inverse of exact zero")
        norm = self.re * self.re + self.im * self.im
        # 1/√r = √r / r
        return Scalar(
            re=self.re / norm / self.radicand,
            im=-self.im / norm / self.radicand,
            radicand=self.radicand,
            pi_quarter=-self.pi_quarter,
        )

    def __truediv__(self, other) -> "Scalar":
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    def __pow__(self, exponent: Number) -> "Scalar":
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            power = int(exponent)
            if power < 0:
                return self.inverse() ** (-power)
            result, base = ONE, self
            while power:
                if power & 1:
                    result = result * base
                base = base * base
                power >>= 1
            return result
        return self._fractional_power(exponent)

    def _fractional_power(self, exponent: Fraction) -> "Scalar":
        if not self.is_positive:
            raise ValueError(f"fractional power {exponent} of non-positive scalar {self}")
        quarters = self.pi_quarter * exponent
        if quarters.denominator != 1:
            raise ValueError(f"π power of {self}^{exponent} is not a quarter-integer")
        return (
            Scalar.power_of(self.re, exponent)
            * Scalar.power_of(self.radicand, exponent / 2)
            * Scalar.pi_power(int(quarters))
        )

    def sqrt(self) -> "Scalar":
        return self ** Fraction(1, 2)

    # ------------------------------------------------------------------
    # Conversion
    # ------------------------------------------------------------------
    def to_mpc(self, precision: int = 53) -> mpmath.mpc:
        with mpmath.workprec(precision + 10):
            value = mpmath.mpc(
                mpmath.mpf(self.re.numerator) / self.re.denominator,
                mpmath.mpf(self.im.numerator) / self.im.denominator,
            )
            if self.radicand != 1:
                value *= mpmath.sqrt(mpmath.mpf(self.radicand.numerator) / self.radicand.denominator)
            if self.pi_quarter:
                value *= mpmath.pi ** (mpmath.mpf(self.pi_quarter) / 4)
            return value

    def to_complex(self, precision: int = 53) -> complex:
        return complex(self.to_mpc(precision))

    def to_json(self) -> Dict[str, object]:
        return {
            "re": _as_pair(self.re),
            "im": _as_pair(self.im),
            "sqrt": _as_pair(self.radicand),
            "pi4": self.pi_quarter,
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "Scalar":
        return cls(
            re=Fraction(*data["re"]),
            im=Fraction(*data["im"]),
            radicand=Fraction(*data["sqrt"]),
            pi_quarter=int(data["pi4"]),
        )

    def __str__(self) -> str:
        from opdsl.render import scalar_text

        return scalar_text(self)


ZERO = Scalar()
ONE = Scalar(re=Fraction(1))
I = Scalar(im=Fraction(1))
MINUS_I = Scalar(im=Fraction(-1))
INV_SQRT2 = Scalar.sqrt_of(Fraction(1, 2))


def minus_i_power(power: int) -> Scalar:
    """(−i)^power, reduced mod 4."""
    return (ONE, MINUS_I, -ONE, I)[power % 4]


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    """Exact sum; raises IncompatibleStrata across radicand / π strata."""
    return a + b


def scalar_to_float(a: Scalar, precision: int = 64) -> mpmath.mpc:
    """
    Evaluate a scalar with mpmath at `precision` bits.

    Parameters
    ----------
    a : Scalar
    precision : int
        Working precision in bits; at least 53.

    Returns
    -------
    mpmath.mpc with relative error ≤ 2^(1 − precision). Callers that need a
    Python complex convert at their own boundary.
    """
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")
    return a.to_mpc(precision)
