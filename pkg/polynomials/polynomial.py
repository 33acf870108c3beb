"""
LadderKit — Exact Polynomials

Dense polynomials with Scalar coefficients, indexed by degree, in a scaled
argument u = scale · x^power. The argument tag records which substitution
the system uses (x, x², 2x/n or 2x/(n − 1/2)), so a wavefunction can be
assembled without guessing.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

from algebra.scalar import ONE, Scalar, ZERO

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Argument:
    tag: str = "x"
    power: int = 1
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))

    def of(self, t):
        """u(t) for a float or numpy array."""
        return float(self.scale) * np.asarray(t, dtype=float) ** self.power

    @property
    def label(self) -> str:
        base = "x" if self.power == 1 else f"x^{self.power}"
        if self.scale == 1:
            return base
        if self.scale.denominator == 1:
            return f"{self.scale.numerator}*{base}"
        return f"({self.scale})*{base}"


PLAIN = Argument()


@dataclass(frozen=True)
class Polynomial:
    coeffs: Tuple[Scalar, ...] = ()
    argument: Argument = field(default=PLAIN)

    def __post_init__(self):
        values = [Scalar.of(c) for c in self.coeffs]
        while values and values[-1].is_zero:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_rationals(cls, values: Iterable[Number], argument: Argument = PLAIN) -> "Polynomial":
        return cls(tuple(Scalar(re=Fraction(v)) for v in values), argument)

    @classmethod
    def constant(cls, value: Union[Scalar, Number] = 1, argument: Argument = PLAIN) -> "Polynomial":
        return cls((Scalar.of(value),), argument)

    @classmethod
    def monomial(cls, degree: int, coeff: Union[Scalar, Number] = 1,
                 argument: Argument = PLAIN) -> "Polynomial":
        return cls((ZERO,) * degree + (Scalar.of(coeff),), argument)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coefficient(self, j: int) -> Scalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def rational_coeffs(self) -> List[Fraction]:
        return [c.as_fraction() for c in self.coeffs]

    def with_argument(self, argument: Argument) -> "Polynomial":
        return Polynomial(self.coeffs, argument)

    # ------------------------------------------------------------------
    # Arithmetic (the argument of the left operand is kept)
    # ------------------------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)),
                          self.argument)

    def __neg__(self) -> "Polynomial":
        return self.scale(-ONE)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, factor: Union[Scalar, Number]) -> "Polynomial":
        factor = Scalar.of(factor)
        return Polynomial(tuple(c * factor for c in self.coeffs), self.argument)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial((), self.argument)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out), self.argument)

    __rmul__ = __mul__

    def times_argument(self) -> "Polynomial":
        """u · P(u)."""
        if self.is_zero:
            return self
        return Polynomial((ZERO,) + self.coeffs, self.argument)

    def reflect(self) -> "Polynomial":
        """P(−u)."""
        return Polynomial(tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)),
                          self.argument)

    # ------------------------------------------------------------------
    # Evaluation and export
    # ------------------------------------------------------------------
    def evaluate(self, u):
        """Complex value at u (float or numpy array), Horner scheme."""
        u = np.asarray(u, dtype=float)
        out = np.zeros_like(u, dtype=complex)
        for c in reversed(self.coeffs):
            out = out * u + c.to_complex()
        return out

    def to_json(self) -> Dict[str, object]:
        return {"arg": self.argument.tag, "coeffs": [c.to_json() for c in self.coeffs]}
