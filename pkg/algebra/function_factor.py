"""
LadderKit — Coordinate Function Class

FunctionFactor is the closed class of coordinate functions the derivations
need:  x^power · exp(gauss·x² + linear·x)  with rational parameters.
Products add the parameters componentwise and the derivative of one factor
is a combination of at most three factors of the same class.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

import numpy as np

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class FunctionFactor:
    power: Fraction = Fraction(0)
    gauss: Fraction = Fraction(0)
    linear: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "power", Fraction(self.power))
        object.__setattr__(self, "gauss", Fraction(self.gauss))
        object.__setattr__(self, "linear", Fraction(self.linear))

    @property
    def is_one(self) -> bool:
        return self.power == 0 and self.gauss == 0 and self.linear == 0

    @property
    def has_exponential(self) -> bool:
        return self.gauss != 0 or self.linear != 0

    def __mul__(self, other: "FunctionFactor") -> "FunctionFactor":
        if not isinstance(other, FunctionFactor):
            return NotImplemented
        return FunctionFactor(
            self.power + other.power,
            self.gauss + other.gauss,
            self.linear + other.linear,
        )

    def inverse(self) -> "FunctionFactor":
        return FunctionFactor(-self.power, -self.gauss, -self.linear)

    def __truediv__(self, other: "FunctionFactor") -> "FunctionFactor":
        return self * other.inverse()

    def __pow__(self, exponent: Number) -> "FunctionFactor":
        exponent = Fraction(exponent)
        return FunctionFactor(self.power * exponent, self.gauss * exponent, self.linear * exponent)

    def derivative(self) -> Tuple[Tuple[Fraction, "FunctionFactor"], ...]:
        """
        d/dx of x^a·e^(g x² + l x):
            a·x^(a−1)e^… + 2g·x^(a+1)e^… + l·x^a e^…
        Vanishing pieces are omitted.
        """
        a, g, l = self.power, self.gauss, self.linear
        pieces = []
        if a != 0:
            pieces.append((a, FunctionFactor(a - 1, g, l)))
        if g != 0:
            pieces.append((2 * g, FunctionFactor(a + 1, g, l)))
        if l != 0:
            pieces.append((l, FunctionFactor(a, g, l)))
        return tuple(pieces)

    def evaluate(self, t):
        """Float value at t (scalar or numpy array)."""
        t = np.asarray(t, dtype=float)
        value = np.exp(float(self.gauss) * t * t + float(self.linear) * t)
        if self.power != 0:
            if self.power.denominator == 1:
                value = value * t ** int(self.power)
            else:
                value = value * np.abs(t) ** float(self.power)
        return value

    def to_json(self) -> Dict[str, list]:
        return {
            "power": [self.power.numerator, self.power.denominator],
            "gauss": [self.gauss.numerator, self.gauss.denominator],
            "linear": [self.linear.numerator, self.linear.denominator],
        }


UNIT = FunctionFactor()
COORDINATE = FunctionFactor(1)
