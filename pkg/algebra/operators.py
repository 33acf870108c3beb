"""
LadderKit — Normal-Ordered Operator Algebra

An OpExpr is a finite sum of terms  coeff · f(x) · p^mom  with every momentum
factor to the right of the coordinate function. The single rewriting rule is

    p · f = f · p − i · f′

applied through the Leibniz expansion

    p^m · f = Σ_j  C(m, j) · (−i)^j · f^(j) · p^(m−j)

so every product lands back in normal order in one pass.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Tuple, Union

from algebra.errors import OperatorPowerError
from algebra.function_factor import COORDINATE, UNIT, FunctionFactor
from algebra.scalar import I, ONE, Scalar, minus_i_power

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Term:
    coeff: Scalar
    fn: FunctionFactor = UNIT
    mom: int = 0

    @property
    def key(self) -> Tuple:
        return self.fn, self.mom, self.coeff.radicand, self.coeff.pi_quarter

    def sort_key(self) -> Tuple:
        return (self.mom, self.fn.power, self.fn.gauss, self.fn.linear,
                self.coeff.radicand, self.coeff.pi_quarter)


@dataclass(frozen=True)
class OpExpr:
    terms: Tuple[Term, ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "OpExpr":
        merged: Dict[Tuple, Scalar] = {}
        for term in terms:
            if term.coeff.is_zero:
                continue
            key = term.key
            merged[key] = merged[key] + term.coeff if key in merged else term.coeff
        kept = [Term(c, key[0], key[1]) for key, c in merged.items() if not c.is_zero]
        kept.sort(key=Term.sort_key)
        return cls(tuple(kept))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def scalar(cls, value: Union[Scalar, Number]) -> "OpExpr":
        return cls.from_terms([Term(Scalar.of(value))])

    @classmethod
    def function(cls, fn: FunctionFactor, coeff: Union[Scalar, Number] = ONE) -> "OpExpr":
        return cls.from_terms([Term(Scalar.of(coeff), fn)])

    @classmethod
    def momentum(cls, power: int = 1, coeff: Union[Scalar, Number] = ONE) -> "OpExpr":
        if power < 0:
            raise OperatorPowerError(f"negative momentum power {power}")
        return cls.from_terms([Term(Scalar.of(coeff), UNIT, power)])

    @classmethod
    def coordinate(cls, power: Number = 1, coeff: Union[Scalar, Number] = ONE) -> "OpExpr":
        return cls.function(FunctionFactor(power), coeff)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_momentum_free(self) -> bool:
        return all(t.mom == 0 for t in self.terms)

    @property
    def max_momentum(self) -> int:
        return max((t.mom for t in self.terms), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other) -> "OpExpr":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return OpExpr.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "OpExpr":
        return self.scale(-ONE)

    def __sub__(self, other) -> "OpExpr":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "OpExpr":
        return _coerce(other) - self

    def scale(self, factor: Union[Scalar, Number]) -> "OpExpr":
        factor = Scalar.of(factor)
        return OpExpr.from_terms(Term(factor * t.coeff, t.fn, t.mom) for t in self.terms)

    def __mul__(self, other) -> "OpExpr":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, OpExpr):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> "OpExpr":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> "OpExpr":
        if not isinstance(power, int) or power < 0:
            raise OperatorPowerError(f"operator power must be a non-negative integer, got {power}")
        result = IDENTITY
        for _ in range(power):
            result = result * self
        return result

    def adjoint(self) -> "OpExpr":
        return adjoint(self)


def _coerce(value) -> "OpExpr":
    if isinstance(value, OpExpr):
        return value
    if isinstance(value, (Scalar, int, Fraction)):
        return OpExpr.scalar(value)
    return None


# -----------------------------------------------------------------------------
# Derivatives of the function class
# -----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def nth_derivative(fn: FunctionFactor, order: int) -> Tuple[Tuple[FunctionFactor, Fraction], ...]:
    if order == 0:
        return ((fn, Fraction(1)),)
    acc: Dict[FunctionFactor, Fraction] = {}
    for part, weight in nth_derivative(fn, order - 1):
        for c, g in part.derivative():
            acc[g] = acc.get(g, Fraction(0)) + weight * c
    return tuple((g, w) for g, w in sorted(acc.items()) if w != 0)


@lru_cache(maxsize=None)
def _move_momentum(mom: int, fn: FunctionFactor) -> Tuple[Tuple[Scalar, FunctionFactor, int], ...]:
    """p^mom · fn as normal-ordered (coeff, function, momentum) triples."""
    out = []
    for j in range(mom + 1):
        phase = minus_i_power(j) * comb(mom, j)
        for g, w in nth_derivative(fn, j):
            out.append((phase * w, g, mom - j))
    return tuple(out)


def fn_derivative(fn: FunctionFactor) -> OpExpr:
    """The momentum-free OpExpr of f′."""
    return OpExpr.from_terms(Term(Scalar.of(c), g) for c, g in fn.derivative())


def derivative(expr: OpExpr) -> OpExpr:
    """Coordinate derivative of a momentum-free expression."""
    if not expr.is_momentum_free:
        raise ValueError("derivative is only defined on momentum-free expressions")
    return OpExpr.from_terms(
        Term(t.coeff * d.coeff, d.fn) for t in expr.terms for d in fn_derivative(t.fn).terms
    )


# -----------------------------------------------------------------------------
# Products, commutators, adjoints
# -----------------------------------------------------------------------------
def multiply(a: OpExpr, b: OpExpr) -> OpExpr:
    out: List[Term] = []
    for left in a.terms:
        for right in b.terms:
            coeff = left.coeff * right.coeff
            if left.mom == 0:
                out.append(Term(coeff, left.fn * right.fn, right.mom))
                continue
            for c, g, m in _move_momentum(left.mom, right.fn):
                out.append(Term(coeff * c, left.fn * g, m + right.mom))
    return OpExpr.from_terms(out)


def commutator(a: OpExpr, b: OpExpr) -> OpExpr:
    """[a, b] = ab − ba, normal-ordered."""
    return multiply(a, b) - multiply(b, a)


def adjoint(expr: OpExpr) -> OpExpr:
    """
    Hermitian conjugate. Coordinate functions are real and p is Hermitian,
    so (c·f·p^m)† = c̄ · p^m · f.
    """
    out = ZERO_OP
    for t in expr.terms:
        moved = multiply(OpExpr.momentum(t.mom), OpExpr.function(t.fn))
        out = out + moved.scale(t.coeff.conjugate())
    return out


ZERO_OP = OpExpr()
IDENTITY = OpExpr.scalar(1)
X = OpExpr.function(COORDINATE)
P = OpExpr.momentum(1)
IMAG = OpExpr.scalar(I)
