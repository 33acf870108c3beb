"""
LadderKit — Function-Class States

A FnState stands for g(x)·K where the kernel K is annihilated by
(p + i·c/x). Acting with p on such a state is the derivation

    D_c(h) = −i · (h′ + c·h/x)

so any normal-ordered operator can be applied by eliminating its momentum
powers one at a time. With c = 0 the kernel is the p-annihilated state of the
1D problem; c = 1/2 and c = 1 give the radial kernels in 2D and 3D.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, Term, ZERO_OP, derivative, multiply
from algebra.scalar import MINUS_I, Scalar

Number = Union[int, Fraction]


@dataclass(frozen=True)
class FnState:
    expr: OpExpr = ZERO_OP
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        if not self.expr.is_momentum_free:
            raise ValueError("a function-class state cannot carry momentum")
        object.__setattr__(self, "shift", Fraction(self.shift))

    @classmethod
    def from_parts(cls, parts: Iterable[Tuple[Scalar, FunctionFactor]], shift: Number = 0) -> "FnState":
        return cls(OpExpr.from_terms(Term(c, f) for c, f in parts), shift)

    @property
    def parts(self) -> Tuple[Tuple[Scalar, FunctionFactor], ...]:
        return tuple((t.coeff, t.fn) for t in self.expr.terms)

    @property
    def is_zero(self) -> bool:
        return self.expr.is_zero

    def _check_shift(self, other: "FnState"):
        if self.shift != other.shift:
            raise ValueError(f"states on different kernels (c={self.shift} vs c={other.shift})")

    def __add__(self, other: "FnState") -> "FnState":
        self._check_shift(other)
        return FnState(self.expr + other.expr, self.shift)

    def __sub__(self, other: "FnState") -> "FnState":
        self._check_shift(other)
        return FnState(self.expr - other.expr, self.shift)

    def scale(self, factor: Union[Scalar, Number]) -> "FnState":
        return FnState(self.expr.scale(factor), self.shift)


def kernel_derivation(h: OpExpr, shift: Number) -> OpExpr:
    """D_c(h) = −i(h′ + c·h/x) on a momentum-free expression."""
    shift = Fraction(shift)
    out = derivative(h)
    if shift != 0:
        out = out + multiply(OpExpr.coordinate(-1, shift), h)
    return out.scale(MINUS_I)


def apply_to_state(op: OpExpr, state: FnState) -> FnState:
    """
    Apply a normal-ordered operator to a function-class state.

    Every term c·f·p^m contributes c·f·D_c^m(g); the result carries no
    momentum and lives on the same kernel.
    """
    powers: Dict[int, OpExpr] = {0: state.expr}
    top = op.max_momentum
    for m in range(1, top + 1):
        powers[m] = kernel_derivation(powers[m - 1], state.shift)

    out = ZERO_OP
    for t in op.terms:
        out = out + multiply(OpExpr.function(t.fn, t.coeff), powers[t.mom])
    return FnState(out, state.shift)
