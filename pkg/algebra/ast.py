"""
LadderKit — Operator Expression Trees

Pre-canonical trees built by the DSL lowering pass or by system constructors.
normal_order() folds a tree into the canonical OpExpr.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from algebra.errors import LowerError, OperatorPowerError
from algebra.function_factor import COORDINATE, FunctionFactor
from algebra.operators import IDENTITY, OpExpr, Term, multiply
from algebra.scalar import Scalar


class OpAst:
    """Base class of operator expression tree nodes."""


@dataclass(frozen=True)
class Coordinate(OpAst):
    pass


@dataclass(frozen=True)
class Momentum(OpAst):
    pass


@dataclass(frozen=True)
class FnLiteral(OpAst):
    fn: FunctionFactor


@dataclass(frozen=True)
class ScalarLiteral(OpAst):
    value: Scalar


@dataclass(frozen=True)
class Sum(OpAst):
    operands: Tuple[OpAst, ...]


@dataclass(frozen=True)
class Neg(OpAst):
    operand: OpAst


@dataclass(frozen=True)
class Product(OpAst):
    factors: Tuple[OpAst, ...]


@dataclass(frozen=True)
class Power(OpAst):
    base: OpAst
    exponent: Fraction


@dataclass(frozen=True)
class Commutator(OpAst):
    left: OpAst
    right: OpAst


class WorkBudget:
    """
    Caps the term products spent by one normal_order call.

    A product a·b costs len(a) · len(b) · (highest momentum power of a + 1),
    the number of Leibniz terms it can emit. The charge is taken before the
    product is formed.
    """

    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def charge(self, a: OpExpr, b: OpExpr) -> None:
        self.spent += len(a) * len(b) * (a.max_momentum + 1)
        if self.spent > self.limit:
            raise LowerError(f"normal ordering needs more than {self.limit} term products")


def _times(a: OpExpr, b: OpExpr, budget: Optional[WorkBudget]) -> OpExpr:
    if budget is not None:
        budget.charge(a, b)
    return multiply(a, b)


def normal_order(ast: OpAst, budget: Optional[WorkBudget] = None) -> OpExpr:
    """Canonical OpExpr of a tree; algebraically equal trees give identical results."""
    if isinstance(ast, OpExpr):
        return ast
    if isinstance(ast, Coordinate):
        return OpExpr.function(COORDINATE)
    if isinstance(ast, Momentum):
        return OpExpr.momentum(1)
    if isinstance(ast, FnLiteral):
        return OpExpr.function(ast.fn)
    if isinstance(ast, ScalarLiteral):
        return OpExpr.scalar(ast.value)
    if isinstance(ast, Sum):
        # single merge over all operands
        return OpExpr.from_terms(t for operand in ast.operands for t in normal_order(operand, budget).terms)
    if isinstance(ast, Neg):
        return -normal_order(ast.operand, budget)
    if isinstance(ast, Product):
        out = IDENTITY
        for factor in ast.factors:
            out = _times(out, normal_order(factor, budget), budget)
        return out
    if isinstance(ast, Power):
        return _power(normal_order(ast.base, budget), Fraction(ast.exponent), budget)
    if isinstance(ast, Commutator):
        left, right = normal_order(ast.left, budget), normal_order(ast.right, budget)
        return _times(left, right, budget) - _times(right, left, budget)
    raise TypeError(f"not an operator tree node: {type(ast).__name__}")


def _power(base: OpExpr, exponent: Fraction, budget: Optional[WorkBudget] = None) -> OpExpr:
    if exponent.denominator == 1 and exponent >= 0:
        out = IDENTITY
        for _ in range(int(exponent)):
            out = _times(out, base, budget)
        return out
    # negative and fractional powers only exist for a single function term
    if len(base.terms) != 1 or base.terms[0].mom != 0:
        raise OperatorPowerError(f"power {exponent} of a non-monomial operator")
    term = base.terms[0]
    try:
        coeff = term.coeff ** exponent
    except (ValueError, ZeroDivisionError) as e:
        raise OperatorPowerError(f"power {exponent} of coefficient {term.coeff}: {e}") from e
    return OpExpr.from_terms([Term(coeff, term.fn ** exponent)])


def expr_to_ast(expr: OpExpr) -> OpAst:
    """Embed a canonical expression back into a tree (used by system macros)."""
    terms = []
    for t in expr.terms:
        factors = [ScalarLiteral(t.coeff), FnLiteral(t.fn)]
        if t.mom:
            factors.append(Power(Momentum(), Fraction(t.mom)))
        terms.append(Product(tuple(factors)))
    return Sum(tuple(terms))
