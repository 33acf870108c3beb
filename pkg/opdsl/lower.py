"""
LadderKit — Operator DSL Lowering

Resolves the names, literals and calls of a parsed source tree into the
operator trees of algebra.ast:

  x, r, rho        coordinate
  p, pr, prho      momentum
  i, pi            the imaginary unit and π (π takes quarter-integer powers)
  sqrt(q)          √q for a non-negative rational constant q
  exp(g x² + l x)  exponential function factor; a constant part is rejected
  A(sys, level)    lowering operator of a system
  Adag(sys, level) its Hermitian conjugate
  H(sys, level)    the level Hamiltonian
"""

from fractions import Fraction
from math import ceil
from typing import NamedTuple, Optional

from algebra.ast import (Commutator, Coordinate, FnLiteral, Momentum, Neg, OpAst, Power, Product,
                         ScalarLiteral, Sum, WorkBudget, expr_to_ast, normal_order)
from algebra.errors import LowerError
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr
from algebra.scalar import I, Scalar
from config.constants import DEFAULTS, DSL_LIMITS
from models.ladder import hamiltonian, lowering_op, raising_op
from models.system_spec import check_level, get_system
from opdsl.parser import parse
from opdsl.syntax import Call, Name, Number

COORDINATE_NAMES = frozenset({"x", "r", "rho"})
MOMENTUM_NAMES = frozenset({"p", "pr", "prho"})

MACROS = {
    "A": lowering_op,
    "Adag": raising_op,
    "H": hamiltonian,
}


def _constant(node: OpAst, max_level: Optional[int]) -> Scalar:
    """Value of a subtree that must reduce to a plain scalar."""
    expr = normal_order(lower(node, max_level), WorkBudget(DSL_LIMITS["max_work"]))
    if expr.is_zero:
        return Scalar()
    if len(expr.terms) != 1 or expr.terms[0].mom != 0 or not expr.terms[0].fn.is_one:
        raise LowerError("expected a constant")
    return expr.terms[0].coeff


def _rational(node: OpAst, max_level: Optional[int], what: str) -> Fraction:
    value = _constant(node, max_level)
    if not value.is_rational:
        raise LowerError(f"{what} needs a rational argument, got {value}")
    return value.as_fraction()


def _exp_factor(node: OpAst, max_level: Optional[int]) -> FunctionFactor:
    expr = normal_order(lower(node, max_level), WorkBudget(DSL_LIMITS["max_work"]))
    gauss, linear = Fraction(0), Fraction(0)
    for t in expr.terms:
        if t.mom or t.fn.has_exponential or not t.coeff.is_rational:
            raise LowerError("exp() takes g*x^2 + l*x with rational g and l")
        if t.fn.power == 2:
            gauss = t.coeff.as_fraction()
        elif t.fn.power == 1:
            linear = t.coeff.as_fraction()
        elif t.fn.power == 0:
            raise LowerError("exp() with a constant term: scale the expression instead")
        else:
            raise LowerError(f"exp() argument has a term in x^{t.fn.power}")
    return FunctionFactor(0, gauss, linear)


def _macro(call: Call, max_level: Optional[int]) -> OpAst:
    if len(call.args) != 2:
        raise LowerError(f"{call.name}(system, level) takes two arguments")
    system_node, level_node = call.args
    if not isinstance(system_node, Name):
        raise LowerError(f"{call.name}: first argument must be a system name")
    system = get_system(system_node.name)
    if not isinstance(level_node, Number) or level_node.value.denominator != 1:
        raise LowerError(f"{call.name}: level must be an integer literal")
    level = check_level(int(level_node.value), max_level)
    return expr_to_ast(MACROS[call.name](system, level))


def _power(node: Power, max_level: Optional[int]) -> OpAst:
    exponent = Fraction(node.exponent)
    if abs(exponent) > DSL_LIMITS["max_exponent"]:
        raise LowerError(f"exponent {exponent} exceeds {DSL_LIMITS['max_exponent']}")
    if isinstance(node.base, Name) and node.base.name == "pi":
        quarters = 4 * exponent
        if quarters.denominator != 1:
            raise LowerError(f"pi takes quarter-integer powers, got {exponent}")
        return ScalarLiteral(Scalar.pi_power(int(quarters)))
    if exponent.denominator not in (1, 2):
        raise LowerError(f"exponent {exponent} is neither an integer nor a half-integer")
    return Power(lower(node.base, max_level), exponent)


def lower(node: OpAst, max_level: Optional[int] = None) -> OpAst:
    """
    Lower a parsed source tree to an operator tree.

    Raises
    ------
    UnknownSystem, LevelOutOfRange from the system macros; LowerError for
    names, calls and literals with no meaning in the operator algebra.
    """
    if isinstance(node, Name):
        if node.name in COORDINATE_NAMES:
            return Coordinate()
        if node.name in MOMENTUM_NAMES:
            return Momentum()
        if node.name == "i":
            return ScalarLiteral(I)
        if node.name == "pi":
            return ScalarLiteral(Scalar.pi_power(4))
        raise LowerError(f"unknown name {node.name!r} at offset {node.offset}")
    if isinstance(node, Number):
        return ScalarLiteral(Scalar(re=node.value))
    if isinstance(node, Call):
        if node.name in MACROS:
            return _macro(node, max_level)
        if len(node.args) != 1:
            raise LowerError(f"{node.name}() takes one argument")
        if node.name == "sqrt":
            value = _rational(node.args[0], max_level, "sqrt")
            if value < 0:
                raise LowerError(f"sqrt of negative rational {value}")
            if (value.numerator * value.denominator).bit_length() > DSL_LIMITS["max_radicand_bits"]:
                raise LowerError(f"sqrt argument larger than {DSL_LIMITS['max_radicand_bits']} bits")
            return ScalarLiteral(Scalar.sqrt_of(value))
        if node.name == "exp":
            return FnLiteral(_exp_factor(node.args[0], max_level))
        raise LowerError(f"unknown function {node.name!r}")
    if isinstance(node, Sum):
        return Sum(tuple(lower(operand, max_level) for operand in node.operands))
    if isinstance(node, Neg):
        return Neg(lower(node.operand, max_level))
    if isinstance(node, Product):
        return Product(tuple(lower(factor, max_level) for factor in node.factors))
    if isinstance(node, Power):
        return _power(node, max_level)
    if isinstance(node, Commutator):
        return Commutator(lower(node.left, max_level), lower(node.right, max_level))
    raise LowerError(f"cannot lower {type(node).__name__}")


# =============================================================================
# Size guards
# Degrees and constant sizes are read off the parsed tree before lowering;
# the term products of normal ordering are capped by a WorkBudget.
# =============================================================================
class Cost(NamedTuple):
    mom: int = 0       # momentum degree
    degree: int = 0    # x and p degree
    bits: int = 0      # size of the rational constants


MACRO_COST = Cost(mom=2, degree=4, bits=64)


def _check(cost: Cost, node: OpAst) -> Cost:
    offset = getattr(node, "offset", None)
    where = f" at offset {offset}" if offset is not None else ""
    if max(cost.mom, cost.degree) > DSL_LIMITS["max_degree"]:
        raise LowerError(f"operator degree {max(cost.mom, cost.degree)}{where} "
                         f"exceeds {DSL_LIMITS['max_degree']}")
    if cost.bits > DSL_LIMITS["max_literal_bits"]:
        raise LowerError(f"constants{where} grow beyond {DSL_LIMITS['max_literal_bits']} bits")
    return cost


def estimate_cost(node: OpAst) -> Cost:
    """
    Upper bounds on the degree and constant size of a parsed tree, nested
    powers multiplied out.

    Raises
    ------
    LowerError as soon as a subtree exceeds a DSL_LIMITS cap.
    """
    if isinstance(node, Name):
        if node.name in COORDINATE_NAMES:
            return Cost(degree=1)
        if node.name in MOMENTUM_NAMES:
            return Cost(mom=1, degree=1)
        return Cost()
    if isinstance(node, Number):
        value = node.value
        return _check(Cost(bits=value.numerator.bit_length() + value.denominator.bit_length()), node)
    if isinstance(node, Call):
        if node.name in MACROS:
            return MACRO_COST
        inner = [estimate_cost(arg) for arg in node.args]
        if any(c.mom for c in inner):
            raise LowerError(f"{node.name}() at offset {node.offset} takes a momentum-free argument")
        bits = max((c.bits for c in inner), default=0)
        return _check(Cost(degree=2 if node.name == "exp" else 0, bits=bits), node)
    if isinstance(node, Sum):
        parts = [estimate_cost(operand) for operand in node.operands]
        return _check(Cost(max(c.mom for c in parts), max(c.degree for c in parts),
                           max(c.bits for c in parts) + len(parts)), node)
    if isinstance(node, Neg):
        return estimate_cost(node.operand)
    if isinstance(node, (Product, Commutator)):
        factors = node.factors if isinstance(node, Product) else (node.left, node.right)
        total = Cost()
        for factor in factors:
            part = estimate_cost(factor)
            total = _check(Cost(total.mom + part.mom, total.degree + part.degree, total.bits + part.bits), node)
        return total
    if isinstance(node, Power):
        if isinstance(node.base, Name) and node.base.name == "pi":
            return Cost()
        base = estimate_cost(node.base)
        exponent = Fraction(node.exponent)
        if exponent.denominator == 1 and exponent >= 0:
            e = int(exponent)
            return _check(Cost(base.mom * e, base.degree * e, base.bits * e), node)
        if base.bits > DSL_LIMITS["max_radicand_bits"]:
            raise LowerError(f"fractional power of a constant larger than "
                             f"{DSL_LIMITS['max_radicand_bits']} bits")
        scale = abs(exponent)
        return _check(Cost(base.mom, ceil(base.degree * scale), ceil(base.bits * scale) + 1), node)
    raise LowerError(f"cannot lower {type(node).__name__}")


def to_operator(text: str, max_level: Optional[int] = DEFAULTS["max_level"]) -> OpExpr:
    """parse → size guards → lower → normal_order under a WorkBudget."""
    tree = parse(text)
    estimate_cost(tree)
    return normal_order(lower(tree, max_level), WorkBudget(DSL_LIMITS["max_work"]))
