"""
LadderKit — Random Operator Samples

Seeded generators for the randomized suites of `verify` and the tests:

  random_tree        operator trees of bounded depth over x, p, function
                     literals, scalar literals, sums, products, small powers
                     and commutators
  rewrite_tree       an algebraically equal tree: reassociated products,
                     expanded commutators and powers, distributed products,
                     shuffled sums
  random_expr        canonical expressions with mixed-stratum coefficients
"""

from fractions import Fraction
from typing import List

import numpy as np

from algebra.ast import (Commutator, Coordinate, FnLiteral, Momentum, Neg, OpAst, Power,
                         Product, ScalarLiteral, Sum, normal_order)
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, Term
from algebra.scalar import I, Scalar

POWERS = [Fraction(p, 2) for p in range(-4, 7)]
GAUSS = [Fraction(0), Fraction(0), Fraction(-1), Fraction(-1, 2), Fraction(1, 3)]
LINEAR = [Fraction(0), Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-2, 3)]
RADICANDS = [1, 1, 1, 2, 3, 6]
PI_QUARTERS = [0, 0, 0, -1, 1, 2]


def _pick(rng: np.random.Generator, values):
    return values[int(rng.integers(len(values)))]


def _rational(rng: np.random.Generator, span: int = 5) -> Fraction:
    return Fraction(int(rng.integers(-span, span + 1)), int(rng.integers(1, 4)))


def random_scalar(rng: np.random.Generator) -> Scalar:
    re, im = _rational(rng), _rational(rng)
    if re == 0 and im == 0:
        re = Fraction(1)
    return Scalar(re=re, im=im, radicand=_pick(rng, RADICANDS), pi_quarter=_pick(rng, PI_QUARTERS))


def random_factor(rng: np.random.Generator) -> FunctionFactor:
    return FunctionFactor(_pick(rng, POWERS), _pick(rng, GAUSS), _pick(rng, LINEAR))


# -----------------------------------------------------------------------------
# Trees
# -----------------------------------------------------------------------------
def _leaf(rng: np.random.Generator) -> OpAst:
    choice = int(rng.integers(5))
    if choice == 0:
        return Coordinate()
    if choice == 1:
        return Momentum()
    if choice == 2:
        return FnLiteral(random_factor(rng))
    if choice == 3:
        return ScalarLiteral(I)
    return ScalarLiteral(Scalar(re=_rational(rng) or Fraction(1), radicand=_pick(rng, RADICANDS)))


def random_tree(rng: np.random.Generator, depth: int = 6) -> OpAst:
    """A random operator tree; momentum stays out of exponents and powers stay small."""
    if depth <= 1 or rng.random() < 0.4:
        return _leaf(rng)
    kind = int(rng.integers(5))
    child = depth - 1
    if kind == 0:
        return Sum(tuple(random_tree(rng, child) for _ in range(int(rng.integers(2, 4)))))
    if kind == 1:
        return Product(tuple(random_tree(rng, child) for _ in range(int(rng.integers(2, 4)))))
    if kind == 2:
        return Commutator(random_tree(rng, child), random_tree(rng, child))
    if kind == 3:
        return Power(random_tree(rng, min(child, 2)), Fraction(int(rng.integers(0, 3))))
    return Neg(random_tree(rng, child))


def rewrite_tree(tree: OpAst, rng: np.random.Generator) -> OpAst:
    """An algebraically equal tree with a different shape."""
    if isinstance(tree, Sum):
        operands = [rewrite_tree(t, rng) for t in tree.operands]
        order = rng.permutation(len(operands))
        return Sum(tuple(operands[i] for i in order))
    if isinstance(tree, Product):
        factors = [rewrite_tree(t, rng) for t in tree.factors]
        if len(factors) > 2 and rng.random() < 0.5:
            cut = int(rng.integers(1, len(factors)))
            return Product((Product(tuple(factors[:cut])), Product(tuple(factors[cut:]))))
        if isinstance(factors[-1], Sum) and rng.random() < 0.5:
            head = tuple(factors[:-1])
            return Sum(tuple(Product(head + (t,)) for t in factors[-1].operands))
        return Product(tuple(factors))
    if isinstance(tree, Commutator):
        left, right = rewrite_tree(tree.left, rng), rewrite_tree(tree.right, rng)
        if rng.random() < 0.5:
            return Sum((Product((left, right)), Neg(Product((right, left)))))
        return Neg(Commutator(right, left))
    if isinstance(tree, Power):
        base = rewrite_tree(tree.base, rng)
        n = int(tree.exponent)
        if n == 0:
            return ScalarLiteral(Scalar(re=Fraction(1)))
        return Product(tuple(base for _ in range(n)))
    if isinstance(tree, Neg):
        inner = rewrite_tree(tree.operand, rng)
        if rng.random() < 0.5:
            return Product((ScalarLiteral(Scalar(re=Fraction(-1))), inner))
        return Neg(inner)
    return tree


def confluence_case(rng: np.random.Generator, depth: int = 6) -> bool:
    tree = random_tree(rng, depth)
    return normal_order(tree) == normal_order(rewrite_tree(tree, rng))


# -----------------------------------------------------------------------------
# Canonical expressions
# -----------------------------------------------------------------------------
def random_expr(rng: np.random.Generator, max_terms: int = 4) -> OpExpr:
    terms: List[Term] = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        terms.append(Term(random_scalar(rng), random_factor(rng), int(rng.integers(0, 4))))
    return OpExpr.from_terms(terms)
