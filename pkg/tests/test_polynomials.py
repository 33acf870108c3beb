from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_genlaguerre, eval_hermite

from algebra.errors import InvalidQuantumNumbers, NonPolynomialResidue
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr
from models.system_spec import QuantumNumbers, get_system
from analysis.verification_pipeline import state_grid
from polynomials.classical import (chain_identity_2d, hermite, hermite_parity, laguerre_explicit, laguerre_recur_check,
                                   laguerre_recurrences)
from polynomials.polynomial import Argument, Polynomial
from polynomials.rodrigues import (coulomb_induction_identity, hermite_nested, hermite_operator_recurrence,
                                   laguerre_nested, planar_induction_identity, read_polynomial,
                                   reference_polynomial, rodrigues_equivalence, rodrigues_nested)

ALPHAS = [Fraction(j, 2) for j in range(1, 22, 2)] + [Fraction(j) for j in range(0, 11)]
GRID = np.linspace(0.05, 6.0, 25)


# =============================================================================
# Reference polynomials
# =============================================================================
def test_first_hermite_polynomials():
    assert hermite(0) == Polynomial.from_rationals([1])
    assert hermite(2) == Polynomial.from_rationals([-2, 0, 4])
    assert hermite(3) == Polynomial.from_rationals([0, -12, 0, 8])


def test_first_laguerre_polynomials():
    assert laguerre_explicit(1, 1) == Polynomial.from_rationals([2, -1])
    # L_2^(1/2)(x) = 15/8 − 5x/2 + x²/2
    assert laguerre_explicit(2, Fraction(1, 2)) == Polynomial.from_rationals(
        [Fraction(15, 8), Fraction(-5, 2), Fraction(1, 2)])


@pytest.mark.parametrize("n", range(11))
def test_hermite_values_match_scipy(n):
    np.testing.assert_allclose(hermite(n).evaluate(GRID).real, eval_hermite(n, GRID), rtol=1e-10)


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(3, 2), Fraction(1), Fraction(4)])
@pytest.mark.parametrize("k", range(8))
def test_laguerre_values_match_scipy(k, alpha):
    expected = eval_genlaguerre(k, float(alpha), GRID)
    np.testing.assert_allclose(laguerre_explicit(k, alpha).evaluate(GRID).real, expected, rtol=1e-9, atol=1e-12)


def test_laguerre_index_guard():
    with pytest.raises(ValueError):
        laguerre_explicit(2, -1)


# =============================================================================
# Recurrences and identities
# =============================================================================
@pytest.mark.parametrize("alpha", ALPHAS)
def test_laguerre_recurrences(alpha):
    for k in range(0, 9):
        assert laguerre_recurrences(k, alpha) == {
            "lowering_index": True, "three_term": True, "index_step": True}
    assert laguerre_recur_check(5, alpha)


@pytest.mark.parametrize("n", range(11))
def test_hermite_parity(n):
    assert hermite_parity(n)


def test_chain_identity_2d():
    assert all(chain_identity_2d(k, m) for m in range(1, 7) for k in range(0, 7))
    with pytest.raises(ValueError):
        chain_identity_2d(1, 0)


def test_hermite_recurrence_from_the_operator_form():
    assert all(hermite_operator_recurrence(n) for n in range(1, 10))


def test_coulomb_induction_identity():
    assert all(coulomb_induction_identity(n, l) for n in range(2, 9) for l in range(0, n - 1))
    with pytest.raises(InvalidQuantumNumbers):
        coulomb_induction_identity(3, 2)


def test_planar_induction_identity():
    assert all(planar_induction_identity(m, k) for m in range(1, 6) for k in range(0, 6))


# =============================================================================
# Operator Rodrigues formulas
# =============================================================================
def test_rodrigues_equals_reference(system):
    for qn in state_grid(system, 8):
        assert rodrigues_equivalence(system, qn), qn


def test_rodrigues_hermite_up_to_ten():
    sho = get_system("sho1d")
    for n in range(11):
        assert rodrigues_nested(sho, QuantumNumbers(0, n)) == reference_polynomial(sho, QuantumNumbers(0, n))


def test_hydrogen_polynomial_argument():
    coul = get_system("coul3d")
    poly = rodrigues_nested(coul, QuantumNumbers(0, 1))
    # L_1^(1)(u) = 2 − u with u = 2x/2 = x
    assert poly == Polynomial.from_rationals([2, -1], Argument("2x/n", 1, 1))


def test_operator_routes_of_the_coefficient_tables():
    for n in range(8):
        assert hermite_nested(n) == hermite(n)
    for alpha in (Fraction(0), Fraction(1, 2), Fraction(3)):
        for k in range(6):
            assert laguerre_nested(k, alpha) == laguerre_explicit(k, alpha)


def test_read_polynomial_rejects_residues():
    with pytest.raises(NonPolynomialResidue):
        read_polynomial(OpExpr.momentum(1), Argument())
    with pytest.raises(NonPolynomialResidue):
        read_polynomial(OpExpr.function(FunctionFactor(1, -1)), Argument())
    with pytest.raises(NonPolynomialResidue):
        read_polynomial(OpExpr.coordinate(3), Argument("x2", 2))


def test_1d_has_a_single_level():
    with pytest.raises(InvalidQuantumNumbers):
        rodrigues_nested(get_system("sho1d"), QuantumNumbers(1, 0))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_polynomial_product_evaluates_pointwise(i, j):
    a, b = hermite(i), laguerre_explicit(j, 1)
    np.testing.assert_allclose((a * b).evaluate(GRID), a.evaluate(GRID) * b.evaluate(GRID), rtol=1e-9)
