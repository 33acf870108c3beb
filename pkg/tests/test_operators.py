from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.errors import OperatorPowerError
from algebra.function_factor import FunctionFactor
from algebra.operators import (IDENTITY, P, X, ZERO_OP, OpExpr, Term, adjoint, commutator,
                               derivative, fn_derivative, multiply)
from algebra.scalar import I, MINUS_I, Scalar
from algebra.states import FnState, apply_to_state, kernel_derivation
from conftest import expr_from_seed, function_factors, seeds
from opdsl.render import render_text


# =============================================================================
# Function class
# =============================================================================
@settings(max_examples=100, deadline=None)
@given(function_factors, function_factors)
def test_function_factors_multiply_componentwise(f, g):
    h = f * g
    assert (h.power, h.gauss, h.linear) == (f.power + g.power, f.gauss + g.gauss, f.linear + g.linear)
    assert (f * f.inverse()).is_one


def test_function_derivative():
    # d/dx x^2 e^{-x^2/2} = 2x e^{-x^2/2} - x^3 e^{-x^2/2}
    fn = FunctionFactor(2, Fraction(-1, 2))
    assert dict((g, c) for c, g in fn.derivative()) == {
        FunctionFactor(1, Fraction(-1, 2)): Fraction(2),
        FunctionFactor(3, Fraction(-1, 2)): Fraction(-1),
    }


@settings(max_examples=50, deadline=None)
@given(function_factors, st.floats(min_value=0.2, max_value=2.0))
def test_function_derivative_matches_finite_difference(fn, t):
    h = 1e-6
    expected = (fn.evaluate(t + h) - fn.evaluate(t - h)) / (2 * h)
    exact = sum(float(c) * g.evaluate(t) for c, g in fn.derivative())
    assert exact == pytest.approx(float(expected), rel=1e-5, abs=1e-6)


# =============================================================================
# Canonical commutators
# =============================================================================
def test_canonical_commutator():
    assert commutator(P, X) == OpExpr.scalar(MINUS_I)
    assert commutator(X, P) == OpExpr.scalar(I)


def test_commutator_with_gaussian():
    gauss = OpExpr.function(FunctionFactor(0, -1))
    result = commutator(P, gauss)
    assert result == OpExpr.function(FunctionFactor(1, -1), Scalar(im=2))
    assert render_text(result) == "2*i*x*exp(-x^2)"


def test_p_squared_past_a_power():
    # p² x² = x² p² − 4i x p − 2
    expected = OpExpr.from_terms([
        Term(Scalar(re=1), FunctionFactor(2), 2),
        Term(Scalar(im=-4), FunctionFactor(1), 1),
        Term(Scalar(re=-2)),
    ])
    assert multiply(P ** 2, X ** 2) == expected


def test_terms_with_different_strata_stay_separate():
    expr = OpExpr.scalar(1) + OpExpr.scalar(Scalar.sqrt_of(2))
    assert len(expr) == 2
    assert (expr - OpExpr.scalar(1)) == OpExpr.scalar(Scalar.sqrt_of(2))


def test_power_errors():
    with pytest.raises(OperatorPowerError):
        OpExpr.momentum(-1)
    with pytest.raises(OperatorPowerError):
        P ** -1


def test_derivative_rejects_momentum():
    with pytest.raises(ValueError):
        derivative(P)


# =============================================================================
# Algebraic laws on random expressions
# =============================================================================
@settings(max_examples=60, deadline=None)
@given(seeds, seeds, seeds)
def test_multiplication_is_associative(s1, s2, s3):
    a, b, c = expr_from_seed(s1), expr_from_seed(s2), expr_from_seed(s3)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(seeds, seeds, seeds)
def test_distributivity(s1, s2, s3):
    a, b, c = expr_from_seed(s1), expr_from_seed(s2), expr_from_seed(s3)
    assert a * (b + c) == a * b + a * c
    assert (b + c) * a == b * a + c * a


@settings(max_examples=40, deadline=None)
@given(seeds, seeds, seeds)
def test_jacobi_identity(s1, s2, s3):
    a, b, c = expr_from_seed(s1, 2), expr_from_seed(s2, 2), expr_from_seed(s3, 2)
    total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert total.is_zero


@settings(max_examples=60, deadline=None)
@given(seeds, seeds)
def test_adjoint_is_an_anti_involution(s1, s2):
    a, b = expr_from_seed(s1), expr_from_seed(s2)
    assert adjoint(adjoint(a)) == a
    assert adjoint(a * b) == adjoint(b) * adjoint(a)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_identity_and_zero(s):
    a = expr_from_seed(s)
    assert a * IDENTITY == a == IDENTITY * a
    assert (a - a) == ZERO_OP
    assert (a * ZERO_OP).is_zero


# =============================================================================
# Truncated-matrix oracle
# In the number basis, x = (a + a†)/√2 and p = i(a† − a)/√2. Polynomial
# operators multiply the same way on the upper-left block of the truncation.
# =============================================================================
N = 40


def _ladder_matrices(size: int):
    lower = np.diag(np.sqrt(np.arange(1, size)), k=1)
    raise_ = lower.T
    x = (lower + raise_) / np.sqrt(2)
    p = 1j * (raise_ - lower) / np.sqrt(2)
    return x, p


def _to_matrix(expr: OpExpr, size: int = N) -> np.ndarray:
    x, p = _ladder_matrices(size)
    out = np.zeros((size, size), dtype=complex)
    for t in expr.terms:
        power = int(t.fn.power)
        out += t.coeff.to_complex() * np.linalg.matrix_power(x, power) @ np.linalg.matrix_power(p, t.mom)
    return out


def _polynomial_expr(rng: np.random.Generator) -> OpExpr:
    terms = []
    for _ in range(int(rng.integers(1, 4))):
        coeff = Scalar(re=Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3))),
                       im=Fraction(int(rng.integers(-2, 3))))
        terms.append(Term(coeff, FunctionFactor(int(rng.integers(0, 3))), int(rng.integers(0, 3))))
    return OpExpr.from_terms(terms)


def _degree(expr: OpExpr) -> int:
    return max((int(t.fn.power) + t.mom for t in expr.terms), default=0)


@settings(max_examples=40, deadline=None)
@given(seeds, seeds)
def test_products_match_truncated_matrices(s1, s2):
    a = _polynomial_expr(np.random.default_rng(s1))
    b = _polynomial_expr(np.random.default_rng(s2))
    block = N - _degree(a) - _degree(b) - 1
    exact = _to_matrix(a * b)
    numeric = _to_matrix(a) @ _to_matrix(b)
    np.testing.assert_allclose(exact[:block, :block], numeric[:block, :block], atol=1e-8)


def test_canonical_commutator_in_the_truncation():
    x, p = _ladder_matrices(N)
    block = N - 1
    np.testing.assert_allclose((p @ x - x @ p)[:block, :block], -1j * np.eye(block), atol=1e-12)
    np.testing.assert_allclose(_to_matrix(commutator(P, X))[:block, :block], -1j * np.eye(block))


# =============================================================================
# Operators acting on function-class states
# =============================================================================
def test_kernel_derivation_on_plain_line():
    # p e^{-x²/2} = i x e^{-x²/2}
    state = FnState(OpExpr.function(FunctionFactor(0, Fraction(-1, 2))))
    assert apply_to_state(P, state).expr == OpExpr.function(FunctionFactor(1, Fraction(-1, 2)), I)


def test_kernel_derivation_with_radial_shift():
    # D_1(x^{-1}) = −i(−x^{-2} + x^{-2}) = 0: 1/x is the 3D radial kernel
    assert kernel_derivation(OpExpr.coordinate(-1), 1).is_zero


def test_fn_derivative_of_a_damped_root():
    # d/dx x^{1/2}e^{-x} = (1/2)x^{-1/2}e^{-x} - x^{1/2}e^{-x}
    f = FunctionFactor(Fraction(1, 2), 0, -1)
    expected = OpExpr.from_terms([
        Term(Scalar.of(Fraction(1, 2)), FunctionFactor(Fraction(-1, 2), 0, -1)),
        Term(Scalar.of(-1), FunctionFactor(Fraction(1, 2), 0, -1)),
    ])
    assert fn_derivative(f) == expected
    assert fn_derivative(FunctionFactor()).is_zero


@settings(max_examples=200, deadline=None)
@given(function_factors)
def test_momentum_acts_as_the_derivation_on_the_plain_kernel(f):
    state = FnState(OpExpr.function(f))
    assert apply_to_state(P, state).expr == fn_derivative(f).scale(MINUS_I)
    assert derivative(OpExpr.function(f)) == fn_derivative(f)


def test_states_reject_momentum():
    with pytest.raises(ValueError):
        FnState(P)


def test_states_on_different_kernels_do_not_add():
    with pytest.raises(ValueError):
        FnState(X, 0) + FnState(X, 1)
