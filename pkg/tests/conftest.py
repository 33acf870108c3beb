"""
Shared fixtures and hypothesis strategies for the LadderKit suites.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from algebra.function_factor import FunctionFactor
from algebra.scalar import Scalar
from analysis.sampling import random_expr
from config.systems import SYSTEM_NAMES
from models.system_spec import get_system

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=6)
half_integers = st.integers(min_value=-4, max_value=6).map(lambda n: Fraction(n, 2))


@st.composite
def scalars(draw, radicand=None, pi_quarter=None, nonzero=False):
    re = draw(small_fractions)
    im = draw(small_fractions)
    if nonzero and re == 0 and im == 0:
        re = Fraction(1)
    return Scalar(
        re=re,
        im=im,
        radicand=radicand if radicand is not None else draw(st.sampled_from([1, 2, 3, 5, 6, Fraction(1, 2)])),
        pi_quarter=pi_quarter if pi_quarter is not None else draw(st.integers(-2, 2)),
    )


function_factors = st.builds(
    FunctionFactor,
    half_integers,
    st.sampled_from([Fraction(0), Fraction(-1), Fraction(-1, 2), Fraction(1, 3)]),
    st.sampled_from([Fraction(0), Fraction(-1), Fraction(1, 2)]),
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def expr_from_seed(seed: int, max_terms: int = 3):
    return random_expr(np.random.default_rng(seed), max_terms)


@pytest.fixture(params=SYSTEM_NAMES)
def system(request):
    return get_system(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
