from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.ast import Coordinate, Momentum, WorkBudget, normal_order
from algebra.errors import LadderKitError, LevelOutOfRange, LowerError, ParseError, UnknownSystem
from algebra.function_factor import FunctionFactor
from algebra.operators import P, X, OpExpr, Term, commutator
from algebra.scalar import I, MINUS_I, Scalar
from config.constants import DSL_LIMITS
from conftest import expr_from_seed, seeds
from models.ladder import hamiltonian, lowering_op, raising_op
from models.system_spec import get_system
from opdsl.lexer import tokenize
from opdsl.lower import estimate_cost, to_operator
from opdsl.parser import parse
from opdsl.render import render, render_json, render_latex, render_text, scalar_latex
from opdsl.syntax import Call, Name, Number, Power, Product, Sum


# =============================================================================
# Lexer
# =============================================================================
def test_tokens_carry_offsets():
    tokens = tokenize("exp(-x^2) + 3")
    assert [(t.kind, t.offset) for t in tokens] == [
        ("ident", 0), ("lparen", 3), ("minus", 4), ("ident", 5), ("caret", 6),
        ("integer", 7), ("rparen", 8), ("plus", 10), ("integer", 12), ("end", 13),
    ]


def test_lexer_rejects_unknown_characters():
    with pytest.raises(ParseError) as info:
        tokenize("x $ p")
    assert info.value.offset == 2


def test_lexer_rejects_huge_literals():
    with pytest.raises(ParseError):
        tokenize("1" * 1001)


# =============================================================================
# Parser
# =============================================================================
def test_parse_tree_shape():
    tree = parse("x + 2*p")
    assert isinstance(tree, Sum)
    assert isinstance(tree.operands[0], Name)
    assert isinstance(tree.operands[1], Product)
    assert isinstance(tree.operands[1].factors[0], Number)


def test_calls_and_juxtaposition():
    assert isinstance(parse("exp(-x^2)"), Call)
    # p is not callable: p(x) is the product p·x
    assert isinstance(parse("p(x)"), Product)


@pytest.mark.parametrize("source, expected", [
    ("-x^2", OpExpr.coordinate(2, -1)),
    ("x^2^3", OpExpr.coordinate(8)),
    ("x - p - x", -P),
    ("[x, p]", OpExpr.scalar(I)),
    ("[p, x]", OpExpr.scalar(MINUS_I)),
    ("p(x)", X * P + OpExpr.scalar(MINUS_I)),
    ("p*x", X * P + OpExpr.scalar(MINUS_I)),
    ("2*x + 3*x", OpExpr.coordinate(1, 5)),
    ("x^(-1/2) * x^(1/2)", OpExpr.scalar(1)),
    ("(1/2)*sqrt(8)", OpExpr.scalar(Scalar.sqrt_of(2))),
    ("pi^(1/4)", OpExpr.scalar(Scalar.pi_power(1))),
    ("r*pr - rho*prho", OpExpr()),
    ("3/4", OpExpr.scalar(Fraction(3, 4))),
])
def test_precedence_goldens(source, expected):
    assert to_operator(source) == expected


@pytest.mark.parametrize("source, offset", [
    ("x +", 3),
    ("[x p]", 3),
    ("(x", 2),
    ("x)", 1),
    ("p x", 2),
    ("x^", 2),
    ("x^p", 2),
    ("1/0", 2),
    ("exp(x", 5),
])
def test_parse_errors_carry_offsets(source, offset):
    with pytest.raises(ParseError) as info:
        parse(source)
    assert info.value.offset == offset
    assert info.value.expected


def test_nesting_guard():
    with pytest.raises(ParseError):
        parse("(" * 150 + "x" + ")" * 150)
    assert to_operator("(" * 50 + "x" + ")" * 50) == X


def test_length_guard():
    with pytest.raises(ParseError):
        parse("x + " * 20 + "x", max_length=16)


# =============================================================================
# Lowering
# =============================================================================
def test_the_commutator_example():
    assert render_text(to_operator("[p, exp(-x^2)]")) == "2*i*x*exp(-x^2)"


def test_system_macros():
    coul = get_system("coul3d")
    assert to_operator("A(coul3d, 1)") == lowering_op(coul, 1)
    assert to_operator("Adag(coul3d, 1)") == raising_op(coul, 1)
    assert to_operator("H(sho1d, 0)") == hamiltonian(get_system("sho1d"), 0)
    # Â†Â + E = Ĥ
    expr = to_operator("Adag(osc3d, 2)*A(osc3d, 2) + 7/2")
    assert expr == hamiltonian(get_system("osc3d"), 2)


@pytest.mark.parametrize("source, error", [
    ("exp(1 + x)", LowerError),
    ("exp(p)", LowerError),
    ("exp(x^3)", LowerError),
    ("foo", LowerError),
    ("sqrt(x)", LowerError),
    ("sqrt(-2)", LowerError),
    ("x^(1/3)", LowerError),
    ("pi^(1/8)", LowerError),
    ("x^65", LowerError),
    ("cos(x)", LowerError),
    ("A(morse, 1)", UnknownSystem),
    ("A(coul3d, 13)", LevelOutOfRange),
    ("A(coul3d)", LowerError),
])
def test_lowering_errors(source, error):
    with pytest.raises(error):
        to_operator(source)


def test_level_guard_follows_max_level():
    assert to_operator("A(coul3d, 13)", max_level=20) == lowering_op(get_system("coul3d"), 13)


# =============================================================================
# Size guards
# =============================================================================
@pytest.mark.parametrize("source", [
    "((x+p)^16)^16",
    "(x+p)^32*(x+p)^33",
    "[p^40, x^40]",
    "exp(x^2)^33",
    "(x^(1/2))^130",
])
def test_degree_guard_multiplies_nested_exponents(source):
    with pytest.raises(LowerError, match="degree"):
        estimate_cost(parse(source))
    with pytest.raises(LowerError):
        to_operator(source)


def test_work_budget_stops_wide_powers():
    # degree 64 passes the static guard; the term count does not
    assert estimate_cost(parse("(x+p)^64")).degree == 64
    with pytest.raises(LowerError, match="term products"):
        to_operator("(x+p)^64")


def test_work_budget_counts_leibniz_terms():
    budget = WorkBudget(10)
    budget.charge(P * P, X)
    assert budget.spent == 3
    with pytest.raises(LowerError):
        budget.charge(P * P, X + X * X + X * X * X)


def test_moderate_powers_still_lower():
    expr = to_operator("(x+p)^6")
    assert expr == normal_order(Power(Sum((Coordinate(), Momentum())), Fraction(6)))
    assert to_operator("x^64") == OpExpr.coordinate(64)


def test_constant_size_guards():
    big = "9" * DSL_LIMITS["max_integer_digits"]
    with pytest.raises(LowerError, match="bits"):
        to_operator(f"({big})^64")
    with pytest.raises(LowerError, match="bits"):
        to_operator(f"sqrt({big})")
    with pytest.raises(LowerError, match="bits"):
        to_operator(f"({big})^(1/2)")
    assert to_operator("sqrt(18446744073709551557)") == OpExpr.scalar(Scalar.sqrt_of(18446744073709551557))


def test_long_sums_merge_once():
    source = " + ".join(["x*p"] * 4000)
    assert to_operator(source) == (X * P).scale(4000)


# =============================================================================
# Rendering
# =============================================================================
def test_latex_factors_common_content():
    a = lowering_op(get_system("sho1d"), 0)
    assert render_latex(a) == "\\frac{1}{\\sqrt{2}}\\left(p - i x\\right)"


def test_scalar_latex():
    assert scalar_latex(Scalar.sqrt_of(Fraction(1, 8))) == "\\frac{1}{2 \\sqrt{2}}"
    assert scalar_latex(Scalar(re=Fraction(-3, 4))) == "-\\frac{3}{4}"


def test_json_render_is_versioned():
    text = render_json(to_operator("x*p"))
    assert text.startswith("{") and '"schema": "ladderkit/1"' in text


def test_unknown_format():
    with pytest.raises(ValueError):
        render(X, "markdown")


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_text_round_trip(seed):
    expr = expr_from_seed(seed, 4)
    assert to_operator(render_text(expr)) == expr


def test_round_trip_of_awkward_terms():
    expr = OpExpr.from_terms([
        Term(Scalar(re=Fraction(-2, 3), im=Fraction(1, 2), radicand=3, pi_quarter=-1),
             FunctionFactor(Fraction(-3, 2), Fraction(1, 3), Fraction(-2, 3)), 3),
        Term(Scalar(im=Fraction(-1)), FunctionFactor(0, 0, Fraction(1, 2))),
        Term(Scalar(re=Fraction(5, 7))),
    ])
    assert to_operator(render_text(expr)) == expr


# =============================================================================
# Fuzzing: every input parses or fails with a LadderKitError
# =============================================================================
FUZZ_ALPHABET = "xpri()[],+-*/^0123456789 ephAdagHsqtco_$"
INPUT_CAP = 64 * 1024


def _survives(source: str, lower_it: bool) -> bool:
    try:
        if lower_it:
            to_operator(source)
        else:
            parse(source)
    except LadderKitError:
        pass
    return True


def test_random_token_soup_never_crashes():
    rng = np.random.default_rng(2024)
    alphabet = np.array(list(FUZZ_ALPHABET))
    for _ in range(10_000):
        size = int(rng.integers(0, 48))
        assert _survives("".join(rng.choice(alphabet, size)), lower_it=False)


def test_long_token_soup_never_crashes():
    rng = np.random.default_rng(7)
    alphabet = np.array(list(FUZZ_ALPHABET))
    for _ in range(20):
        size = int(rng.integers(INPUT_CAP // 2, INPUT_CAP + 1))
        assert _survives("".join(rng.choice(alphabet, size)), lower_it=True)


def test_random_bytes_never_crash():
    rng = np.random.default_rng(11)
    for _ in range(20):
        size = int(rng.integers(0, INPUT_CAP + 1))
        raw = rng.integers(0, 256, size, dtype=np.uint8).tobytes()
        assert _survives(raw.decode("utf-8", errors="replace"), lower_it=True)
        assert _survives(raw.decode("latin-1"), lower_it=True)


def test_nesting_at_the_depth_limit():
    depth = DSL_LIMITS["max_depth"]
    assert to_operator("(" * depth + "x" + ")" * depth) == X
    assert to_operator("-(" * (depth // 2) + "x" + ")" * (depth // 2)) == X
    for source in ("(" * (depth + 1) + "x" + ")" * (depth + 1),
                   "-" * (depth + 1) + "x",
                   "[" * INPUT_CAP,
                   "(" * INPUT_CAP + "x" + ")" * INPUT_CAP):
        with pytest.raises(ParseError):
            to_operator(source)


def test_long_valid_input():
    terms = ["x*p", "(x+p)^3", "-[p, x^2]"]
    count = INPUT_CAP // 12
    source = " + ".join(terms[i % 3] for i in range(count))
    assert len(source) < INPUT_CAP
    expected = ((X * P).scale(len(range(0, count, 3)))
                + ((X + P) ** 3).scale(len(range(1, count, 3)))
                - commutator(P, X * X).scale(len(range(2, count, 3))))
    assert to_operator(source) == expected


def test_integers_at_the_digit_limit():
    digits = DSL_LIMITS["max_integer_digits"]
    big = int("9" * digits)
    assert to_operator("9" * digits) == OpExpr.scalar(big)
    assert to_operator(f"{'9' * digits}/{'7' * digits}*x") == OpExpr.coordinate(1, Fraction(big, int("7" * digits)))
    assert to_operator(f"({'9' * digits})^2") == OpExpr.scalar(big ** 2)
    with pytest.raises(ParseError):
        to_operator("9" * (digits + 1))
    with pytest.raises(ParseError):
        to_operator(f"x^{'9' * (digits + 1)}")
    with pytest.raises(LowerError):
        to_operator(f"x^{'9' * digits}")


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet=FUZZ_ALPHABET, max_size=40))
def test_lowering_never_crashes(source):
    assert _survives(source, lower_it=True)


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=200))
def test_arbitrary_unicode_never_crashes(source):
    assert _survives(source, lower_it=False)


@settings(max_examples=10, deadline=None)
@given(st.binary(min_size=1024, max_size=INPUT_CAP))
def test_arbitrary_bytes_never_crash(raw):
    assert _survives(raw.decode("utf-8", errors="replace"), lower_it=True)
