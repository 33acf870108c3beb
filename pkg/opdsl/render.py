"""
LadderKit — Renderers

text   DSL source that parses back to the same expression
latex  display form; a common stratum and rational content is factored out
json   the term list with exact scalar, function-factor and momentum fields

Scalars, polynomials and wavefunctions render through the same helpers.
"""

import json
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Tuple

from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, Term
from algebra.scalar import ONE, Scalar
from config.constants import SCHEMA

FORMATS = ("text", "latex", "json")


# =============================================================================
# Shared pieces
# =============================================================================
def _is_negative(value: Scalar) -> bool:
    """True for negative reals and negative multiples of i."""
    if value.im == 0:
        return value.re < 0
    return value.re == 0 and value.im < 0


def _exponent_text(value: Fraction) -> str:
    if value.denominator == 1 and value > 0:
        return str(value.numerator)
    return f"({value})"


def _rational_text(value: Fraction, grouped: bool) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value})" if grouped else str(value)


# =============================================================================
# Text
# =============================================================================
def _complex_text(value: Scalar, alone: bool) -> List[str]:
    """Factors for the (re + i·im) part of a non-negative-looking scalar; [] for 1."""
    re, im = value.re, value.im
    if im == 0:
        if re == 1:
            return []
        return [_rational_text(re, grouped=not alone)]
    if re == 0:
        return ["i"] if im == 1 else [_rational_text(im, grouped=True), "i"]
    imag = "i" if abs(im) == 1 else f"{_rational_text(abs(im), grouped=True)}*i"
    sign = "+" if im > 0 else "-"
    return [f"({_rational_text(re, grouped=False)} {sign} {imag})"]


def _scalar_factors(value: Scalar, alone: bool) -> List[str]:
    factors = _complex_text(value, alone and value.radicand == 1 and value.pi_quarter == 0)
    if value.radicand != 1:
        factors.append(f"sqrt({value.radicand})")
    if value.pi_quarter:
        power = Fraction(value.pi_quarter, 4)
        factors.append("pi" if power == 1 else f"pi^{_exponent_text(power)}")
    return factors


def scalar_text(value: Scalar) -> str:
    """Exact scalar as DSL text, e.g. -1/2, (1/2)*sqrt(2), (1 + 2*i)*pi^(1/4)."""
    if value.is_zero:
        return "0"
    negative = _is_negative(value)
    factors = _scalar_factors(-value if negative else value, alone=True)
    body = "*".join(factors) if factors else "1"
    return f"-{body}" if negative else body


def _monomial_text(coeff: Fraction, power: int) -> str:
    body = "x" if power == 1 else f"x^{power}"
    magnitude = abs(coeff)
    if magnitude != 1:
        body = f"{_rational_text(magnitude, grouped=True)}*{body}"
    return body


def function_text(fn: FunctionFactor) -> List[str]:
    factors = []
    if fn.power != 0:
        factors.append("x" if fn.power == 1 else f"x^{_exponent_text(fn.power)}")
    if fn.has_exponential:
        pieces = []
        for coeff, power in ((fn.gauss, 2), (fn.linear, 1)):
            if coeff == 0:
                continue
            text = _monomial_text(coeff, power)
            if not pieces:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {text}")
        factors.append(f"exp({' '.join(pieces)})")
    return factors


def _term_text(term: Term) -> Tuple[bool, str]:
    negative = _is_negative(term.coeff)
    coeff = -term.coeff if negative else term.coeff
    tail = function_text(term.fn)
    if term.mom:
        tail.append("p" if term.mom == 1 else f"p^{term.mom}")
    factors = _scalar_factors(coeff, alone=not tail) + tail
    return negative, "*".join(factors) if factors else "1"


def _join(parts: List[Tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for idx, (negative, text) in enumerate(parts):
        if idx == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f"{'-' if negative else '+'} {text}")
    return " ".join(out)


def render_text(expr: OpExpr) -> str:
    return _join([_term_text(t) for t in expr.terms])


# =============================================================================
# LaTeX
# =============================================================================
def _frac_latex(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _scalar_latex(value: Scalar, alone: bool) -> str:
    """Latex for a scalar with no leading sign (callers strip it)."""
    re, im = value.re, value.im
    if im == 0:
        core = "" if (re == 1 and not alone) else _frac_latex(re)
    elif re == 0:
        core = "i" if im == 1 else f"{_frac_latex(im)} i"
    else:
        sign = "+" if im > 0 else "-"
        imag = "i" if abs(im) == 1 else f"{_frac_latex(abs(im))} i"
        core = f"\\left({_frac_latex(re)} {sign} {imag}\\right)"
    pieces = [core] if core else []
    if value.radicand != 1:
        pieces.append(f"\\sqrt{{{_frac_latex(value.radicand)}}}")
    if value.pi_quarter:
        power = Fraction(value.pi_quarter, 4)
        pieces.append("\\pi" if power == 1 else f"\\pi^{{{_frac_latex(power)}}}")
    if alone and core == "1" and len(pieces) > 1:
        pieces = pieces[1:]
    return " ".join(pieces)


def scalar_latex(value: Scalar) -> str:
    if value.is_zero:
        return "0"
    negative = _is_negative(value)
    positive = -value if negative else value
    # c·√r with c·r = 1/d reads better as 1/(d√r)
    if positive.is_real and positive.radicand != 1 and positive.pi_quarter == 0:
        reciprocal = positive.re * positive.radicand
        if reciprocal.numerator == 1:
            root = f"\\sqrt{{{_frac_latex(positive.radicand)}}}"
            denom = root if reciprocal.denominator == 1 else f"{reciprocal.denominator} {root}"
            return f"{'-' if negative else ''}\\frac{{1}}{{{denom}}}"
    body = _scalar_latex(positive, alone=True)
    return f"-{body}" if negative else body


def _function_latex(fn: FunctionFactor) -> List[str]:
    out = []
    if fn.power != 0:
        out.append("x" if fn.power == 1 else f"x^{{{_frac_latex(fn.power)}}}")
    if fn.has_exponential:
        pieces = []
        for coeff, power in ((fn.gauss, 2), (fn.linear, 1)):
            if coeff == 0:
                continue
            mono = "x" if power == 1 else "x^{2}"
            body = mono if abs(coeff) == 1 else f"{_frac_latex(abs(coeff))} {mono}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        out.append(f"e^{{{' '.join(pieces)}}}")
    return out


def _term_latex(term: Term) -> Tuple[bool, str]:
    negative = _is_negative(term.coeff)
    coeff = -term.coeff if negative else term.coeff
    tail = _function_latex(term.fn)
    if term.mom:
        tail.append("p" if term.mom == 1 else f"p^{{{term.mom}}}")
    head = _scalar_latex(coeff, alone=not tail)
    return negative, " ".join(([head] if head else []) + tail)


def _content(terms) -> Fraction:
    """Positive rational content: gcd of numerators over lcm of denominators."""
    parts = [v for t in terms for v in (t.coeff.re, t.coeff.im) if v != 0]
    numerator = reduce(gcd, (abs(v.numerator) for v in parts))
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in parts))
    return Fraction(numerator, denominator)


def render_latex(expr: OpExpr) -> str:
    if expr.is_zero:
        return "0"
    terms = sorted(expr.terms, key=lambda t: (-t.mom,) + t.sort_key()[1:])
    strata = {t.coeff.stratum for t in terms}
    if len(terms) > 1 and len(strata) == 1:
        radicand, pi_quarter = next(iter(strata))
        common = Scalar(re=_content(terms), radicand=radicand, pi_quarter=pi_quarter)
        if common != ONE:
            inner = [Term(t.coeff / common, t.fn, t.mom) for t in terms]
            body = _join([_term_latex(t) for t in inner])
            return f"{scalar_latex(common)}\\left({body}\\right)"
    return _join([_term_latex(t) for t in terms])


# =============================================================================
# JSON
# =============================================================================
def expr_to_json(expr: OpExpr) -> Dict[str, object]:
    return {
        "terms": [
            {"coeff": t.coeff.to_json(), "fn": t.fn.to_json(), "p": t.mom}
            for t in expr.terms
        ]
    }


def render_json(expr: OpExpr) -> str:
    return json.dumps(dict(schema=SCHEMA, **expr_to_json(expr)), sort_keys=True)


def render(expr: OpExpr, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(expr)
    if fmt == "latex":
        return render_latex(expr)
    if fmt == "json":
        return render_json(expr)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


# =============================================================================
# Polynomials
# =============================================================================
def polynomial_text(poly, variable: str = "u") -> str:
    """Descending powers of the argument variable, DSL-style."""
    parts = []
    for degree in range(poly.degree, -1, -1):
        coeff = poly.coefficient(degree)
        if coeff.is_zero:
            continue
        negative = _is_negative(coeff)
        magnitude = -coeff if negative else coeff
        tail = [] if degree == 0 else [variable if degree == 1 else f"{variable}^{degree}"]
        factors = _scalar_factors(magnitude, alone=not tail) + tail
        parts.append((negative, "*".join(factors) if factors else "1"))
    return _join(parts)


def polynomial_latex(poly, variable: str = "u") -> str:
    parts = []
    for degree in range(poly.degree, -1, -1):
        coeff = poly.coefficient(degree)
        if coeff.is_zero:
            continue
        negative = _is_negative(coeff)
        magnitude = -coeff if negative else coeff
        tail = [] if degree == 0 else [variable if degree == 1 else f"{variable}^{{{degree}}}"]
        head = _scalar_latex(magnitude, alone=not tail)
        parts.append((negative, " ".join(([head] if head else []) + tail)))
    return _join(parts)
