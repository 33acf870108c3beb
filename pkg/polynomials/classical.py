"""
LadderKit — Hermite and Associated Laguerre Polynomials

The reference side of every Rodrigues comparison:
  - hermite(n): physicist normalization from H_{n+1} = 2y H_n − 2n H_{n−1}
  - laguerre_explicit(k, α): coefficient of x^j is (−1)^j · C(k+α, k−j) / j!
    with C(·,·) for rational α computed from falling-factorial products

and the identities the induction arguments lean on:
  (lowering α)   k L_k^(α) = (k+α) L_{k−1}^(α) − x L_{k−1}^(α+1)
  (three-term)   k L_k^(α) = (2k+α−1−x) L_{k−1}^(α) − (k+α−1) L_{k−2}^(α)
  (index step)   L_k^(α+1) − L_{k−1}^(α+1) = L_k^(α)
with L_{−1} = L_{−2} = 0.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Union

from polynomials.polynomial import Polynomial

Number = Union[int, Fraction]

X_POLY = Polynomial.from_rationals([0, 1])


@lru_cache(maxsize=None)
def hermite(n: int) -> Polynomial:
    if n < 0:
        raise ValueError(f"Hermite degree must be non-negative, got {n}")
    previous, current = Polynomial(), Polynomial.constant(1)
    for j in range(n):
        previous, current = current, current.times_argument().scale(2) - previous.scale(2 * j)
    return current


def hermite_parity(n: int) -> bool:
    """H_n(−y) = (−1)^n H_n(y) exactly."""
    h = hermite(n)
    return h.reflect() == h.scale((-1) ** n)


def double_factorial(n: int) -> int:
    """n!! with (−1)!! = 0!! = 1."""
    return prod(range(n, 0, -2)) if n > 0 else 1


def binomial_rational(top: Fraction, bottom: int) -> Fraction:
    """C(top, bottom) for rational top via the falling factorial top(top−1)…/bottom!."""
    if bottom < 0:
        return Fraction(0)
    out = Fraction(1)
    for i in range(bottom):
        out *= top - i
    return out / factorial(bottom)


@lru_cache(maxsize=None)
def laguerre_explicit(k: int, alpha: Number) -> Polynomial:
    alpha = Fraction(alpha)
    if k < 0:
        return Polynomial()
    if alpha <= -1:
        raise ValueError(f"Laguerre index α must exceed −1, got {alpha}")
    return Polynomial.from_rationals(
        (-1) ** j * binomial_rational(k + alpha, k - j) / factorial(j) for j in range(k + 1)
    )


def laguerre_recurrences(k: int, alpha: Number) -> Dict[str, bool]:
    """Each of the three recurrences at (k, α), checked exactly."""
    alpha = Fraction(alpha)
    L = laguerre_explicit
    lowering = (L(k, alpha).scale(k)
                == L(k - 1, alpha).scale(k + alpha) - X_POLY * L(k - 1, alpha + 1))
    three_term = (L(k, alpha).scale(k)
                  == (Polynomial.from_rationals([2 * k + alpha - 1, -1]) * L(k - 1, alpha)
                      - L(k - 2, alpha).scale(k + alpha - 1)))
    index_step = L(k, alpha + 1) - L(k - 1, alpha + 1) == L(k, alpha)
    return {"lowering_index": lowering, "three_term": three_term, "index_step": index_step}


def laguerre_recur_check(k: int, alpha: Number) -> bool:
    return all(laguerre_recurrences(k, alpha).values())


def chain_identity_2d(k: int, m: int) -> bool:
    """
    The chained identity behind the planar Coulomb induction, m ≥ 1:

      L_{k+1}^(2m−2) = L_{k+1}^(2m−1) − L_k^(2m−1)
                     = L_{k+1}^(2m) − 2 L_k^(2m) + L_{k−1}^(2m)
                     = ((2m−1−x) L_k^(2m) − (2m−1) L_{k−1}^(2m)) / (k+1)
    """
    if m < 1:
        raise ValueError(f"the chained identity needs m ≥ 1, got {m}")
    L = laguerre_explicit
    target = L(k + 1, 2 * m - 2)
    forms = [
        L(k + 1, 2 * m - 1) - L(k, 2 * m - 1),
        L(k + 1, 2 * m) - L(k, 2 * m).scale(2) + L(k - 1, 2 * m),
        (Polynomial.from_rationals([2 * m - 1, -1]) * L(k, 2 * m)
         - L(k - 1, 2 * m).scale(2 * m - 1)).scale(Fraction(1, k + 1)),
    ]
    return all(form == target for form in forms)


def standard_lead(system_polynomial: str, degree: int) -> Fraction:
    """Leading coefficient: 2^n for H_n, (−1)^k / k! for L_k^(α)."""
    if system_polynomial == "hermite":
        return Fraction(2 ** degree)
    return Fraction((-1) ** degree, factorial(degree))
