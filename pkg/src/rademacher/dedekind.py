"""Dedekind sums and the Rademacher symbol on SL2(Z).

The sawtooth is ((x)) = x - floor(x) - 1/2 for x not an integer and 0
otherwise.  The Dedekind sum is

    s(h, k) = sum_{mu=1}^{k} ((h mu / k)) ((mu / k)),   k >= 1, gcd(h, k) = 1,

and the Rademacher symbol of (a, b; c, d) in SL2(Z) is

    Phi = b/d                                   if c = 0,
    Phi = (a + d)/c - 12 sgn(c) s(d, |c|)       otherwise,

which is always an integer (asserted, never rounded).
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from .errors import NotCoprimeError
from .matrices import UnimodularMatrix, sgn

LITERAL_THRESHOLD = 64


def sawtooth(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def _check_pair(h: int, k: int) -> None:
    if k <= 0:
        raise NotCoprimeError(f"k must be positive, got {k}")
    if gcd(h, k) != 1:
        raise NotCoprimeError(f"gcd({h}, {k}) != 1")


def dedekind_sum_literal(h: int, k: int) -> Fraction:
    """The defining sum, evaluated term by term.

    Each nonzero term is (2(h mu mod k) - k)(2 mu - k)/(4 k^2); the mu = k
    term vanishes, and h mu mod k = 0 only at mu = k since gcd(h, k) = 1.
    """
    _check_pair(h, k)
    total = 0
    for mu in range(1, k):
        r = (h * mu) % k
        if r:
            total += (2 * r - k) * (2 * mu - k)
    return Fraction(total, 4 * k * k)


def _descent(h: int, k: int) -> tuple[int, int]:
    """s(h, k) as an unreduced integer pair (num, den).

    Reciprocity s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk) plus
    periodicity s(k, h) = s(k mod h, h) walk the pair down the Euclidean
    algorithm; the base case s(0, 1) = 0 is forced by coprimality.
    """
    h %= k
    num, den, sign = 0, 1, 1
    while h:
        step = 12 * h * k
        num = num * step + sign * (h * h + k * k + 1 - 3 * h * k) * den
        den *= step
        sign = -sign
        h, k = k % h, h
    return num, den


def dedekind_sum_fast(h: int, k: int) -> Fraction:
    """Euclidean-descent evaluator, O(log k) rational steps."""
    _check_pair(h, k)
    return Fraction(*_descent(h, k))


def dedekind_sum(h: int, k: int, literal_threshold: int = LITERAL_THRESHOLD) -> Fraction:
    """s(h, k).  Small k goes through the literal sum, large k through the
    descent; the two agree everywhere (tested), the split is only speed."""
    if k < literal_threshold:
        return dedekind_sum_literal(h, k)
    return dedekind_sum_fast(h, k)


def rademacher_phi(g: UnimodularMatrix) -> int:
    """Rademacher symbol Phi(g), an exact integer.

    The rational expression is evaluated exactly and its denominator is
    asserted to be 1; a failure here would be an arithmetic bug, not an
    input error.
    """
    a, b, c, d = g.entries()
    if c == 0:
        # ad = 1 forces a = d = +-1, so b/d is the integer b*d
        return b * d
    k = abs(c)
    num, den = _descent(d % k, k)
    sc = sgn(c)
    t = (a + d) * den - 12 * sc * num * c
    q, r = divmod(t, c * den)
    if r:
        raise ArithmeticError(f"Phi of {g} produced a non-integer; this is a bug")
    return q
