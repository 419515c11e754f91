"""Dedekind sums ``s(m, n)`` and their scaled form ``S(m, n) = 12 s(m, n)``.

Two evaluators are provided. :func:`s_naive` sums the defining series term by
term and serves as the reference. :func:`s_fast` descends through
``(m, n) -> (n mod m, m)`` using the reciprocity law, so it needs
``O(log n)`` steps and handles arguments of any size.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotCoprime, TooLarge
from .modular import mod_inverse
from .numeric import RationalLike, floor, frac

NAIVE_LIMIT = 10**6
EVALUATORS = ("naive", "fast")

_QUARTER = Fraction(1, 4)


def sawtooth(t: RationalLike) -> Fraction:
    """``((t))``: ``t - floor(t) - 1/2``, or 0 at integers."""
    t = Fraction(t)
    if t.denominator == 1:
        return Fraction(0)
    return t - floor(t) - Fraction(1, 2)


def _check_args(m: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) = {gcd(m, n)}")


def s_naive(m: int, n: int, *, force: bool = False) -> Fraction:
    """Sum ``((k/n)) ((mk/n))`` over ``k = 1..n`` directly.

    Refuses ``n > NAIVE_LIMIT`` unless ``force`` is set.
    """
    _check_args(m, n)
    if n > NAIVE_LIMIT and not force:
        raise TooLarge(f"naive evaluation refused for n = {n} > {NAIVE_LIMIT}")
    # 2n * ((r/n)) = 2r - n for 0 < r < n; the k = n term vanishes.
    total = 0
    for k in range(1, n):
        r = m * k % n
        if r:
            total += (2 * k - n) * (2 * r - n)
    return Fraction(total, 4 * n * n)


def s_fast(m: int, n: int) -> Fraction:
    """Evaluate ``s(m, n)`` via ``s(m,n) = -1/4 + (m^2+n^2+1)/(12mn) - s(n mod m, m)``."""
    _check_args(m, n)
    m %= n
    total = Fraction(0)
    sign = 1
    while n > 1:
        term = Fraction(m * m + n * n + 1, 12 * m * n) - _QUARTER
        total += term if sign > 0 else -term
        sign = -sign
        m, n = n % m, m
    return total


def S(m: int, n: int, evaluator: str = "fast") -> Fraction:
    """``12 s(m, n)`` using the chosen evaluator (``"fast"`` or ``"naive"``)."""
    if evaluator == "fast":
        return 12 * s_fast(m, n)
    if evaluator == "naive":
        return 12 * s_naive(m, n)
    raise ValueError(f"unknown evaluator {evaluator!r}; expected one of {EVALUATORS}")


def frac_S_via_inverse(m: int, n: int) -> Fraction:
    """Fractional part of ``S(m, n)`` read off as ``frac((m + m*)/n)``, ``m m* = 1 (mod n)``."""
    _check_args(m, n)
    return frac(Fraction(m + mod_inverse(m, n), n))
