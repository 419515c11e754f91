"""Exact rationals.

Python ints are already unbounded, and :class:`fractions.Fraction` keeps
values reduced with a positive denominator, so this module is a thin layer
adding the floor / fractional-part helpers and the canonical ``a/b`` text form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def floor(x: RationalLike) -> int:
    x = Fraction(x)
    return x.numerator // x.denominator


def frac(x: RationalLike) -> Fraction:
    """Representative of ``x + Z`` in ``[0, 1)``."""
    x = Fraction(x)
    return Fraction(x.numerator % x.denominator, x.denominator)


def format_rational(x: RationalLike) -> str:
    """Canonical ``num/den`` form; the denominator is printed even when it is 1."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`. Also accepts a bare integer."""
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.group(1), match.group(2)
    return normalize(int(num), int(den) if den is not None else 1)
