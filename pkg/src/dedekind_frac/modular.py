"""Modular arithmetic kernel: gcd, inverses, CRT, primality, sqrt(-1) mod p, prime search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple

from .errors import (
    Inconsistent,
    NoRoot,
    NoSuchClass,
    NotInvertible,
    SearchExhausted,
)

DEFAULT_MR_ROUNDS = 40
DEFAULT_SEARCH_CAP = 10**6

# First twelve primes: a deterministic Miller-Rabin witness set for n < 2**64.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _DETERMINISTIC_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class Congruence:
    """``x = residue (mod modulus)``; the residue is stored reduced."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __contains__(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m} (gcd {g})")
    return x % m


def _merge(c1: Congruence, c2: Congruence) -> Congruence:
    g, u, _ = egcd(c1.modulus, c2.modulus)
    diff = c2.residue - c1.residue
    if diff % g:
        raise Inconsistent(
            f"x = {c1.residue} (mod {c1.modulus}) and x = {c2.residue} (mod {c2.modulus}) "
            f"disagree modulo {g}"
        )
    # u * m1 = g (mod m2), so u is the inverse of m1/g modulo m2/g.
    m2g = c2.modulus // g
    t = (diff // g) * u % m2g
    lcm = c1.modulus * m2g
    return Congruence(c1.residue + c1.modulus * t, lcm)


def crt(congruences: Iterable[Congruence]) -> Congruence:
    """Combine congruences with arbitrary (not necessarily coprime) moduli.

    Returns the solution modulo the lcm of the moduli. Raises
    :class:`Inconsistent` when the system has no solution.
    """
    cs = list(congruences)
    if not cs:
        raise ValueError("crt() needs at least one congruence")
    return reduce(_merge, cs)


def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin primality test.

    Exact for ``n < 2**64``. Above that, ``rounds`` random bases are drawn
    from a generator seeded with ``n``, so repeated calls agree.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases: Iterable[int] = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = (rng.randrange(2, n - 1) for _ in range(rounds))
    return all(_miller_rabin_round(n, d, s, a) for a in bases)


def sqrt_minus_one(p: int, rounds: int = DEFAULT_MR_ROUNDS) -> int:
    """Least ``r`` in ``(0, p/2)`` with ``r*r = -1 (mod p)`` for a prime ``p = 1 (mod 4)``.

    For a non-residue ``a``, ``a**((p-1)/4)`` squares to ``a**((p-1)/2) = -1``.
    """
    if p % 4 != 1 or not is_prime(p, rounds):
        raise NoRoot(f"-1 has no square root modulo {p} (need a prime = 1 mod 4)")
    e = (p - 1) // 4
    a = 2
    while True:
        b = pow(a, e, p)
        if b * b % p == p - 1:
            return min(b, p - b)
        a += 1


def find_prime_in_ap(
    a: int,
    modulus: int,
    start: int = 2,
    *,
    cap: int = DEFAULT_SEARCH_CAP,
    rounds: int = DEFAULT_MR_ROUNDS,
) -> int:
    """Least prime ``p >= start`` with ``p = a (mod modulus)``.

    At most ``cap`` members of the class are tested before giving up with
    :class:`SearchExhausted`.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    g, _, _ = egcd(a, modulus)
    if g != 1:
        raise NoSuchClass(f"gcd({a}, {modulus}) = {g}")
    candidate = start + (a - start) % modulus
    for _ in range(cap):
        if is_prime(candidate, rounds):
            return candidate
        candidate += modulus
    raise SearchExhausted(
        f"no prime = {a % modulus} (mod {modulus}) among {cap} candidates from {start}"
    )
