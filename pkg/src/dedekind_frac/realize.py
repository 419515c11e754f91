"""Constructive realization of a reduced fraction ``q/n`` as ``frac(S(m, n'))``.

Odd ``n``: pick a prime ``p = 1 (mod 4)`` with ``qp = 2 (mod n)``, a root
``r`` of ``r^2 = -1 (mod p)``, and ``m = 1 (mod n)``, ``m = r (mod p)``.
Then ``(m + m*)/(np)`` lies in ``q/n + Z`` and ``n' = np``.

Even ``n``: pick a prime ``p = 1 (mod 4)`` with ``qp = 1 (mod n)`` and
``m = 1 (mod 2n)``, ``m = r (mod p)``, giving ``n' = 2np``. When
``n = 0 (mod 4)`` this forces ``q = 1 (mod 4)``; otherwise ``n - q`` is
realized instead and the result is mirrored through ``S(-m, n') = -S(m, n')``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Mapping

from .dedekind import S
from .errors import Inconsistent, InvalidTarget, MalformedCertificate
from .modular import (
    DEFAULT_MR_ROUNDS,
    DEFAULT_SEARCH_CAP,
    Congruence,
    crt,
    find_prime_in_ap,
    mod_inverse,
    sqrt_minus_one,
)
from .numeric import format_rational, frac, parse_rational

CASES = ("trivial", "odd", "even")


@dataclass(frozen=True)
class RealizationCertificate:
    q: int
    n: int
    case: str
    sign_flipped: bool
    p: int
    root: int
    m: int
    n_prime: int
    m_star: int
    S_value: Fraction

    @property
    def target(self) -> Fraction:
        return Fraction(self.q, self.n)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for key, value in asdict(self).items():
            if isinstance(value, bool) or key == "case":
                out[key] = value
            elif isinstance(value, Fraction):
                out[key] = format_rational(value)
            else:
                out[key] = str(value)
        return out

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RealizationCertificate":
        if not isinstance(data, Mapping):
            raise MalformedCertificate("certificate must be a JSON object")
        expected = {f.name for f in fields(cls)}
        missing = expected - data.keys()
        extra = data.keys() - expected
        if missing or extra:
            raise MalformedCertificate(
                f"bad fields: missing {sorted(missing)}, unexpected {sorted(extra)}"
            )
        values: Dict[str, Any] = {}
        for key in expected:
            raw = data[key]
            if key == "case":
                if raw not in CASES:
                    raise MalformedCertificate(f"case must be one of {CASES}, got {raw!r}")
                values[key] = raw
            elif key == "sign_flipped":
                if not isinstance(raw, bool):
                    raise MalformedCertificate("sign_flipped must be a boolean")
                values[key] = raw
            elif key == "S_value":
                try:
                    values[key] = parse_rational(raw)
                except (TypeError, ValueError, ZeroDivisionError) as exc:
                    raise MalformedCertificate(f"S_value: {exc}") from None
            else:
                values[key] = _parse_int(key, raw)
        return cls(**values)

    @classmethod
    def from_json(cls, text: str) -> "RealizationCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


def _parse_int(key: str, raw: Any) -> int:
    if isinstance(raw, bool):
        raise MalformedCertificate(f"{key} must be an integer")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw.strip(), 10)
        except ValueError:
            pass
    raise MalformedCertificate(f"{key} must be a decimal integer, got {raw!r}")


def _check_target(q: int, n: int) -> None:
    if n < 1 or not 0 <= q < n:
        raise InvalidTarget(f"need n >= 1 and 0 <= q < n, got q={q}, n={n}")
    if gcd(q, n) != 1:
        raise InvalidTarget(f"{q}/{n} is not reduced (gcd {gcd(q, n)})")


def _certificate(q: int, n: int, case: str, p: int, root: int, m_cls: Congruence) -> RealizationCertificate:
    m, n_prime = m_cls.residue, m_cls.modulus
    return RealizationCertificate(
        q=q,
        n=n,
        case=case,
        sign_flipped=False,
        p=p,
        root=root,
        m=m,
        n_prime=n_prime,
        m_star=mod_inverse(m, n_prime),
        S_value=S(m, n_prime),
    )


def _trivial() -> RealizationCertificate:
    return RealizationCertificate(
        q=0, n=1, case="trivial", sign_flipped=False, p=1, root=0,
        m=0, n_prime=1, m_star=0, S_value=Fraction(0),
    )


def realize_case1_odd(
    q: int,
    n: int,
    *,
    start: int = 2,
    cap: int = DEFAULT_SEARCH_CAP,
    rounds: int = DEFAULT_MR_ROUNDS,
) -> RealizationCertificate:
    _check_target(q, n)
    if n % 2 == 0 or n < 3:
        raise InvalidTarget(f"odd case needs odd n >= 3, got {n}")
    prime_cls = crt([Congruence(2 * mod_inverse(q, n), n), Congruence(1, 4)])
    p = find_prime_in_ap(prime_cls.residue, prime_cls.modulus, start, cap=cap, rounds=rounds)
    root = sqrt_minus_one(p, rounds)
    return _certificate(q, n, "odd", p, root, crt([Congruence(1, n), Congruence(root, p)]))


def realize_case2_even(
    q: int,
    n: int,
    *,
    start: int = 2,
    cap: int = DEFAULT_SEARCH_CAP,
    rounds: int = DEFAULT_MR_ROUNDS,
) -> RealizationCertificate:
    _check_target(q, n)
    if n % 2:
        raise InvalidTarget(f"even case needs even n, got {n}")
    try:
        prime_cls = crt([Congruence(mod_inverse(q, n), n), Congruence(1, 4)])
    except Inconsistent:
        raise InvalidTarget(
            f"even case with n = 0 (mod 4) needs q = 1 (mod 4), got q={q}"
        ) from None
    p = find_prime_in_ap(prime_cls.residue, prime_cls.modulus, start, cap=cap, rounds=rounds)
    root = sqrt_minus_one(p, rounds)
    return _certificate(q, n, "even", p, root, crt([Congruence(1, 2 * n), Congruence(root, p)]))


def realize(
    q: int,
    n: int,
    *,
    start: int = 2,
    cap: int = DEFAULT_SEARCH_CAP,
    rounds: int = DEFAULT_MR_ROUNDS,
) -> RealizationCertificate:
    """Find ``m, n'`` with ``frac(S(m, n')) == q/n``.

    ``start`` is where the prime search begins; the result is the certificate
    built from the least suitable prime ``>= start``.
    """
    _check_target(q, n)
    if q == 0:
        return _trivial()
    opts = dict(start=start, cap=cap, rounds=rounds)
    if n % 2:
        return realize_case1_odd(q, n, **opts)
    if n % 4 == 0 and q % 4 == 3:
        base = realize_case2_even(n - q, n, **opts)
        m = base.n_prime - base.m
        return replace(
            base,
            q=q,
            sign_flipped=True,
            m=m,
            m_star=base.n_prime - base.m_star,
            S_value=S(m, base.n_prime),
        )
    return realize_case2_even(q, n, **opts)


def verify_certificate(cert: RealizationCertificate | Mapping[str, Any]) -> bool:
    """Check a certificate from its stored fields alone.

    ``S(m, n')`` is recomputed with the reciprocity evaluator, independently
    of the ``(m + m*)/n'`` shortcut. Structural problems raise
    :class:`MalformedCertificate`; a well-formed but wrong certificate gives False.
    """
    if not isinstance(cert, RealizationCertificate):
        cert = RealizationCertificate.from_dict(cert)
    _check_types(cert)
    q, n, m, n_prime = cert.q, cert.n, cert.m, cert.n_prime
    if n < 1 or not 0 <= q < n or gcd(q, n) != 1:
        return False
    if n_prime < 1 or not 0 <= m < n_prime or gcd(m, n_prime) != 1:
        return False
    if (m * cert.m_star - 1) % n_prime:
        return False
    target = Fraction(q, n)
    if frac(Fraction(m + cert.m_star, n_prime)) != target:
        return False
    return S(m, n_prime, "fast") == cert.S_value and frac(cert.S_value) == target


def _check_types(cert: RealizationCertificate) -> None:
    for f in fields(cert):
        value = getattr(cert, f.name)
        if f.name == "case":
            ok = value in CASES
        elif f.name == "sign_flipped":
            ok = isinstance(value, bool)
        elif f.name == "S_value":
            ok = isinstance(value, (int, Fraction)) and not isinstance(value, bool)
        else:
            ok = isinstance(value, int) and not isinstance(value, bool)
        if not ok:
            raise MalformedCertificate(f"field {f.name} has invalid value {value!r}")
