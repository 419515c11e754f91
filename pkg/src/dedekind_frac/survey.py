"""Brute-force survey of the fractional parts ``frac(S(m, n))`` for a fixed ``n``."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Mapping, Optional, Tuple

from .dedekind import S, frac_S_via_inverse
from .errors import NotPrime, TooLarge
from .modular import DEFAULT_MR_ROUNDS, is_prime
from .numeric import format_rational, frac, parse_rational

ENUMERATION_CAPS = {"eq1": 10**5, "fast": 10**5, "naive": 10**3}


@dataclass(frozen=True)
class FracSurveyReport:
    n: int
    attained: Tuple[Fraction, ...]
    count: int
    bound: Optional[Fraction] = None
    bound_satisfied: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "attained": [format_rational(x) for x in self.attained],
            "count": self.count,
            "bound": None if self.bound is None else format_rational(self.bound),
            "bound_satisfied": self.bound_satisfied,
        }

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FracSurveyReport":
        bound = data.get("bound")
        return cls(
            n=int(data["n"]),
            attained=tuple(parse_rational(x) for x in data["attained"]),
            count=int(data["count"]),
            bound=None if bound is None else parse_rational(bound),
            bound_satisfied=data.get("bound_satisfied"),
        )

    def to_csv(self) -> str:
        """Summary row, then one ``n,frac_num,frac_den`` row per attained value."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "count", "bound", "bound_satisfied"])
        writer.writerow([
            self.n,
            self.count,
            "" if self.bound is None else format_rational(self.bound),
            "" if self.bound_satisfied is None else str(self.bound_satisfied).lower(),
        ])
        writer.writerow(["n", "frac_num", "frac_den"])
        for x in self.attained:
            writer.writerow([self.n, x.numerator, x.denominator])
        return buf.getvalue()


def attained_frac_set(n: int, via: str = "eq1", *, cap: Optional[int] = None) -> FracSurveyReport:
    """All distinct ``frac(S(m, n))`` for ``0 <= m < n`` coprime to ``n``, ascending.

    ``via="eq1"`` uses ``frac((m + m*)/n)``; ``"fast"`` and ``"naive"``
    evaluate the sum itself.
    """
    if via not in ENUMERATION_CAPS:
        raise ValueError(f"unknown method {via!r}; expected one of {tuple(ENUMERATION_CAPS)}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = ENUMERATION_CAPS[via] if cap is None else cap
    if n > limit:
        raise TooLarge(f"n = {n} exceeds the enumeration cap {limit} for via={via!r}")
    if via == "eq1":
        values = {frac_S_via_inverse(m, n) for m in range(n) if gcd(m, n) == 1}
    else:
        values = {frac(S(m, n, via)) for m in range(n) if gcd(m, n) == 1}
    attained = tuple(sorted(values))
    return FracSurveyReport(n=n, attained=attained, count=len(attained))


def prime_bound_report(
    p: int, via: str = "eq1", *, cap: Optional[int] = None, rounds: int = DEFAULT_MR_ROUNDS
) -> FracSurveyReport:
    """Survey a prime modulus and compare the count with ``(p + 1)/2``."""
    if p < 3 or not is_prime(p, rounds):
        raise NotPrime(f"{p} is not a prime >= 3")
    report = attained_frac_set(p, via, cap=cap)
    bound = Fraction(p + 1, 2)
    return FracSurveyReport(
        n=report.n,
        attained=report.attained,
        count=report.count,
        bound=bound,
        bound_satisfied=report.count <= bound,
    )
