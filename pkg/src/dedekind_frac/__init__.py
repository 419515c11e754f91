"""Exact Dedekind sums and constructive realization of their fractional parts."""

from .dedekind import S, frac_S_via_inverse, s_fast, s_naive, sawtooth
from .errors import (
    DedekindError,
    Inconsistent,
    InvalidTarget,
    MalformedCertificate,
    NoRoot,
    NoSuchClass,
    NotCoprime,
    NotInvertible,
    NotPrime,
    SearchExhausted,
    TooLarge,
)
from .modular import (
    Congruence,
    crt,
    egcd,
    find_prime_in_ap,
    is_prime,
    mod_inverse,
    sqrt_minus_one,
)
from .numeric import floor, format_rational, frac, normalize, parse_rational
from .realize import RealizationCertificate, realize, verify_certificate
from .survey import FracSurveyReport, attained_frac_set, prime_bound_report

__version__ = "0.1.0"

__all__ = [
    "Congruence",
    "DedekindError",
    "FracSurveyReport",
    "Inconsistent",
    "InvalidTarget",
    "MalformedCertificate",
    "NoRoot",
    "NoSuchClass",
    "NotCoprime",
    "NotInvertible",
    "NotPrime",
    "RealizationCertificate",
    "S",
    "SearchExhausted",
    "TooLarge",
    "attained_frac_set",
    "crt",
    "egcd",
    "find_prime_in_ap",
    "floor",
    "format_rational",
    "frac",
    "frac_S_via_inverse",
    "is_prime",
    "mod_inverse",
    "normalize",
    "parse_rational",
    "prime_bound_report",
    "realize",
    "s_fast",
    "s_naive",
    "sawtooth",
    "sqrt_minus_one",
    "verify_certificate",
]
