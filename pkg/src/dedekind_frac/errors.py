"""Exception hierarchy. Every error raised by the package derives from DedekindError."""


class DedekindError(Exception):
    pass


class NotCoprime(DedekindError, ValueError):
    pass


class NotInvertible(DedekindError, ValueError):
    pass


class Inconsistent(DedekindError, ValueError):
    """Congruence system with no common solution."""


class NoRoot(DedekindError, ValueError):
    pass


class NoSuchClass(DedekindError, ValueError):
    """Residue class a mod M with gcd(a, M) != 1 holds at most one prime."""


class NotPrime(DedekindError, ValueError):
    pass


class InvalidTarget(DedekindError, ValueError):
    pass


class MalformedCertificate(DedekindError, ValueError):
    pass


class TooLarge(DedekindError, ValueError):
    pass


class SearchExhausted(DedekindError, RuntimeError):
    pass
