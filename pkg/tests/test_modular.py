from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dedekind_frac import (
    Congruence,
    Inconsistent,
    NoRoot,
    NoSuchClass,
    NotInvertible,
    SearchExhausted,
    crt,
    egcd,
    find_prime_in_ap,
    is_prime,
    mod_inverse,
    sqrt_minus_one,
)

from oracles import crt_by_scan, inverse_by_scan, trial_division_is_prime


def test_egcd_examples():
    assert egcd(12, 18)[0] == 6
    assert egcd(0, 5) == (5, 0, 1)
    g, x, y = egcd(264, 509)
    assert g == 1 and 264 * x + 509 * y == 1


@given(st.integers(), st.integers())
def test_egcd_bezout(a, b):
    g, x, y = egcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


def test_mod_inverse_examples():
    assert mod_inverse(7, 132) == 19
    assert mod_inverse(-7, 132) == 113
    assert 7 * 113 == 6 * 132 - 1
    for n in range(2, 30):
        assert mod_inverse(1, n) == 1


def test_mod_inverse_matches_scan():
    for m in range(1, 60):
        for a in range(-m, 2 * m):
            expected = inverse_by_scan(a, m)
            if expected is None:
                with pytest.raises(NotInvertible):
                    mod_inverse(a, m)
            else:
                assert mod_inverse(a, m) == expected


def test_crt_examples():
    assert crt([Congruence(1, 264), Congruence(208, 509)]) == Congruence(133057, 134376)
    assert crt([Congruence(1, 2), Congruence(1, 4)]) == Congruence(1, 4)
    with pytest.raises(Inconsistent):
        crt([Congruence(0, 2), Congruence(1, 4)])
    with pytest.raises(ValueError):
        crt([])


def test_congruence_is_reduced():
    c = Congruence(-7, 132)
    assert c.residue == 125
    assert 125 + 132 in c
    with pytest.raises(ValueError):
        Congruence(0, 0)


def test_crt_matches_scan_on_small_systems():
    for m1 in range(1, 13):
        for m2 in range(1, 13):
            for r1 in range(m1):
                for r2 in range(m2):
                    expected = crt_by_scan([(r1, m1), (r2, m2)])
                    if expected is None:
                        with pytest.raises(Inconsistent):
                            crt([Congruence(r1, m1), Congruence(r2, m2)])
                    else:
                        got = crt([Congruence(r1, m1), Congruence(r2, m2)])
                        assert (got.residue, got.modulus) == expected


@given(st.lists(st.tuples(st.integers(), st.integers(1, 10**6)), min_size=1, max_size=5))
def test_crt_solution_satisfies_inputs(pairs):
    cs = [Congruence(r, m) for r, m in pairs]
    try:
        sol = crt(cs)
    except Inconsistent:
        return
    assert all(sol.residue in c for c in cs)
    assert crt([sol, cs[0]]) == sol


def test_is_prime_matches_trial_division():
    for n in range(0, 20000):
        assert is_prime(n) == trial_division_is_prime(n), n


@pytest.mark.parametrize(
    "n, expected",
    [
        (509, True),
        (377, False),
        (2, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (2**61 - 1, True),
        (2**64 - 59, True),
        (2**89 - 1, True),
        (2**127 - 1, True),
        ((2**61 - 1) * (2**89 - 1), False),
        (2**128 + 1, False),
    ],
)
def test_is_prime_known_values(n, expected):
    assert is_prime(n) is expected


def test_sqrt_minus_one_examples():
    assert sqrt_minus_one(5) == 2
    assert sqrt_minus_one(13) == 5
    assert sqrt_minus_one(509) == 208
    assert 208**2 == 85 * 509 - 1


def test_sqrt_minus_one_is_least_root():
    for p in range(5, 3000, 4):
        if not trial_division_is_prime(p):
            continue
        roots = [r for r in range(1, p) if (r * r + 1) % p == 0]
        assert sqrt_minus_one(p) == roots[0] < p / 2


@pytest.mark.parametrize("p", [3, 7, 9, 21, 1])
def test_sqrt_minus_one_rejects(p):
    with pytest.raises(NoRoot):
        sqrt_minus_one(p)


def test_find_prime_examples():
    assert find_prime_in_ap(5, 12, 2) == 5
    assert find_prime_in_ap(113, 132, 2) == 113
    assert find_prime_in_ap(113, 132, 114) == 509
    assert not is_prime(245) and not is_prime(377)


def test_find_prime_is_least_in_class():
    for modulus in range(1, 40):
        for a in range(modulus):
            if gcd(a, modulus) != 1:
                continue
            for start in (2, 50, 97):
                p = find_prime_in_ap(a, modulus, start)
                assert trial_division_is_prime(p) and (p - a) % modulus == 0 and p >= start
                assert not any(
                    trial_division_is_prime(x) for x in range(start, p) if (x - a) % modulus == 0
                )


def test_find_prime_errors():
    with pytest.raises(NoSuchClass):
        find_prime_in_ap(4, 12, 2)
    with pytest.raises(SearchExhausted):
        find_prime_in_ap(1, 4, 18, cap=2)  # 21, 25 composite
    assert find_prime_in_ap(1, 4, 18, cap=3) == 29
