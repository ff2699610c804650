import random
from fractions import Fraction

import pytest

from plumbcalc import DomainError, bezout, eval_neg_cont_frac, neg_cont_frac


def test_arm_weight_expansions():
    assert neg_cont_frac(Fraction(-5, 2)) == (-3, -2)
    assert neg_cont_frac(Fraction(-13, 2)) == (-7, -2)
    assert neg_cont_frac(Fraction(-9, 4)) == (-3, -2, -2, -2)
    assert neg_cont_frac(Fraction(-2, 1)) == (-2,)


def test_expansion_of_sigma_3_13_23_arms():
    assert neg_cont_frac(Fraction(-3, 1)) == (-3,)
    assert neg_cont_frac(Fraction(-13, 3)) == (-5, -2, -2)
    assert neg_cont_frac(Fraction(-23, 10)) == (-3, -2, -2, -4)


def test_eval_examples():
    assert eval_neg_cont_frac([-3, -2]) == Fraction(-5, 2)
    assert eval_neg_cont_frac([-2]) == Fraction(-2)
    assert eval_neg_cont_frac([-3, -2, -2, -2]) == Fraction(-9, 4)


def test_round_trip_random():
    rng = random.Random(20260809)
    for _ in range(200):
        den = rng.randint(1, 400)
        num = -rng.randint(den + 1, 12 * den)  # x = num/den < -1
        x = Fraction(num, den)
        terms = neg_cont_frac(x)
        assert all(c <= -2 for c in terms)
        # at most |numerator| terms: each step strictly shrinks the denominator
        assert 1 <= len(terms) <= abs(x.numerator)
        assert eval_neg_cont_frac(terms) == x


def test_domain_errors():
    for bad in (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(3, 2), Fraction(-2, 2)):
        with pytest.raises(DomainError):
            neg_cont_frac(bad)


def test_eval_rejects_bad_chains():
    with pytest.raises(DomainError):
        eval_neg_cont_frac([])
    for bad in ([-1], [-3, 0], [-2, 2], [-2, -1]):
        with pytest.raises(DomainError):
            eval_neg_cont_frac(bad)


def test_bezout_examples():
    assert bezout(5, 9) == (1, 2, -1)
    assert bezout(13, 2) == (1, 1, -6)


def test_bezout_random():
    rng = random.Random(42)
    for _ in range(500):
        a = rng.randint(-10**6, 10**6)
        b = rng.randint(-10**6, 10**6)
        if a == 0 and b == 0:
            continue
        g, u, v = bezout(a, b)
        assert g > 0
        assert a % g == 0 and b % g == 0
        assert u * a + v * b == g


def test_bezout_zero_cases():
    assert bezout(0, 7) == (7, 0, 1)
    assert bezout(-4, 0)[0] == 4
    with pytest.raises(DomainError):
        bezout(0, 0)


def test_big_integer_exactness():
    # the scan can reach coefficients past 64 bits at extreme bounds; keep
    # the denominator small (expansion length is governed by the
    # denominator chain, e.g. -n/(n-1) expands to n-1 copies of -2)
    x = Fraction(-(2**80) - 1, 7)
    terms = neg_cont_frac(x)
    assert eval_neg_cont_frac(terms) == x
    g, u, v = bezout(2**75 + 1, 3**50)
    assert u * (2**75 + 1) + v * 3**50 == g
