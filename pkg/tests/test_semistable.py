import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from isogeny_atlas.arith import MultiPoly
from isogeny_atlas.curves import WeierstrassModel, is_semistable_outside
from isogeny_atlas.fricke import CuspParameter, fricke_eval
from isogeny_atlas.semistable import (
    BEZOUT_CONSTANTS, LEVELS, BezoutIdentity, SemistableError, alpha_gamma, alpha_gamma_polys,
    check_identity, derive_bezout, f_model, gcd_bound_check, verify_lemma41, witness_json,
)

coprime = st.tuples(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6)).filter(
    lambda ab: gcd(*ab) == 1)


def test_f_model_examples():
    assert f_model(4, 1, 1) == WeierstrassModel(0, -15, 0, -16, 0)
    assert f_model(9, 1, 1) == WeierstrassModel(21, 0, -8, 0, 0)
    with pytest.raises(SemistableError, match="degenerate parameters"):
        f_model(6, 0, 1)
    with pytest.raises(SemistableError):
        f_model(5, 1, 1)


def test_alpha_gamma_examples():
    assert alpha_gamma(4, 1, 1) == (4368, 1183744)
    assert alpha_gamma(6, 1, 1) == (9 * 13 * 19693, 729 * 81 * 1000)
    assert alpha_gamma(9, 0, 1) == (9, 0)


@pytest.mark.parametrize("n, a, b", [(4, 1, 1), (6, 2, 3), (9, 1, 2)])
def test_lemma41_examples(n, a, b):
    assert verify_lemma41(n, a, b)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(LEVELS), st.integers(-10 ** 5, 10 ** 5), st.integers(-10 ** 5, 10 ** 5))
def test_lemma41_identity(n, a, b):
    assume(alpha_gamma(n, a, b)[1] != 0)
    assert verify_lemma41(n, a, b)


def test_gcd_bound_examples():
    assert gcd_bound_check(4, 1, 1)
    assert gcd_bound_check(6, 1, 2)
    with pytest.raises(SemistableError, match="coprime"):
        gcd_bound_check(4, 2, 4)


@pytest.mark.parametrize("n", LEVELS)
def test_gcd_bound_many_pairs(n):
    rng = random.Random(n)
    done = 0
    while done < 1000:
        a, b = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
        if gcd(a, b) != 1:
            continue
        assert gcd_bound_check(n, a, b), (a, b)
        done += 1


@pytest.mark.parametrize("n", LEVELS)
def test_bezout_witnesses(n):
    W = derive_bezout(n)
    c_n, e_n = BEZOUT_CONSTANTS[n]
    assert {w.target for w in W.identities} == {"a", "b"}
    al, ga = alpha_gamma_polys(n)
    a = MultiPoly.var(("a", "b"), "a")
    b = MultiPoly.var(("a", "b"), "b")
    for w in W.identities:
        assert w.exponent == e_n
        assert c_n % w.constant == 0
        target = (a if w.target == "a" else b) ** e_n
        assert w.mu * al + w.nu * ga == w.constant * target


@pytest.mark.parametrize("n", LEVELS)
def test_bezout_recompute_matches_fixture(n):
    assert derive_bezout(n, recompute=True) == derive_bezout(n)
    assert witness_json(derive_bezout(n))[0]["target"] in ("a", "b")


def test_bezout_tampered_identity_rejected():
    w = derive_bezout(4).identities[0]
    bad = BezoutIdentity(w.target, w.exponent, w.mu + 1, w.nu, w.constant)
    assert not check_identity(4, bad)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(LEVELS), coprime)
def test_bezout_specializes(n, ab):
    a, b = ab
    al, ga = alpha_gamma(n, a, b)
    for w in derive_bezout(n).identities:
        lhs = w.mu.evaluate([a, b]) * al + w.nu.evaluate([a, b]) * ga
        assert lhs == w.constant * (a if w.target == "a" else b) ** w.exponent


@pytest.mark.parametrize("n", LEVELS)
def test_semistable_outside_n(n):
    rng = random.Random(100 + n)
    done = 0
    while done < 100:
        a, b = rng.randint(-20, 20), rng.randint(-20, 20)
        if gcd(a, b) != 1 or alpha_gamma(n, a, b)[1] == 0:
            continue
        assert is_semistable_outside(f_model(n, a, b), n), (a, b)
        done += 1


@pytest.mark.parametrize("n", LEVELS)
def test_lemma44_instances(n):
    rng = random.Random(200 + n)
    done = 0
    while done < 50:
        t = Fraction(rng.randint(-10 ** 3, 10 ** 3), rng.randint(1, 30))
        try:
            j1, j2 = fricke_eval(n, 1, t), fricke_eval(n, 2, t)
        except CuspParameter:
            continue
        assert not (j1 in (0, 1728) and j2 in (0, 1728))
        done += 1
