from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from isogeny_atlas.arith import (
    FactorBudgetExceeded, MultiPoly, UniPoly, factor_integer, format_rational, is_prime,
    parse_rational, poly_gcd, power_free_part, rational_roots, squarefree_part,
)
from isogeny_atlas.fricke import fricke_param

X = UniPoly.x()

nonzero_int = st.integers(-10 ** 6, 10 ** 6).filter(bool)
nonzero_q = st.builds(Fraction, nonzero_int, st.integers(1, 10 ** 4))


def brute_roots(p: UniPoly):
    """Exhaustive rational-root-theorem candidates; only for small coefficients."""
    c = p.integer_coeffs()
    while c and c[0] == 0:
        c = c[1:]
    if not c:
        return set()
    lead, const = abs(c[-1]), abs(c[0])
    divs = lambda m: [k for k in range(1, m + 1) if m % k == 0]
    found = {Fraction(0)} if p(0) == 0 else set()
    if const == 0:
        q = UniPoly(c)
        while q.coeff(0) == 0:
            q = q.exact_div(X)
        return found | brute_roots(q)
    for u in divs(const):
        for v in divs(lead):
            for s in (1, -1):
                r = Fraction(s * u, v)
                if p(r) == 0:
                    found.add(r)
    return found


# ---------------------------------------------------------------- roots

def test_roots_trivial():
    assert rational_roots(X * X - 1) == [-1, 1]


def test_roots_fricke_numerator_contains_minus_six():
    F = fricke_param(6, 1)
    p = F.num_poly - 54000 * F.den_poly
    assert Fraction(-6) in rational_roots(p)


def test_roots_negative_discriminant_empty():
    p = X * X + 22 * X + 125
    assert rational_roots(p) == []
    assert brute_roots(p) == set()


def test_roots_zero_poly_rejected():
    with pytest.raises(ValueError, match="infinite root set"):
        rational_roots(UniPoly([]))


def test_roots_with_zero_root_and_multiplicity():
    p = X ** 3 * (2 * X - 3) ** 2 * (X + 5)
    assert rational_roots(p) == [-5, 0, Fraction(3, 2)]


@pytest.mark.parametrize("method", ["padic", "real"])
def test_roots_large_coefficients(method):
    roots = [Fraction(123456789, 1000003), Fraction(-987654321, 77), Fraction(5)]
    p = UniPoly.from_roots(roots) * (X * X + 1)
    assert rational_roots(p, method=method) == sorted(roots)


small_roots = st.lists(st.builds(Fraction, st.integers(-30, 30), st.integers(1, 6)), max_size=4)
extra = st.lists(st.integers(-9, 9), min_size=0, max_size=4)


@settings(max_examples=150, deadline=None)
@given(small_roots, extra)
def test_roots_match_exhaustive_candidates(roots, junk):
    p = UniPoly.from_roots(roots) * UniPoly(junk + [1])
    p = UniPoly(p.integer_coeffs())
    got = rational_roots(p)
    for r in got:
        assert p(r) == 0
    assert set(got) == brute_roots(p)
    assert set(roots) <= set(got)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.builds(Fraction, st.integers(-10 ** 9, 10 ** 9), st.integers(1, 10 ** 5)), max_size=5),
       st.lists(st.integers(-10 ** 6, 10 ** 6), max_size=5))
def test_roots_two_routes_agree(roots, junk):
    p = UniPoly.from_roots(roots) * UniPoly(junk + [1])
    padic = rational_roots(p, method="padic")
    real = rational_roots(p, method="real")
    assert padic == real
    assert set(roots) <= set(padic)


# ---------------------------------------------------------------- squarefree

@pytest.mark.parametrize("q, want", [(1, 1), (Fraction(-1, 4), -1), (18, 2), (Fraction(3, 8), 6), (-12, -3)])
def test_squarefree_examples(q, want):
    assert squarefree_part(q) == want


def test_squarefree_zero_rejected():
    with pytest.raises(ValueError):
        squarefree_part(0)


@settings(max_examples=100, deadline=None)
@given(nonzero_q, st.integers(1, 10 ** 4))
def test_squarefree_square_invariant(q, m):
    assert squarefree_part(q * m * m) == squarefree_part(q)
    assert squarefree_part(q / (m * m)) == squarefree_part(q)


@settings(max_examples=100, deadline=None)
@given(nonzero_q)
def test_squarefree_is_squarefree(q):
    s = squarefree_part(q)
    assert all(e == 1 for _, e in factor_integer(abs(s)))
    ratio = Fraction(q) / s
    assert ratio > 0
    assert power_free_part(ratio, 2) == 1


def test_power_free_part_sixth():
    assert power_free_part(Fraction(2 ** 13 * 3 ** 6, 5 ** 6), 6) == 2


# ---------------------------------------------------------------- gcd

def test_gcd_examples():
    assert poly_gcd(X * X - 1, X - 1) == X - 1
    assert poly_gcd(3 * X ** 4 + 192 * X, X) == X
    p = 4 * X ** 3 - 2 * X + 6
    assert poly_gcd(p, p) == p.monic()


def test_gcd_both_zero_rejected():
    with pytest.raises(ValueError):
        poly_gcd(UniPoly([]), UniPoly([]))


poly_st = st.lists(st.integers(-20, 20), min_size=1, max_size=5).map(UniPoly)


@settings(max_examples=150, deadline=None)
@given(poly_st, poly_st, poly_st)
def test_gcd_divides_and_cofactors_coprime(a, b, c):
    p, q = a * c, b * c
    if p.is_zero() and q.is_zero():
        return
    g = poly_gcd(p, q)
    assert g.lc == 1
    assert (p % g).is_zero() and (q % g).is_zero()
    if not p.is_zero() and not q.is_zero():
        assert poly_gcd(p.exact_div(g), q.exact_div(g)).degree == 0
    if not c.is_zero():
        assert (g % c.monic()).is_zero()


# ---------------------------------------------------------------- factoring

def test_factor_examples():
    assert factor_integer(6912) == [(2, 8), (3, 3)]
    assert factor_integer(1) == []
    assert factor_integer(2985984) == [(2, 12), (3, 6)]
    assert factor_integer(-12) == [(2, 2), (3, 1)]


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor_integer(0)


def test_factor_large_semiprime():
    p, q = 1000003, 998244353
    assert factor_integer(p * q * 4) == [(2, 2), (p, 1), (q, 1)]


def test_factor_budget_exceeded():
    p, q = 2 ** 61 - 1, 2 ** 89 - 1
    with pytest.raises(FactorBudgetExceeded, match="factor budget exceeded"):
        factor_integer(p * q, budget=10)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10 ** 12))
def test_factor_roundtrip(n):
    prod = 1
    for p, e in factor_integer(n):
        assert is_prime(p)
        prod *= p ** e
    assert prod == n


# ---------------------------------------------------------------- text

@pytest.mark.parametrize("text, q", [("3", 3), ("-27/4", Fraction(-27, 4)), (" 6/4 ", Fraction(3, 2))])
def test_parse_rational(text, q):
    assert parse_rational(text) == q


@pytest.mark.parametrize("text", ["", "1/0", "x", "1.5", "--2"])
def test_parse_rational_errors(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(nonzero_q)
def test_rational_text_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_multipoly_canonical_order():
    a = MultiPoly.var(("a", "b"), "a")
    b = MultiPoly.var(("a", "b"), "b")
    p = b ** 2 + 3 * a * b - a ** 2 + 5
    assert str(p) == "-a^2 + 3*a*b + b^2 + 5"
    assert p == (a - b) * (a - b) * 0 + p
    assert p.evaluate([2, 3]) == 9 + 18 - 4 + 5
    assert p.swap().evaluate([3, 2]) == p.evaluate([2, 3])


@settings(max_examples=50, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_multipoly_ring_identity(x, y):
    a = MultiPoly.var(("a", "b"), "a")
    b = MultiPoly.var(("a", "b"), "b")
    lhs = (a + b) ** 3
    rhs = a ** 3 + 3 * a ** 2 * b + 3 * a * b ** 2 + b ** 3
    assert lhs == rhs
    assert lhs.evaluate([x, y]) == (x + y) ** 3
