import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from isogeny_atlas.arith import UniPoly, squarefree_part
from isogeny_atlas.curves import WeierstrassModel, is_isomorphic, short
from isogeny_atlas.families import FamilyError, family_curve, special_curve
from isogeny_atlas.fricke import CuspParameter, fricke_eval
from isogeny_atlas.oracle import (
    OracleError, PhiParseError, PhiUnavailable, RationalIsogenyMap, division_polynomial,
    isogeny_from_kernel, kernel_polynomial, load_modular_polynomial, parse_modular_polynomial,
    phi_available, phi_vanishes, prime_isogenies, rational_kernels,
)

X = UniPoly.x()
E144 = short(-15, -22)
REQUIRED = (2, 3, 5, 7, 13)


# ---------------------------------------------------------------- division polynomials

def test_division_polynomial_examples():
    assert division_polynomial(E144, 1) == UniPoly([1])
    assert division_polynomial(short(0, 16), 3) == 3 * X ** 4 + 192 * X
    assert division_polynomial(E144, 2) == X ** 3 - 15 * X - 22


def test_division_polynomial_five_torsion():
    # y^2 + y = x^3 - x^2 has the rational 5-torsion point (0, 0); in short
    # coordinates its abscissa moves by b2/12 = -1/3
    W = WeierstrassModel(0, -1, 1, 0, 0)
    S = W.to_short()
    x_short = Fraction(0) + W.b2 / 12
    assert x_short == Fraction(-1, 3)
    assert division_polynomial(S, 5)(x_short) == 0
    assert division_polynomial(S, 3)(x_short) != 0


@settings(max_examples=20, deadline=None)
@given(st.integers(-300, 300).filter(bool))
def test_three_torsion_abscissa(d):
    # x = 0 on y^2 = x^3 + 16 d is a 3-torsion abscissa
    E = special_curve("j0_n3", 1, d, normalize=False)
    assert division_polynomial(E, 3)(0) == 0
    assert division_polynomial(E, 2)(0) != 0


@settings(max_examples=30, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_division_polynomial_degrees(A, B):
    E = short(A, B)
    if E.disc == 0:
        return
    for m in range(1, 8):
        psi = division_polynomial(E, m)
        # odd m: psi_m itself; even m: psi_m^2 / 4
        if m % 2:
            assert psi.degree == (m * m - 1) // 2 and psi.lc == m
        else:
            assert psi.degree == m * m - 1 and psi.lc == Fraction(m * m, 4)


# ---------------------------------------------------------------- kernel isogenies

def test_kernel_two_isogeny_example():
    phi = isogeny_from_kernel(short(-1, 0), kernel_polynomial(short(-1, 0), 0, 2))
    assert phi.codomain == short(4, 0)
    assert phi.N.degree == 2 and phi.D.degree == 1


def test_kernel_three_isogeny_example():
    phi = isogeny_from_kernel(short(0, 16), kernel_polynomial(short(0, 16), 0, 3))
    assert phi.codomain.j == 0
    assert is_isomorphic(phi.codomain, short(0, -432)) is not None


def test_kernel_on_family_example():
    phi = isogeny_from_kernel(E144, kernel_polynomial(E144, -2, 2))
    members = [family_curve(6, i, -6, -1) for i in range(1, 5)]
    assert phi.codomain.j in {M.j for M in members}


def test_kernel_bad_abscissa():
    with pytest.raises(OracleError):
        kernel_polynomial(E144, 1, 2)
    with pytest.raises(OracleError):
        kernel_polynomial(short(0, 16), 1, 3)
    with pytest.raises(OracleError):
        kernel_polynomial(E144, -2, 5)


def test_verify_normalized_examples():
    from isogeny_atlas.oracle import verify_normalized
    phi = isogeny_from_kernel(short(-1, 0), kernel_polynomial(short(-1, 0), 0, 2))
    assert verify_normalized(phi)
    bad = RationalIsogenyMap(phi.domain, short(4, 1), phi.N, phi.D)
    assert not verify_normalized(bad)
    ident = RationalIsogenyMap(E144, E144, X, UniPoly([1]))
    assert verify_normalized(ident)


def test_rational_kernels():
    assert rational_kernels(E144, 2) == [-2]
    assert rational_kernels(short(1, 1), 2) == []
    assert rational_kernels(short(1, 1), 3) == []
    with pytest.raises(OracleError):
        rational_kernels(E144, 5)


def test_kernel_cross_validates_fricke():
    from isogeny_atlas.oracle import verify_normalized
    rng = random.Random(5)
    done = 0
    while done < 50:
        t = Fraction(rng.randint(-10 ** 3, 10 ** 3), rng.randint(1, 30))
        d = squarefree_part(rng.choice([x for x in range(-30, 31) if x]))
        try:
            E = family_curve(2, 1, t, d)
            j2 = fricke_eval(2, 2, t)
        except (FamilyError, CuspParameter):
            continue
        codomains = set()
        for phi in prime_isogenies(E, 2):
            assert verify_normalized(phi)
            assert phi.N.degree == 2 and phi.D.degree == 1
            codomains.add(phi.codomain.j)
        assert j2 in codomains
        done += 1


@settings(max_examples=40, deadline=None)
@given(st.integers(-200, 200), st.integers(-200, 200))
def test_kernel_maps_are_normalized_and_modular(A, B):
    from isogeny_atlas.oracle import verify_normalized
    E = short(A, B)
    if E.disc == 0:
        return
    for ell in (2, 3):
        for phi in prime_isogenies(E, ell):
            assert verify_normalized(phi)
            assert phi.N.degree == ell and phi.D.degree == ell - 1
            assert phi_vanishes(ell, E.j, phi.codomain.j)


# ---------------------------------------------------------------- modular polynomials

PHI2 = {(3, 0): 1, (2, 2): -1, (2, 1): 1488, (2, 0): -162000, (1, 1): 40773375,
        (1, 0): 8748000000, (0, 0): -157464000000000}


def test_phi2_coefficients():
    P = load_modular_polynomial(2)
    coeffs = dict(P.coeffs)
    for (a, b), c in PHI2.items():
        assert coeffs[(a, b)] == c
        assert coeffs[(b, a)] == c
    assert len(coeffs) == len({k for a, b in PHI2 for k in ((a, b), (b, a))})


def test_phi3_structure():
    P = load_modular_polynomial(3)
    assert max(a for (a, _), _ in P.coeffs) == 4
    assert P.poly == P.poly.swap()


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11, 13, 17, 19])
def test_phi_symmetric(ell):
    if not phi_available(ell):
        pytest.skip("phi data unavailable (level %d)" % ell)
    P = load_modular_polynomial(ell)
    assert (P.poly - P.poly.swap()).is_zero()
    assert P.poly.degree_in("X") == ell + 1


@pytest.mark.parametrize("ell", REQUIRED)
def test_required_levels_present(ell):
    assert phi_available(ell)


def test_phi_vanishes_examples():
    assert phi_vanishes(2, 54000, 0)
    assert not phi_vanishes(2, 54000, 54000)
    # the class of y^2 = x^3 - 15x - 22 has 3-edges 54000 - 54000 and 0 - 0 only
    assert phi_vanishes(3, 54000, 54000)
    assert phi_vanishes(3, 0, 0)
    assert not phi_vanishes(3, 0, 54000)


def test_parse_errors_and_line_numbers():
    with pytest.raises(PhiParseError, match="empty"):
        parse_modular_polynomial(2, "")
    with pytest.raises(PhiParseError, match="empty"):
        parse_modular_polynomial(2, "\n  \n")
    with pytest.raises(PhiParseError, match="line 2"):
        parse_modular_polynomial(2, "[3,0] 1\n[2,x] 5\n")
    with pytest.raises(PhiParseError, match="conflicting"):
        parse_modular_polynomial(2, "[3,0] 1\n[1,2] 4\n[2,1] 5\n")
    with pytest.raises(PhiParseError, match="degree"):
        parse_modular_polynomial(3, "[3,0] 1\n")


def test_missing_level(tmp_path):
    with pytest.raises(PhiUnavailable, match="phi data unavailable \\(level 37\\)"):
        load_modular_polynomial(37, str(tmp_path / "phi_j_37.txt"))


def test_phi_dir_override(tmp_path, monkeypatch):
    from isogeny_atlas import fixtures
    (tmp_path / "phi_j_2.txt").write_text("\n".join("[%d,%d] %d" % (a, b, c) for (a, b), c in PHI2.items()))
    monkeypatch.setenv("ATLAS_PHI_DIR", str(tmp_path))
    fixtures.clear_caches()
    try:
        assert phi_available(2)
        assert not phi_available(3)
        assert phi_vanishes(2, 54000, 0)
    finally:
        monkeypatch.delenv("ATLAS_PHI_DIR")
        fixtures.clear_caches()
    assert phi_available(3)
