import heapq
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from isogeny_atlas.arith import UniPoly, squarefree_part
from isogeny_atlas.curves import is_isomorphic, short
from isogeny_atlas.families import (
    SPORADIC_LEVELS, FamilyError, family_curve, family_j, genus_zero_family, graph_data, k_indices,
    member_count, sporadic_curve, special_curve, subclasses,
)
from isogeny_atlas.fricke import LEVELS, CuspParameter, fricke_eval, fricke_param
from isogeny_atlas.oracle import phi_available, phi_vanishes

# Independent typing of the sporadic models (A_{n,i}, B_{n,i}).
SPORADIC = {
    11: [(-1149984, -487018224), (-9504, 365904), (-395307, 373960422), (-38907, -2953962)],
    14: [(-2361555, 1396762542), (-138915, 24504606), (-48195, -4072194), (-2835, -71442)],
    15: [(-162675, -25254450), (-675, -79650), (712125, -104861250), (-97875, 14208750)],
    17: [(-247394115, -1679010134850), (-3940515, 3010787550)],
    19: [(-219488, -39617584), (-608, 5776)],
    21: [(-1396035, 634881726), (-1104435, 907504398), (3645, -13122), (-54675, -5156946)],
    27: [(-4320, -109296), (0, -432), (0, 16), (-480, 4048)],
    37: [(-269675595, -1704553285050), (-10395, 444150)],
    43: [(-25442240, -49394836848), (-13760, 621264)],
    67: [(-529342880, -4687634371504), (-117920, 15585808)],
    163: [(-924354639680, -342062961763303088), (-34790720, 78984748304)],
}

# Independent typing of the genus-zero isogeny graphs as undirected (i, k, degree).
GRAPHS = {
    2: [(1, 2, 2)], 3: [(1, 2, 3)], 5: [(1, 2, 5)], 7: [(1, 2, 7)], 13: [(1, 2, 13)],
    9: [(1, 2, 3), (2, 3, 3)], 25: [(1, 2, 5), (2, 3, 5)],
    6: [(1, 2, 2), (1, 3, 3), (2, 4, 3), (3, 4, 2)],
    10: [(1, 2, 2), (1, 3, 5), (2, 4, 5), (3, 4, 2)],
    4: [(1, 2, 2), (1, 3, 2), (1, 4, 2)],
    8: [(1, 2, 2), (1, 3, 2), (1, 4, 2), (4, 5, 2), (4, 6, 2)],
    12: [(1, 2, 3), (1, 3, 2), (1, 5, 2), (1, 7, 2), (2, 4, 2), (2, 6, 2), (2, 8, 2),
         (3, 4, 3), (5, 6, 3), (7, 8, 3)],
    16: [(1, 2, 2), (1, 3, 2), (1, 4, 2), (4, 5, 2), (4, 6, 2), (6, 7, 2), (6, 8, 2)],
    18: [(1, 2, 2), (1, 3, 3), (2, 4, 3), (3, 4, 2), (3, 5, 3), (4, 6, 3), (5, 6, 2)],
    11: [(1, 2, 11)], 17: [(1, 2, 17)], 19: [(1, 2, 19)], 37: [(1, 2, 37)],
    43: [(1, 2, 43)], 67: [(1, 2, 67)], 163: [(1, 2, 163)],
    14: [(1, 2, 2), (1, 3, 7), (2, 4, 7), (3, 4, 2)],
    15: [(1, 2, 3), (1, 3, 5), (2, 4, 5), (3, 4, 3)],
    21: [(1, 2, 3), (1, 3, 7), (2, 4, 7), (3, 4, 3)],
    27: [(1, 2, 3), (2, 3, 3), (3, 4, 3)],
}

K_TABLE = {2: (1, 2), 3: (1, 2), 5: (1, 2), 7: (1, 2), 13: (1, 2), 4: (4, 2), 6: (1, 4), 10: (1, 4),
           8: (3, 6), 9: (1, 3), 25: (1, 3), 12: (5, 4), 16: (2, 8), 18: (1, 6)}


def admissible(rng, n):
    while True:
        t = Fraction(rng.randint(-500, 500), rng.randint(1, 30))
        d = squarefree_part(rng.choice([x for x in range(-40, 41) if x]))
        try:
            return t, d, [family_curve(n, i, t, d) for i in range(1, member_count(n) + 1)]
        except FamilyError:
            continue


# ---------------------------------------------------------------- examples

def test_family_curve_examples():
    assert family_curve(6, 1, -6, -1) == short(-19440, -1026432)
    assert family_curve(6, 2, -6, -1) == short(0, -2985984)
    assert family_curve(6, 3, -6, -1) == short(-174960, 27713664)
    assert family_curve(6, 4, -6, -1) == short(0, 80621568)


def test_family_curve_errors():
    with pytest.raises(FamilyError, match="singular parameter"):
        family_curve(2, 1, -64, 1)
    with pytest.raises(FamilyError, match="cusp parameter"):
        family_curve(2, 1, 0, 1)
    with pytest.raises(FamilyError):
        family_curve(6, 1, -6, 0)
    with pytest.raises(FamilyError):
        family_curve(6, 5, -6, 1)
    with pytest.raises(FamilyError):
        family_curve(11, 1, 1, 1)


def test_family_curve_normalizes_d():
    assert family_curve(6, 1, -6, Fraction(-9, 4)) == family_curve(6, 1, -6, -1)
    raw = family_curve(6, 1, -6, 3, normalize=False)
    assert raw == family_curve(6, 1, -6, 3)
    assert family_curve(6, 1, -6, 12, normalize=False) != family_curve(6, 1, -6, 12)


def test_family_j_examples():
    assert family_j(6, 1, -6) == 54000
    assert family_j(6, 2, -12) == 54000
    assert family_j(6, 4, -6) == 0


def test_k_indices():
    assert k_indices(2) == (1, 2)
    assert k_indices(8) == (3, 6)
    assert k_indices(16) == (2, 8)
    for n, k in K_TABLE.items():
        assert k_indices(n) == k
    with pytest.raises(FamilyError):
        k_indices(11)


def test_graph_examples():
    assert graph_data(6).matrix[0] == (1, 2, 3, 6)
    assert graph_data(27).matrix[0] == (1, 3, 9, 27)
    assert graph_data(2).matrix == ((1, 2), (2, 1))
    with pytest.raises(FamilyError):
        graph_data(20)


@pytest.mark.parametrize("n", sorted(GRAPHS))
def test_graph_edges_match_second_typing(n):
    assert graph_data(n).undirected_edges() == sorted(GRAPHS[n])


def _path_products(size, edges):
    adj = {i: [] for i in range(1, size + 1)}
    for i, k, l in edges:
        adj[i].append((k, l))
        adj[k].append((i, l))
    out = {}
    for s in adj:
        best = {s: 1}
        heap = [(1, s)]
        while heap:
            w, v = heapq.heappop(heap)
            if w > best.get(v, w):
                continue
            for u, l in adj[v]:
                if u not in best or w * l < best[u]:
                    best[u] = w * l
                    heapq.heappush(heap, (w * l, u))
        out[s] = best
    return out


@pytest.mark.parametrize("n", sorted(GRAPHS))
def test_matrix_is_minimal_path_product(n):
    G = graph_data(n)
    size = len(G.matrix)
    prods = _path_products(size, G.edges)
    for i in range(size):
        assert G.matrix[i][i] == 1
        for k in range(size):
            assert G.matrix[i][k] == G.matrix[k][i]
            if k + 1 in prods[i + 1]:
                assert G.matrix[i][k] == prods[i + 1][k + 1]


# ---------------------------------------------------------------- sporadic

@pytest.mark.parametrize("n", SPORADIC_LEVELS)
def test_sporadic_models(n):
    assert member_count(n) == len(SPORADIC[n])
    for i, (A, B) in enumerate(SPORADIC[n], start=1):
        assert sporadic_curve(n, i, 1) == short(A, B)
        assert sporadic_curve(n, i, -3) == short(9 * A, -27 * B)


def test_sporadic_examples():
    assert sporadic_curve(11, 2, 1) == short(-9504, 365904)
    assert sporadic_curve(27, 3, 1) == short(0, 16)
    assert sporadic_curve(14, 1, 1) == short(-2361555, 1396762542)
    with pytest.raises(FamilyError):
        sporadic_curve(14, 5, 1)
    with pytest.raises(FamilyError):
        sporadic_curve(13, 1, 1)


def test_sporadic_second_subclass_edge():
    # level 11 carries two classes; the printed graph is the first one
    for i, k, ell in graph_data(11).edges:
        assert phi_vanishes(ell, sporadic_curve(11, i + 2, 1).j, sporadic_curve(11, k + 2, 1).j)


def test_subclasses():
    assert subclasses(11) == [(1, 2), (3, 4)]
    assert subclasses(27) == [(1, 2, 3, 4)]
    assert subclasses(37) == [(1, 2)]


@pytest.mark.parametrize("n", SPORADIC_LEVELS)
def test_sporadic_edges_vanish(n):
    for i, k, ell in graph_data(n).edges:
        if not phi_available(ell):
            continue
        assert phi_vanishes(ell, sporadic_curve(n, i, 1).j, sporadic_curve(n, k, 1).j)


# ---------------------------------------------------------------- special families

def test_special_curve_examples():
    assert special_curve("j0_n3", 1, 1) == short(0, 16)
    assert special_curve("j0_n3", 2, 1) == short(0, -432)
    assert special_curve("j1728_n2", 2, 1) == short(4, 0)
    assert special_curve("j1728_n2", 1, 1) == short(-1, 0)
    assert special_curve("j1728_n2", 1, 2 ** 4 * 3) == short(-3, 0)
    assert special_curve("j0_n3", 1, 2 ** 6 * 5) == short(0, 80)
    with pytest.raises(FamilyError):
        special_curve("j0_n3", 1, 0)
    with pytest.raises(FamilyError):
        special_curve("j0_n5", 1, 1)


# ---------------------------------------------------------------- identities

@pytest.mark.parametrize("n", LEVELS)
def test_distinguished_members_carry_fricke_j(n):
    # exact identity in Q(t): 6912 A^3 den = num (4 A^3 + 27 B^2)
    for side, k in enumerate(k_indices(n), start=1):
        jn, jd = genus_zero_family(n, k).j_parts()
        F = fricke_param(n, side)
        assert jn * F.den_poly == F.num_poly * jd


@pytest.mark.parametrize("n", LEVELS)
def test_member_j_functions_distinct(n):
    parts = [genus_zero_family(n, i).j_parts() for i in range(1, member_count(n) + 1)]
    for (a, b), (c, d) in combinations(parts, 2):
        assert a * d != b * c


@pytest.mark.parametrize("n", LEVELS)
def test_members_pairwise_non_isomorphic(n):
    rng = random.Random(1000 + n)
    for _ in range(50):
        t, d, members = admissible(rng, n)
        for E1, E2 in combinations(members, 2):
            assert is_isomorphic(E1, E2) is None, (n, t, d)


@pytest.mark.parametrize("n", LEVELS)
def test_graph_edges_vanish_on_modular_polynomials(n):
    rng = random.Random(2000 + n)
    for _ in range(25):
        t, d, members = admissible(rng, n)
        for i, k, ell in graph_data(n).edges:
            assert phi_vanishes(ell, members[i - 1].j, members[k - 1].j), (n, i, k, t)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(LEVELS), st.builds(Fraction, st.integers(-10 ** 3, 10 ** 3), st.integers(1, 40)))
def test_family_j_matches_fricke(n, t):
    for side, k in enumerate(k_indices(n), start=1):
        try:
            want = fricke_eval(n, side, t)
        except CuspParameter:
            return
        try:
            got = family_j(n, k, t)
        except FamilyError:
            return
        assert got == want
