"""Explicit curve families: genus-zero C_{n,i}(t,d), sporadic C_{n,i}(d), the
j = 0 / 1728 pairs, and the isogeny graph and matrix data per level."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .arith import UniPoly, power_free_part, squarefree_part
from .curves import CurveError, WeierstrassModel, short
from .fixtures import load_json
from .fricke import LEVELS as GENUS_ZERO_LEVELS
from .fricke import fricke_param

SPORADIC_LEVELS = (11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163)
SPECIAL_KINDS = ("j1728_n2", "j0_n3")


class FamilyError(CurveError):
    pass


@dataclass(frozen=True)
class GenusZeroFamily:
    n: int
    i: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]

    @property
    def A_poly(self) -> UniPoly:
        return UniPoly(self.A)

    @property
    def B_poly(self) -> UniPoly:
        return UniPoly(self.B)

    def at(self, t) -> Tuple[Fraction, Fraction]:
        t = Fraction(t)
        return _horner(self.A, t), _horner(self.B, t)

    def j_parts(self) -> Tuple[UniPoly, UniPoly]:
        """(6912 A^3, 4 A^3 + 27 B^2): J_{n,i} as an unreduced quotient."""
        A, B = self.A_poly, self.B_poly
        A3 = A ** 3
        return 6912 * A3, 4 * A3 + 27 * B * B


@dataclass(frozen=True)
class IsogenyGraphData:
    n: int
    edges: Tuple[Tuple[int, int, int], ...]
    matrix: Tuple[Tuple[int, ...], ...]

    def undirected_edges(self) -> List[Tuple[int, int, int]]:
        return sorted((min(i, k), max(i, k), l) for i, k, l in self.edges)


def _horner(coeffs, t):
    acc = Fraction(0)
    for a in reversed(coeffs):
        acc = acc * t + a
    return acc


@lru_cache(maxsize=None)
def _tables():
    raw = load_json("families.json")
    g0 = {}
    for e in raw["genus_zero"]:
        g0[(int(e["n"]), int(e["i"]))] = GenusZeroFamily(
            int(e["n"]), int(e["i"]), tuple(int(x) for x in e["A"]), tuple(int(x) for x in e["B"]))
    spor = {}
    for e in raw["sporadic"]:
        spor[(int(e["n"]), int(e["i"]))] = (int(e["A"]), int(e["B"]))
    graphs = {}
    for e in raw["graphs"]:
        edges = tuple(tuple(int(v) for v in edge) for edge in e["edges"])
        matrix = tuple(tuple(int(v) for v in row) for row in e["matrix"])
        graphs[int(e["n"])] = IsogenyGraphData(int(e["n"]), edges, matrix)
    levels = {}
    for e in raw["levels"]:
        levels[int(e["n"])] = (tuple(e["k"]), int(e["members"]))
    return g0, spor, graphs, levels


def genus_zero_family(n: int, i: int) -> GenusZeroFamily:
    try:
        return _tables()[0][(n, i)]
    except KeyError:
        raise FamilyError("no genus-zero family member (n, i) = (%s, %s)" % (n, i)) from None


def k_indices(n: int) -> Tuple[int, int]:
    levels = _tables()[3]
    if n not in levels:
        raise FamilyError("not a genus-zero level: %s" % n)
    return levels[n][0]


def member_count(n: int) -> int:
    if n in _tables()[3]:
        return _tables()[3][n][1]
    if n in SPORADIC_LEVELS:
        return sum(1 for (m, _) in _tables()[1] if m == n)
    raise FamilyError("unknown level %s" % n)


def graph_data(n: int) -> IsogenyGraphData:
    try:
        return _tables()[2][n]
    except KeyError:
        raise FamilyError("no isogeny graph for level %s" % n) from None


def sporadic_pairs(n: int) -> List[Tuple[int, int]]:
    if n not in SPORADIC_LEVELS:
        raise FamilyError("not a sporadic level: %s" % n)
    return [_tables()[1][(n, i)] for i in range(1, member_count(n) + 1)]


def subclasses(n: int) -> List[Tuple[int, ...]]:
    """Member groups forming one isogeny class each (level 11 holds two classes)."""
    if n == 11:
        return [(1, 2), (3, 4)]
    return [tuple(range(1, member_count(n) + 1))]


def normalize_d(d) -> int:
    d = Fraction(d)
    if d == 0:
        raise FamilyError("twist parameter d must be nonzero")
    return squarefree_part(d)


def family_curve(n: int, i: int, t, d, normalize: bool = True) -> WeierstrassModel:
    """C_{n,i}(t,d): y^2 = x^3 + d^2 A_{n,i}(t) x + d^3 B_{n,i}(t)."""
    F = genus_zero_family(n, i)
    d = normalize_d(d) if normalize else Fraction(d)
    if d == 0:
        raise FamilyError("twist parameter d must be nonzero")
    A, B = F.at(t)
    if 4 * A ** 3 + 27 * B ** 2 == 0:
        for side in (1, 2):
            if _horner(fricke_param(n, side).den, Fraction(t)) == 0:
                raise FamilyError("cusp parameter: t=%s for level %d" % (t, n))
        raise FamilyError("singular parameter: t=%s for C_{%d,%d}" % (t, n, i))
    return short(d * d * A, d ** 3 * B)


def family_j(n: int, i: int, t) -> Fraction:
    return family_curve(n, i, t, 1).j


def sporadic_curve(n: int, i: int, d, normalize: bool = True) -> WeierstrassModel:
    if n not in SPORADIC_LEVELS:
        raise FamilyError("not a sporadic level: %s" % n)
    try:
        A, B = _tables()[1][(n, i)]
    except KeyError:
        raise FamilyError("no sporadic member (n, i) = (%s, %s)" % (n, i)) from None
    d = normalize_d(d) if normalize else Fraction(d)
    return short(d * d * A, d ** 3 * B)


def normalize_special_d(kind: str, d) -> Fraction:
    d = Fraction(d)
    if d == 0:
        raise FamilyError("twist parameter d must be nonzero")
    # quartic twists for j = 1728, sextic for j = 0
    return power_free_part(d, 4 if kind == "j1728_n2" else 6)


def special_curve(kind: str, i: int, d, normalize: bool = True) -> WeierstrassModel:
    if kind not in SPECIAL_KINDS:
        raise FamilyError("unknown special family %r" % kind)
    if i not in (1, 2):
        raise FamilyError("special families have members 1 and 2")
    d = normalize_special_d(kind, d) if normalize else Fraction(d)
    if d == 0:
        raise FamilyError("twist parameter d must be nonzero")
    if kind == "j1728_n2":
        return short(-d, 0) if i == 1 else short(4 * d, 0)
    return short(0, 16 * d) if i == 1 else short(0, -432 * d)


@lru_cache(maxsize=None)
def j_quotient(n: int, i: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Integer numerator/denominator coefficient tuples for solving J_{n,i}(t) = j.

    The two distinguished members use the smaller Fricke quotient; the rest use
    6912 A^3 / (4 A^3 + 27 B^2) unreduced (spurious roots are singular fibres and
    are filtered by the caller)."""
    k1, k2 = k_indices(n)
    if i == k1 or i == k2:
        F = fricke_param(n, 1 if i == k1 else 2)
        return F.num, F.den
    num, den = genus_zero_family(n, i).j_parts()
    return tuple(int(x) for x in num.c), tuple(int(x) for x in den.c)
