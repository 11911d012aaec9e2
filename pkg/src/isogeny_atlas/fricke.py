"""Fricke parameterizations j_{n,1}, j_{n,2}: evaluation, preimages, exceptional sets."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .arith import UniPoly, rational_roots
from .fixtures import load_json

LEVELS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)


class FrickeError(ValueError):
    pass


class CuspParameter(FrickeError):
    pass


@dataclass(frozen=True)
class FrickeParam:
    n: int
    i: int
    num: Tuple[int, ...]
    den: Tuple[int, ...]

    @property
    def num_poly(self) -> UniPoly:
        return UniPoly(self.num)

    @property
    def den_poly(self) -> UniPoly:
        return UniPoly(self.den)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        d = _horner(self.den, t)
        if d == 0:
            raise CuspParameter("cusp parameter: t=%s is a pole of j_{%d,%d}" % (t, self.n, self.i))
        return _horner(self.num, t) / d

    def preimage_poly(self, j0) -> List[int]:
        """Integer coefficients of den(j0)*num(t) - num(j0)*den(t)."""
        j0 = Fraction(j0)
        p, q = j0.numerator, j0.denominator
        size = max(len(self.num), len(self.den))
        num = list(self.num) + [0] * (size - len(self.num))
        den = list(self.den) + [0] * (size - len(self.den))
        return [q * a - p * b for a, b in zip(num, den)]


def _horner(coeffs, t):
    acc = Fraction(0)
    for a in reversed(coeffs):
        acc = acc * t + a
    return acc


@lru_cache(maxsize=None)
def _params() -> Dict[Tuple[int, int], FrickeParam]:
    out = {}
    for e in load_json("fricke_params.json"):
        n, i = int(e["n"]), int(e["i"])
        out[(n, i)] = FrickeParam(n, i, tuple(int(x) for x in e["num"]), tuple(int(x) for x in e["den"]))
    return out


def fricke_param(n: int, i: int) -> FrickeParam:
    try:
        return _params()[(n, i)]
    except KeyError:
        raise FrickeError("no Fricke parameterization for (n, i) = (%s, %s)" % (n, i)) from None


def fricke_eval(n: int, i: int, t) -> Fraction:
    return fricke_param(n, i)(t)


def fricke_solve(n: int, j0, i: int = 1) -> List[Fraction]:
    """All rational t with j_{n,i}(t) = j0, poles excluded, sorted."""
    F = fricke_param(n, i)
    c = F.preimage_poly(j0)
    out = []
    for t in rational_roots(c):
        if _horner(F.den, t) != 0:
            out.append(t)
    return out


# ------------------------------------------------------ exceptional sets

# Singular fibres of the families: the defining polynomial (ascending) and the
# common j value of j_{n,1}, j_{n,2} at its roots.
_SINGULAR = {
    2: [((64, 1), 1728)],
    3: [((27, 1), 0)],
    5: [((125, 22, 1), 1728)],
    7: [((49, 13, 1), 0)],
    10: [((4, 0, 1), 1728)],
    25: [((4, 0, 1), 1728)],
    # j = 0 and j = 1728 sit on these two factors respectively (checked by
    # divisibility of num - j*den); the printed assignment is the other way round.
    13: [((13, 5, 1), 0), ((13, 6, 1), 1728)],
}
_COINCIDENCE = {2: [((64, 1), 1728)], 3: [((27, 1), 0)]}

KINDS = ("singular_family", "coincidence_0_1728")


@dataclass(frozen=True)
class ExceptionalSet:
    n: int
    kind: str
    factors: Tuple[Tuple[Tuple[int, ...], int], ...]

    @property
    def poly(self) -> UniPoly:
        p = UniPoly([1])
        for coeffs, _ in self.factors:
            p = p * UniPoly(coeffs)
        return p

    def rational_members(self) -> List[Fraction]:
        return rational_roots(self.poly) if self.factors else []

    def j_values(self) -> List[Tuple[UniPoly, int]]:
        return [(UniPoly(c), j) for c, j in self.factors]


def exceptional_params(n: int, kind: str) -> ExceptionalSet:
    if n not in LEVELS:
        raise FrickeError("not a genus-zero level: %s" % n)
    if kind == "singular_family":
        table = _SINGULAR
    elif kind == "coincidence_0_1728":
        table = _COINCIDENCE
    else:
        raise FrickeError("unknown exceptional kind %r" % kind)
    return ExceptionalSet(n, kind, tuple(table.get(n, ())))
