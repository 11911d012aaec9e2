"""Independent checking machinery: division polynomials, 2- and 3-isogenies from a
kernel polynomial via the normalized-isogeny formula, and modular polynomials."""
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .arith import MultiPoly, UniPoly, rational_roots
from .curves import CurveError, WeierstrassModel, require_nonsingular, short
from .fixtures import phi_dir


class OracleError(ValueError):
    pass


class PhiUnavailable(OracleError):
    def __init__(self, ell):
        super().__init__("phi data unavailable (level %d)" % ell)
        self.ell = ell


class PhiParseError(OracleError):
    pass


X = UniPoly.x()


def _cubic(E: WeierstrassModel) -> UniPoly:
    E = require_nonsingular(E).to_short()
    return UniPoly([E.a6, E.a4, 0, 1])


# --------------------------------------------------- division polynomials


@lru_cache(maxsize=64)
def _g_table(A: Fraction, B: Fraction, m: int) -> Tuple[UniPoly, ...]:
    """g_k for k <= m, where g_k = psi_k (k odd) and psi_k / (2y) (k even)."""
    f = UniPoly([B, A, 0, 1])
    f2 = 16 * f * f
    g = [UniPoly(), UniPoly([1]), UniPoly([1]),
         UniPoly([-A * A, 12 * B, 6 * A, 0, 3]),
         2 * UniPoly([-8 * B * B - A ** 3, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1])]
    for n in range(5, m + 1):
        k = n // 2
        if n % 2:
            if k % 2 == 0:
                v = f2 * g[k + 2] * g[k] ** 3 - g[k - 1] * g[k + 1] ** 3
            else:
                v = g[k + 2] * g[k] ** 3 - f2 * g[k - 1] * g[k + 1] ** 3
        else:
            v = g[k] * (g[k + 2] * g[k - 1] ** 2 - g[k - 2] * g[k + 1] ** 2)
        g.append(v)
    return tuple(g)


def division_polynomial(E: WeierstrassModel, m: int) -> UniPoly:
    """x-only division polynomial: psi_m for odd m, psi_m^2 / 4 for even m.

    The even-m value (x^3+Ax+B) g_m^2 has exactly the abscissas of the nonzero
    m-torsion points as roots; for m = 2 it is the cubic itself."""
    if m < 1:
        raise OracleError("division polynomial index must be >= 1")
    E = require_nonsingular(E).to_short()
    g = _g_table(E.a4, E.a6, max(m, 4))
    if m % 2:
        return g[m]
    return _cubic(E) * g[m] * g[m]


# ------------------------------------------------------ kernel isogenies


@dataclass(frozen=True)
class KernelPolynomial:
    curve: WeierstrassModel
    D: UniPoly
    sigma2: Fraction
    degree: int


@dataclass(frozen=True)
class RationalIsogenyMap:
    domain: WeierstrassModel
    codomain: WeierstrassModel
    N: UniPoly
    D: UniPoly


def kernel_polynomial(E: WeierstrassModel, x0, n: int) -> KernelPolynomial:
    """Kernel polynomial of the cyclic n-subgroup (n in {2, 3}) with abscissa x0."""
    E = require_nonsingular(E).to_short()
    x0 = Fraction(x0)
    if n == 2:
        if _cubic(E)(x0) != 0:
            raise OracleError("x0=%s is not a root of x^3+Ax+B" % x0)
        return KernelPolynomial(E, X - x0, x0, 2)
    if n == 3:
        if division_polynomial(E, 3)(x0) != 0:
            raise OracleError("x0=%s is not a root of psi_3" % x0)
        return KernelPolynomial(E, (X - x0) ** 2, 2 * x0, 3)
    raise OracleError("kernel isogenies are implemented for degree 2 and 3 only")


def _codomain(f: UniPoly, N: UniPoly, D: UniPoly) -> Optional[Tuple[Fraction, Fraction]]:
    """Solve f (N'D - ND')^2 = N^3 D + A2 N D^3 + B2 D^4 for (A2, B2), or None."""
    L = f * (N.derivative() * D - N * D.derivative()) ** 2 - N ** 3 * D
    P1 = N * D ** 3
    P2 = D ** 4
    if L.degree > P1.degree:
        return None
    A2 = L.coeff(P1.degree) / P1.lc
    R = L - A2 * P1
    if R.is_zero():
        return A2, Fraction(0)
    if R.degree != P2.degree:
        return None
    B2 = R.lc / P2.lc
    if R != B2 * P2:
        return None
    return A2, B2


def isogeny_from_kernel(E: WeierstrassModel, K: KernelPolynomial) -> RationalIsogenyMap:
    E = require_nonsingular(E).to_short()
    f = _cubic(E)
    D = K.D
    dD, ddD = D.derivative(), D.derivative().derivative()
    # N/D = n x - sigma2 - (3x^2+A) D'/D - 2 f (D'/D)', over the common denominator D^2
    P = (K.degree * X - K.sigma2) * D * D - (3 * X * X + E.a4) * dD * D - 2 * f * (ddD * D - dD * dD)
    Q = D * D
    # cancel the common factor (the result has denominator D)
    N, Dm = P.exact_div(D), Q.exact_div(D)
    if N.degree != K.degree or Dm.degree != K.degree - 1:
        raise OracleError("kernel formula produced degrees (%d, %d)" % (N.degree, Dm.degree))
    AB = _codomain(f, N, Dm)
    if AB is None:
        raise OracleError("no normalized codomain: kernel polynomial is not a subgroup")
    try:
        cod = require_nonsingular(short(*AB))
    except CurveError as e:
        raise OracleError(str(e)) from None
    return RationalIsogenyMap(E, cod, N, Dm)


def verify_normalized(phi: RationalIsogenyMap) -> bool:
    E1, E2 = phi.domain.to_short(), phi.codomain.to_short()
    f = _cubic(E1)
    N, D = phi.N, phi.D
    lhs = f * (N.derivative() * D - N * D.derivative()) ** 2
    rhs = N ** 3 * D + E2.a4 * N * D ** 3 + E2.a6 * D ** 4
    return lhs == rhs


def rational_kernels(E: WeierstrassModel, ell: int) -> List[Fraction]:
    if ell == 2:
        return rational_roots(_cubic(E))
    if ell == 3:
        return rational_roots(division_polynomial(E, 3))
    raise OracleError("kernel isogenies are implemented for degree 2 and 3 only")


def prime_isogenies(E: WeierstrassModel, ell: int) -> List[RationalIsogenyMap]:
    """All rational ell-isogenies (ell in {2, 3}) out of E, one per kernel."""
    return [isogeny_from_kernel(E, kernel_polynomial(E, x0, ell)) for x0 in rational_kernels(E, ell)]


# --------------------------------------------------- modular polynomials


@dataclass(frozen=True)
class ModularPolynomial:
    ell: int
    coeffs: Tuple[Tuple[Tuple[int, int], int], ...]

    @property
    def poly(self) -> MultiPoly:
        return MultiPoly(("X", "Y"), dict(self.coeffs))

    def __call__(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        rows: Dict[int, Dict[int, int]] = {}
        for (a, b), c in self.coeffs:
            rows.setdefault(a, {})[b] = c
        deg = self.ell + 1
        ypow = [Fraction(1)]
        for _ in range(deg):
            ypow.append(ypow[-1] * y)
        acc = Fraction(0)
        for a in range(deg, -1, -1):
            row = rows.get(a, {})
            acc = acc * x + sum(c * ypow[b] for b, c in row.items())
        return acc


_LINE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]\s+(-?\d+)$")


def parse_modular_polynomial(ell: int, text: str, origin: str = "<text>") -> ModularPolynomial:
    terms: Dict[Tuple[int, int], int] = {}
    seen = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise PhiParseError("%s line %d: cannot parse %r" % (origin, lineno, raw))
        a, b, c = int(m.group(1)), int(m.group(2)), int(m.group(3))
        seen = True
        for key in {(a, b), (b, a)}:
            if key in terms and terms[key] != c:
                raise PhiParseError("%s line %d: conflicting coefficient for X^%d Y^%d"
                                    % (origin, lineno, key[0], key[1]))
            terms[key] = c
    if not seen:
        raise PhiParseError("%s: empty modular polynomial file" % origin)
    degx = max(a for a, _ in terms)
    if degx != ell + 1 or terms.get((ell + 1, 0)) != 1:
        raise PhiParseError("%s: expected degree %d in X with X^%d coefficient 1"
                            % (origin, ell + 1, ell + 1))
    return ModularPolynomial(ell, tuple(sorted(terms.items())))


@lru_cache(maxsize=None)
def _load_phi(ell: int, path: str) -> ModularPolynomial:
    if not os.path.exists(path):
        raise PhiUnavailable(ell)
    with open(path) as fh:
        return parse_modular_polynomial(ell, fh.read(), path)


def load_modular_polynomial(ell: int, path: Optional[str] = None) -> ModularPolynomial:
    if path is None:
        path = os.path.join(phi_dir(), "phi_j_%d.txt" % ell)
    return _load_phi(ell, path)


def phi_available(ell: int) -> bool:
    try:
        load_modular_polynomial(ell)
    except PhiUnavailable:
        return False
    return True


def phi_vanishes(ell: int, j1, j2) -> bool:
    return load_modular_polynomial(ell)(j1, j2) == 0
