"""Integral models F_n(a,b) for n in {4, 6, 9}, their invariants (alpha_n, gamma_n),
and Bezout witnesses bounding gcd(alpha_n, gamma_n)."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from .arith import MultiPoly, factor_integer
from .curves import CurveError, WeierstrassModel
from .fixtures import load_json

LEVELS = (4, 6, 9)
# constant c_n and exponent e_n of the Bezout identities
BEZOUT_CONSTANTS = {4: (2 ** 28, 6), 6: (2 ** 16 * 3 ** 24, 15), 9: (3 ** 39, 15)}
VARS = ("a", "b")


class SemistableError(CurveError):
    pass


def _check_level(n):
    if n not in LEVELS:
        raise SemistableError("level must be one of 4, 6, 9 (got %s)" % n)


def _coeffs(n, a, b):
    if n == 4:
        return (0, b - 16 * a, 0, -16 * a * b, 0)
    if n == 6:
        return (36 * a + 5 * b, 2 * b * (9 * a + b), 9 * b * (8 * a + b) * (9 * a + b), 0, 0)
    return (3 * (6 * a + b), 0, (b - 3 * a) ** 3, 0, 0)


def alpha_gamma(n: int, a, b):
    _check_level(n)
    a, b = Fraction(a), Fraction(b)
    if n == 4:
        return (16 * (256 * a * a + 16 * a * b + b * b),
                4096 * a * a * b * b * (16 * a + b) ** 2)
    if n == 6:
        return (9 * (12 * a + b) * (15552 * a ** 3 + 3888 * a * a * b + 252 * a * b * b + b ** 3),
                729 * a * b ** 6 * (8 * a + b) ** 2 * (9 * a + b) ** 3)
    return (9 * (6 * a + b) * (2160 * a ** 3 + 756 * a * a * b + 234 * a * b * b + b ** 3),
            729 * a * (b - 3 * a) ** 9 * (9 * a * a + 3 * a * b + b * b))


def f_model(n: int, a, b) -> WeierstrassModel:
    _check_level(n)
    if alpha_gamma(n, a, b)[1] == 0:
        raise SemistableError("degenerate parameters: gamma_%d(%s, %s) = 0" % (n, a, b))
    a, b = Fraction(a), Fraction(b)
    return WeierstrassModel(*_coeffs(n, a, b))


def verify_lemma41(n: int, a, b) -> bool:
    """c4 and disc of F_n(a,b) equal alpha_n(a,b) and gamma_n(a,b)."""
    F = f_model(n, a, b)
    al, ga = alpha_gamma(n, a, b)
    return F.c4 == al and F.disc == ga


def gcd_bound_check(n: int, a: int, b: int) -> bool:
    """gcd(alpha_n, gamma_n) divides c_n and is supported on the primes of n."""
    _check_level(n)
    a, b = int(a), int(b)
    if gcd(a, b) != 1:
        raise SemistableError("a and b must be coprime (gcd(%d, %d) = %d)" % (a, b, gcd(a, b)))
    al, ga = alpha_gamma(n, a, b)
    g = gcd(int(al), int(ga))
    if g == 0:
        return True
    c = BEZOUT_CONSTANTS[n][0]
    if c % g:
        return False
    for p, _ in factor_integer(g):
        if n % p:
            return False
    return True


# --------------------------------------------------------------- Bezout


@dataclass(frozen=True)
class BezoutIdentity:
    target: str
    exponent: int
    mu: MultiPoly
    nu: MultiPoly
    constant: int


@dataclass(frozen=True)
class BezoutWitness:
    n: int
    identities: Tuple[BezoutIdentity, ...]

    def constant(self, target: str) -> int:
        return next(w.constant for w in self.identities if w.target == target)


def alpha_gamma_polys(n: int) -> Tuple[MultiPoly, MultiPoly]:
    _check_level(n)
    a = MultiPoly.var(VARS, "a")
    b = MultiPoly.var(VARS, "b")
    return alpha_gamma_symbolic(n, a, b)


def alpha_gamma_symbolic(n, a, b):
    if n == 4:
        return (16 * (256 * a * a + 16 * a * b + b * b),
                4096 * a * a * b * b * (16 * a + b) ** 2)
    if n == 6:
        return (9 * (12 * a + b) * (15552 * a ** 3 + 3888 * a * a * b + 252 * a * b * b + b ** 3),
                729 * a * b ** 6 * (8 * a + b) ** 2 * (9 * a + b) ** 3)
    return (9 * (6 * a + b) * (2160 * a ** 3 + 756 * a * a * b + 234 * a * b * b + b ** 3),
            729 * a * (b - 3 * a) ** 9 * (9 * a * a + 3 * a * b + b * b))


def _target(target: str, e: int) -> MultiPoly:
    exp = (e, 0) if target == "a" else (0, e)
    return MultiPoly(VARS, {exp: 1})


def check_identity(n: int, w: BezoutIdentity) -> bool:
    al, ga = alpha_gamma_polys(n)
    return w.mu * al + w.nu * ga == w.constant * _target(w.target, w.exponent)


def _homogeneous_coeffs(p: MultiPoly, deg: int) -> List[int]:
    out = [0] * (deg + 1)
    for (i, j), c in p.terms.items():
        if i + j != deg:
            raise SemistableError("form is not homogeneous of degree %d" % deg)
        out[i] = c
    return out


def _solve_unique(rows: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """Gauss-Jordan over Q for a consistent system with a unique solution."""
    m, k = len(rows), len(rows[0])
    M = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    if len(piv_cols) != k:
        raise SemistableError("Bezout system is underdetermined")
    if any(M[i][k] != 0 for i in range(r, m)):
        raise SemistableError("Bezout system is inconsistent")
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = M[i][k]
    return sol


def _derive_identity(n: int, target: str) -> BezoutIdentity:
    al, ga = alpha_gamma_polys(n)
    e = BEZOUT_CONSTANTS[n][1]
    da, dg = al.total_degree(), ga.total_degree()
    ca, cg = _homogeneous_coeffs(al, da), _homogeneous_coeffs(ga, dg)
    nm, nn = e - da + 1, e - dg + 1
    # unknowns: coefficients of homogeneous mu (degree e-da) and nu (degree e-dg)
    cols = []
    for base, cnt in ((ca, nm), (cg, nn)):
        for k in range(cnt):
            col = [Fraction(0)] * (e + 1)
            for i, c in enumerate(base):
                col[i + k] += c
            cols.append(col)
    rows = [[col[r] for col in cols] for r in range(e + 1)]
    rhs = [Fraction(0)] * (e + 1)
    rhs[e if target == "a" else 0] = Fraction(1)
    sol = _solve_unique(rows, rhs)
    den = 1
    for v in sol:
        den = den * v.denominator // gcd(den, v.denominator)
    vec = [int(v * den) for v in sol]
    mu = MultiPoly(VARS, {(k, e - da - k): vec[k] for k in range(nm)})
    nu = MultiPoly(VARS, {(k, e - dg - k): vec[nm + k] for k in range(nn)})
    return BezoutIdentity(target, e, mu, nu, den)


def _parse_terms(terms) -> MultiPoly:
    return MultiPoly(VARS, {tuple(exp): int(c) for exp, c in terms})


def load_bezout(n: int) -> BezoutWitness:
    _check_level(n)
    ids = []
    for e in load_json("bezout_%d.json" % n):
        ids.append(BezoutIdentity(e["target"], int(e["exponent"]), _parse_terms(e["mu"]),
                                  _parse_terms(e["nu"]), int(e["constant"])))
    return BezoutWitness(n, tuple(ids))


def derive_bezout(n: int, recompute: bool = False) -> BezoutWitness:
    """Bezout witnesses for targets a^e and b^e, re-verified exactly.

    By default the checked fixture is loaded; recompute=True solves the linear
    system for homogeneous cofactors from scratch."""
    _check_level(n)
    if recompute:
        W = BezoutWitness(n, (_derive_identity(n, "a"), _derive_identity(n, "b")))
    else:
        W = load_bezout(n)
    c_n = BEZOUT_CONSTANTS[n][0]
    for w in W.identities:
        if not check_identity(n, w):
            raise SemistableError("Bezout identity for n=%d, target %s does not hold" % (n, w.target))
        if w.constant <= 0 or c_n % w.constant:
            raise SemistableError("Bezout constant %d does not divide %d" % (w.constant, c_n))
    return W


def witness_json(W: BezoutWitness) -> List[Dict]:
    out = []
    for w in W.identities:
        out.append({"target": w.target, "exponent": w.exponent,
                    "mu": [[list(k), str(v)] for k, v in sorted(w.mu.terms.items())],
                    "nu": [[list(k), str(v)] for k, v in sorted(w.nu.terms.items())],
                    "constant": str(w.constant)})
    return out
