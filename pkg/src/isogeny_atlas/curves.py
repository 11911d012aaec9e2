"""Weierstrass models over Q: invariants, twists, isomorphism, minimal models."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from .arith import (
    ArithmeticError_,
    factor_integer,
    format_rational,
    rational_root_exact,
    valuation,
)


class CurveError(ValueError):
    pass


class SingularModel(CurveError):
    pass


@dataclass(frozen=True)
class WeierstrassModel:
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def short(cls, A, B):
        return cls(0, 0, 0, A, B)

    @property
    def coeffs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def is_short(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    @property
    def A(self) -> Fraction:
        return self.a4 if self.is_short else -self.c4 / 48

    @property
    def B(self) -> Fraction:
        return self.a6 if self.is_short else -self.c6 / 864

    @property
    def b2(self):
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2

    @property
    def c4(self):
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    @property
    def j(self):
        d = self.disc
        if d == 0:
            raise SingularModel("singular model (discriminant 0)")
        return self.c4 ** 3 / d

    def to_short(self) -> "WeierstrassModel":
        if self.is_short:
            return self
        return WeierstrassModel.short(-self.c4 / 48, -self.c6 / 864)

    def text(self) -> str:
        if self.is_short:
            return "%s,%s" % (format_rational(self.a4), format_rational(self.a6))
        return ",".join(format_rational(a) for a in self.coeffs)

    def __str__(self):
        return "[" + ",".join(format_rational(a) for a in self.coeffs) + "]"


def short(A, B) -> WeierstrassModel:
    return WeierstrassModel.short(A, B)


def invariants(W: WeierstrassModel):
    """(b2, b4, b6, b8, c4, c6, disc, j); raises SingularModel when disc = 0."""
    d = W.disc
    if d == 0:
        raise SingularModel("singular model (discriminant 0)")
    return (W.b2, W.b4, W.b6, W.b8, W.c4, W.c6, d, W.c4 ** 3 / d)


def require_nonsingular(W: WeierstrassModel) -> WeierstrassModel:
    if W.disc == 0:
        raise SingularModel("singular model (discriminant 0)")
    return W


def model_json(W: WeierstrassModel) -> dict:
    b2, b4, b6, b8, c4, c6, d, j = invariants(W)
    return {
        "model": [format_rational(a) for a in W.coeffs],
        "c4": format_rational(c4),
        "c6": format_rational(c6),
        "disc": format_rational(d),
        "j": format_rational(j),
    }


# ---------------------------------------------------------------- twists


def quadratic_twist(E: WeierstrassModel, d) -> WeierstrassModel:
    d = Fraction(d)
    if d == 0:
        raise CurveError("twist parameter must be nonzero")
    E = require_nonsingular(E).to_short()
    return short(d * d * E.a4, d ** 3 * E.a6)


def special_twist(E: WeierstrassModel, d, kind: str) -> WeierstrassModel:
    d = Fraction(d)
    if d == 0:
        raise CurveError("twist parameter must be nonzero")
    E = require_nonsingular(E).to_short()
    if kind == "quartic":
        if E.a6 != 0:
            raise CurveError("quartic twist needs B = 0")
        return short(d * E.a4, 0)
    if kind == "sextic":
        if E.a4 != 0:
            raise CurveError("sextic twist needs A = 0")
        return short(0, d * E.a6)
    raise CurveError("unknown twist kind %r" % kind)


def is_isomorphic(E1: WeierstrassModel, E2: WeierstrassModel) -> Optional[Fraction]:
    """Positive u with A2 = u^4 A1 and B2 = u^6 B1, or None if not Q-isomorphic."""
    E1 = require_nonsingular(E1).to_short()
    E2 = require_nonsingular(E2).to_short()
    A1, B1, A2, B2 = E1.a4, E1.a6, E2.a4, E2.a6
    if (A1 == 0) != (A2 == 0) or (B1 == 0) != (B2 == 0):
        return None
    if A1 == 0:
        return rational_root_exact(B2 / B1, 6)
    if B1 == 0:
        return rational_root_exact(A2 / A1, 4)
    u2 = (A1 * B2) / (A2 * B1)
    if u2 * u2 != A2 / A1:
        return None
    return rational_root_exact(u2, 2)


def twist_parameter(E_ref: WeierstrassModel, E_target: WeierstrassModel) -> Fraction:
    """d = B c4' / (2 A c6') so that the twist of E_ref by d is isomorphic to E_target."""
    E_ref = require_nonsingular(E_ref).to_short()
    E_target = require_nonsingular(E_target)
    j1, j2 = E_ref.j, E_target.j
    if j1 != j2:
        raise CurveError("j-invariants differ (%s vs %s)" % (format_rational(j1), format_rational(j2)))
    if j1 in (0, 1728):
        raise CurveError("twist parameter undefined for j in {0, 1728}")
    return E_ref.a6 * E_target.c4 / (2 * E_ref.a4 * E_target.c6)


# ---------------------------------------------------------- minimal models


class ReductionType(str, Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


def _integral_scaling(W: WeierstrassModel) -> int:
    den = 1
    for a in W.coeffs:
        den = den * a.denominator // gcd(den, a.denominator)
    return 6 * den


def _kraus_ok(c4: int, c6: int, p: int, d: int) -> bool:
    """Whether (c4/p^4d, c6/p^6d) are the invariants of a model integral at p."""
    if c4 % p ** (4 * d) or c6 % p ** (6 * d):
        return False
    a, b = c4 // p ** (4 * d), c6 // p ** (6 * d)
    if p == 2:
        return b % 4 == 3 or (a % 16 == 0 and b % 32 in (0, 8))
    if p == 3:
        return b == 0 or valuation(b, 3) != 2
    return True


def minimal_model(E: WeierstrassModel) -> WeierstrassModel:
    """Global minimal model over Q in reduced form (Laska-Kraus-Connell)."""
    E = require_nonsingular(E)
    k = _integral_scaling(E)
    c4 = E.c4 * k ** 4
    c6 = E.c6 * k ** 6
    assert c4.denominator == 1 and c6.denominator == 1
    c4, c6 = c4.numerator, c6.numerator
    disc = (c4 ** 3 - c6 ** 2) // 1728
    g = gcd(c6 * c6, disc)
    u = 1
    for p, e in factor_integer(g):
        d = e // 12
        while d > 0 and not _kraus_ok(c4, c6, p, d):
            d -= 1
        u *= p ** d
    c4 //= u ** 4
    c6 //= u ** 6
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4 = (b2 * b2 - c4) // 24
    b6 = (-b2 ** 3 + 36 * b2 * b4 - c6) // 216
    a1 = b2 % 2
    a3 = b6 % 2
    a2 = (b2 - a1) // 4
    a4 = (b4 - a1 * a3) // 2
    a6 = (b6 - a3) // 4
    M = WeierstrassModel(a1, a2, a3, a4, a6)
    if M.c4 != c4 or M.c6 != c6:
        raise ArithmeticError_("minimal model reconstruction failed")
    return M


def reduction_type(E: WeierstrassModel, p: int) -> ReductionType:
    M = minimal_model(E)
    if M.disc.numerator % p:
        return ReductionType.GOOD
    if M.c4 != 0 and M.c4.numerator % p:
        return ReductionType.MULTIPLICATIVE
    return ReductionType.ADDITIVE


def additive_part(E: WeierstrassModel) -> int:
    """Product of the primes of additive reduction (gcd of minimal c4 and disc, radical-free)."""
    M = minimal_model(E)
    return gcd(int(M.c4), int(M.disc))


def is_semistable_outside(E: WeierstrassModel, n: int) -> bool:
    if n < 1:
        raise CurveError("n must be positive")
    g = additive_part(E)
    # strip every prime dividing n
    h = gcd(g, n)
    while h > 1:
        while g % h == 0:
            g //= h
        h = gcd(g, n)
    return g == 1


def bad_primes(E: WeierstrassModel):
    return [p for p, _ in factor_integer(int(minimal_model(E).disc))]


def parse_curve(text: str) -> WeierstrassModel:
    from .arith import parse_rational

    parts = [s for s in text.replace(" ", "").split(",")]
    if len(parts) not in (2, 5) or any(not s for s in parts):
        raise CurveError("expected 'A,B' or 'a1,a2,a3,a4,a6', got %r" % text)
    vals = [parse_rational(s) for s in parts]
    W = short(*vals) if len(vals) == 2 else WeierstrassModel(*vals)
    if W.disc == 0:
        raise SingularModel("singular curve: discriminant %s" % format_rational(W.disc))
    return W
