"""Exact arithmetic substrate: rationals, polynomials, rational roots, factoring."""
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

Rational = Fraction


class ArithmeticError_(ValueError):
    pass


class FactorBudgetExceeded(ArithmeticError_):
    def __init__(self, n):
        super().__init__("factor budget exceeded (cofactor %d)" % n)
        self.n = n


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        if "/" in text:
            p, q = text.split("/")
            if not q.strip().lstrip("+-").isdigit():
                raise ValueError
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ValueError("malformed rational %r" % text) from None
    return value


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------- UniPoly


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Dense univariate polynomial with rational coefficients, c[k] on x^k."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "c", _strip(Fraction(x) for x in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, a):
        return cls([a])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    @property
    def lc(self) -> Fraction:
        return self.c[-1] if self.c else Fraction(0)

    def coeff(self, k) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                other = UniPoly([other])
            else:
                return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "UniPoly(%s)" % str(self)

    def __str__(self):
        return "[" + ", ".join(format_rational(x) for x in self.c) + "]"

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.c), len(other.c))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-x for x in self.c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            other = Fraction(other)
            return UniPoly(x * other for x in self.c)
        if not self.c or not other.c:
            return UniPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            f = rem[k] * inv
            if f:
                quot[k - dq] = f
                for j, b in enumerate(other.c):
                    rem[k - dq + j] -= f * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError_("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self):
        return UniPoly(k * self.c[k] for k in range(1, len(self.c)))

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def integer_coeffs(self) -> List[int]:
        """Primitive integer multiple with positive leading coefficient."""
        return primitive_part([x for x in self.c])

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.c)


def primitive_part(coeffs: Sequence) -> List[int]:
    coeffs = [Fraction(x) for x in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return [v // g for v in ints]


def _int_prs_gcd(a: List[int], b: List[int]) -> List[int]:
    """Primitive remainder sequence gcd of integer polynomials (primitive result)."""
    a, b = primitive_part(a), primitive_part(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            f = r[-1]
            r = [x * lb for x in r]
            shift = len(r) - 1 - db
            for j, c in enumerate(b):
                r[shift + j] -= f * c
            while r and r[-1] == 0:
                r.pop()
        a, b = b, primitive_part(r) if r else []
    return a


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    if p.is_zero() and q.is_zero():
        raise ArithmeticError_("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = _int_prs_gcd(p.integer_coeffs(), q.integer_coeffs())
    return UniPoly(g).monic()


# ------------------------------------------------------------- MultiPoly


class MultiPoly:
    """Sparse polynomial with integer coefficients in a fixed tuple of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Tuple[int, ...], int] = None):
        variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise ValueError("exponent arity mismatch")
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("MultiPoly coefficients must be integers")
                c = c.numerator
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def var(cls, variables, name):
        k = list(variables).index(name)
        exp = tuple(1 if i == k else 0 for i in range(len(variables)))
        return cls(variables, {exp: 1})

    @classmethod
    def const(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("variable mismatch")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        result, base = MultiPoly.const(self.vars, 1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        k = self.vars.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def ordered_terms(self):
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def evaluate(self, values: Sequence):
        values = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(values, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def swap(self, i=0, j=1):
        def sw(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)
        return MultiPoly(self.vars, {sw(e): c for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.ordered_terms():
            mono = "*".join(v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%d*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# ---------------------------------------------------------- rational roots

# a rational root survives reduction modulo every prime not dividing the leading
# coefficient; a few dozen primes reject almost every rootless Fricke fibre
_FILTER_PRIMES = tuple(p for p in range(3, 200) if all(p % k for k in range(2, int(p ** 0.5) + 1)))


def _eval_sign(c: List[int], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via homogeneous integer Horner."""
    acc = 0
    dpow = 1
    # sum c_k num^k den^(d-k), Horner in num with den powers
    for a in reversed(c):
        acc = acc * num + a * dpow
        dpow *= den
    # acc = sum c_k num^k den^(d-k) * den^0 ... (den^(d-k) builds up from the top)
    return (acc > 0) - (acc < 0)


def _eval_int(c: List[int], num: int, den: int) -> int:
    acc = 0
    dpow = 1
    for a in reversed(c):
        acc = acc * num + a * dpow
        dpow *= den
    return acc


def _has_root_mod(c: List[int], q: int) -> bool:
    """Whether c has a root in F_q (vectorized Horner over all residues)."""
    red = [a % q for a in c]
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for a in reversed(red):
        acc = (acc * xs + a) % q
    return bool((acc == 0).any())


def _sign_variations(c: List[int]) -> int:
    v, last = 0, 0
    for a in c:
        if a:
            s = 1 if a > 0 else -1
            if last and s != last:
                v += 1
            last = s
    return v


def _taylor_shift1(c: List[int]) -> List[int]:
    """Coefficients of p(x + 1)."""
    c = list(c)
    n = len(c)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            c[k] += c[k + 1]
    return c


def _positive_root_intervals(c: List[int]):
    """Isolating intervals (a, b) (Fractions, open) or exact roots for positive real roots.

    Descartes rule of signs with bisection (Vincent-Collins-Akritas), c squarefree
    with c[0] != 0.
    """
    d = len(c) - 1
    lc = abs(c[-1])
    bound = 1 + max(abs(Fraction(a, lc)) for a in c[:-1])
    k = max(0, int(bound).bit_length())
    B = 1 << k
    # q(x) = p(B x), roots of interest in (0, 1)
    q0 = [a * (B ** i) for i, a in enumerate(c)]
    out_intervals = []
    exact = []
    stack = [(q0, 0, 0)]  # polynomial in local variable, interval (c0/2^e, (c0+1)/2^e)
    while stack:
        q, c0, e = stack.pop()
        # variations of (x+1)^d q(1/(x+1))
        rev = list(reversed(q))
        v = _sign_variations(_taylor_shift1(rev))
        if v == 0:
            continue
        lo = Fraction(c0, 1 << e) * B
        hi = Fraction(c0 + 1, 1 << e) * B
        if v == 1:
            out_intervals.append((lo, hi))
            continue
        # midpoint test: q(1/2)
        half = [a * (1 << (d - i)) for i, a in enumerate(q)]  # 2^d q(x/2)
        mid_val = sum(half)  # 2^d q(1/2)
        if mid_val == 0:
            exact.append((lo + hi) / 2)
            # deflate by (2x - 1) on the left half representation is avoided:
            # neighbouring subintervals are open so the midpoint is excluded.
        left = half
        right = _taylor_shift1(half)  # 2^d q((x+1)/2)
        stack.append((left, 2 * c0, e + 1))
        stack.append((right, 2 * c0 + 1, e + 1))
    return out_intervals, exact


def _refine_and_reconstruct(c: List[int], lo: Fraction, hi: Fraction, L: int):
    """Return the rational root of c in (lo, hi) with denominator <= L, or None.

    The interval isolates exactly one real root.  Safeguarded Newton iteration
    keeps a sign-certified bracket; after each step the best rational with
    denominator <= L inside the bracket is tested exactly.  Once the bracket is
    narrower than 1/(2 L^2) at most one such rational can lie in it.
    """
    dc = [k * c[k] for k in range(1, len(c))]
    s_lo = _eval_sign(c, lo.numerator, lo.denominator)
    s_hi = _eval_sign(c, hi.numerator, hi.denominator)
    # an endpoint may itself be a (simple) root found elsewhere; use the sign just inside
    if s_lo == 0:
        s_lo = _eval_sign(dc, lo.numerator, lo.denominator)
    if s_hi == 0:
        s_hi = -_eval_sign(dc, hi.numerator, hi.denominator)
    target = Fraction(1, 2 * L * L)
    x = (lo + hi) / 2
    tried = set()
    while True:
        cand = x.limit_denominator(L)
        if lo < cand < hi and cand not in tried:
            tried.add(cand)
            if _eval_int(c, cand.numerator, cand.denominator) == 0:
                return cand
        if hi - lo < target:
            return None
        # working precision: a few dozen bits beyond the current bracket width
        width = hi - lo
        prec = max(128, 2 * (width.denominator.bit_length() - width.numerator.bit_length()) + 64)
        fx = _eval_int(c, x.numerator, x.denominator)
        dfx = _eval_int(dc, x.numerator, x.denominator) * x.denominator
        nx = None
        if fx == 0:
            return x if x.denominator <= L else None
        if dfx != 0:
            nx = x - Fraction(fx, dfx)
            nx = Fraction(round(nx * (1 << prec)), 1 << prec)
            if not lo < nx < hi:
                nx = None
        if nx is None:
            nx = (lo + hi) / 2
        s = _eval_sign(c, nx.numerator, nx.denominator)
        if s == 0:
            return nx if nx.denominator <= L else None
        if s == s_lo:
            lo = nx
        else:
            hi = nx
        # if Newton stalls on one side, bisect to keep the bracket shrinking
        if (hi - lo) * 2 > width:
            m = (lo + hi) / 2
            sm = _eval_sign(c, m.numerator, m.denominator)
            if sm == 0:
                return m if m.denominator <= L else None
            if sm == s_lo:
                lo = m
            else:
                hi = m
        x = nx if lo <= nx <= hi else (lo + hi) / 2


def _roots_mod(c: List[int], q: int) -> List[int]:
    red = [a % q for a in c]
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for a in reversed(red):
        acc = (acc * xs + a) % q
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _eval_mod(c: List[int], x: int, m: int) -> int:
    acc = 0
    for a in reversed(c):
        acc = (acc * x + a) % m
    return acc


def _rational_reconstruct(a: int, m: int, bound: int):
    """u/v with |u|, |v| <= bound and u = a v (mod m), assuming m > 2 bound^2."""
    r0, r1, s0, s1 = m, a % m, 0, 1
    while r1 > bound:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


_HENSEL_PRIMES = tuple(p for p in range(1009, 4000) if all(p % k for k in range(2, int(p ** 0.5) + 1)))


def _padic_roots(c: List[int]):
    """Rational roots via a root-simple prime, Hensel lifting and rational reconstruction.

    c is primitive with c[0] != 0 and degree >= 2.  Every rational root u/v has
    |u| <= |c[0]| and v <= |lc|, and reduces to a simple root mod q, so lifting each
    simple root past 2 B^2 recovers it.  Returns None if no suitable prime is found
    (e.g. c has a repeated factor)."""
    lc, c0 = c[-1], c[0]
    B = max(abs(lc), abs(c0))
    dc = [k * c[k] for k in range(1, len(c))]
    for q in _HENSEL_PRIMES[:12]:
        if lc % q == 0:
            continue
        rs = _roots_mod(c, q)
        if not rs:
            return []
        if any(_eval_mod(dc, r, q) == 0 for r in rs):
            continue
        out = []
        for r in rs:
            m = q
            while m <= 2 * B * B:
                m = m * m
                fr, dfr = _eval_mod(c, r, m), _eval_mod(dc, r, m)
                r = (r - fr * pow(dfr, -1, m)) % m
            cand = _rational_reconstruct(r, m, B)
            if cand is not None and _eval_int(c, cand.numerator, cand.denominator) == 0:
                out.append(cand)
        return out
    return None


def _real_roots(c: List[int]) -> List[Fraction]:
    """Rational roots via real root isolation and continued-fraction reconstruction."""
    roots = set()
    dc = [k * c[k] for k in range(1, len(c))]
    g = _int_prs_gcd(c, dc)
    if len(g) > 1:
        sq = UniPoly(c).exact_div(UniPoly(g)).integer_coeffs()
    else:
        sq = c
    L = abs(sq[-1])
    for sign in (1, -1):
        cc = [a * (sign ** k) for k, a in enumerate(sq)]
        if cc[-1] < 0:
            cc = [-a for a in cc]
        intervals, exact = _positive_root_intervals(cc)
        for r in exact:
            roots.add(sign * r)
        for lo, hi in intervals:
            r = _refine_and_reconstruct(cc, lo, hi, L)
            if r is not None:
                roots.add(sign * r)
    return [r for r in roots if _eval_int(c, r.numerator, r.denominator) == 0]


def rational_roots(p, method: str = "auto") -> List[Fraction]:
    """All rational roots of a nonzero polynomial, sorted by (numerator, denominator).

    method "real" isolates real roots and reconstructs by continued fractions;
    "padic" lifts simple roots modulo a prime; "auto" tries the p-adic route and
    falls back to the real one.  Every reported root is verified exactly."""
    if isinstance(p, UniPoly):
        c = p.integer_coeffs()
    else:
        c = primitive_part(p)
    if not c:
        raise ArithmeticError_("infinite root set")
    roots = set()
    if c[0] == 0:
        roots.add(Fraction(0))
        while c and c[0] == 0:
            c = c[1:]
    if len(c) == 2:
        roots.add(Fraction(-c[0], c[1]))
    elif len(c) > 2:
        lc = c[-1]
        # a rational root u/v (v | lc) survives reduction mod any prime not dividing lc
        if all(lc % q == 0 or _has_root_mod(c, q) for q in _FILTER_PRIMES[:20]):
            found = _padic_roots(c) if method in ("auto", "padic") else None
            if found is None and method == "padic":
                # repeated factors: lift on the squarefree part instead
                g = _int_prs_gcd(c, [k * c[k] for k in range(1, len(c))])
                sq = UniPoly(c).exact_div(UniPoly(g)).integer_coeffs()
                found = _padic_roots(sq) if len(sq) > 2 else [Fraction(-sq[0], sq[1])]
                if found is None:
                    raise ArithmeticError_("no root-simple prime found")
            if found is None:
                found = _real_roots(c)
            roots.update(found)
    return sorted(roots, key=lambda r: (r.numerator, r.denominator))


# --------------------------------------------------------------- integers


@lru_cache(maxsize=1)
def _small_primes(limit=10 ** 6):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


def _miller_rabin(n, bases):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n):
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # compute U_d, V_d by binary method
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24 (Miller-Rabin, 13 bases); BPSW above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    if not _miller_rabin(n, bases):
        return False
    if n < 3317044064679887385961981:
        return True
    return _strong_lucas(n)


def _rho(n, budget):
    """Brent's variant of Pollard rho; returns (factor, iterations used)."""
    used = 0
    for c in range(1, 100):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            used += r
            r *= 2
            if used > budget:
                raise FactorBudgetExceeded(n)
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g, used
    raise FactorBudgetExceeded(n)


DEFAULT_FACTOR_BUDGET = 10 ** 8


def factor_integer(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> List[Tuple[int, int]]:
    """Prime factorization of |n| as sorted (prime, exponent) pairs."""
    n = abs(int(n))
    if n == 0:
        raise ArithmeticError_("cannot factor zero")
    found: Dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            pending += [r, r]
            continue
        f, used = _rho(m, budget)
        budget -= used
        pending += [f, m // f]
    return sorted(found.items())


def squarefree_part(q) -> int:
    q = Fraction(q)
    if q == 0:
        raise ArithmeticError_("squarefree part of zero")
    m = abs(q.numerator) * q.denominator
    s = 1
    for p, e in factor_integer(m):
        if e % 2:
            s *= p
    return s if q > 0 else -s


def power_free_part(q, k: int) -> Fraction:
    """Representative of q modulo k-th powers: integer, k-th-power-free, same sign when k even."""
    q = Fraction(q)
    if q == 0:
        raise ArithmeticError_("power-free part of zero")
    # q = num/den ~ num * den^(k-1)
    m = abs(q.numerator) * q.denominator ** (k - 1)
    s = 1
    for p, e in factor_integer(m):
        s *= p ** (e % k)
    return Fraction(s if q > 0 else -s)


def integer_root(n: int, k: int):
    """Exact k-th root of an integer, or None."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    # start above the root so the Newton iteration decreases monotonically
    r = 1 << (n.bit_length() // k + 1)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


def rational_root_exact(q, k: int):
    """Exact rational k-th root of q, or None."""
    q = Fraction(q)
    a = integer_root(q.numerator, k)
    b = integer_root(q.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    n = Fraction(n)
    if n == 0:
        raise ArithmeticError_("valuation of zero")
    v = 0
    a, b = n.numerator, n.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v
