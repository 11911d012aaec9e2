"""Build the genus-zero family table from the Fricke parameterizations.

Each family is grown from one seed model of C_{n,k1}(t,1) by normalized isogenies
along the graph arrows: Velu formulas over Q(t) for 2- and 3-isogenies, and for
5-, 7-, 13-isogenies the Kohel codomain at sampled t followed by interpolation.

Usage: python3 tools/gen_families.py OUTDIR
"""
import itertools
import json
import os
import sys
from fractions import Fraction

import flint
import sympy as sp

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from fricke_table import FRICKE  # noqa: E402
import printed_tables as PT  # noqa: E402

T = sp.Symbol("t")
Q = flint.fmpq_poly
TP = Q([0, 1])


def F(v):
    return Fraction(int(v.p), int(v.q)) if isinstance(v, flint.fmpq) else Fraction(v)


def from_sympy(expr):
    p = sp.Poly(sp.expand(expr), T)
    return Q([flint.fmpq(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())])


def to_sympy(p):
    return sum(sp.Rational(int(c.p), int(c.q)) * T ** k for k, c in enumerate(p.coeffs()))


def ev(p, t):
    return F(p(flint.fmpq(t.numerator, t.denominator)))


def fricke(n, i):
    N, D = FRICKE[n][i - 1]
    return from_sympy(sp.sympify(N)), from_sympy(sp.sympify(D))


# ------------------------------------------------------------------ seeds


def seed_from_j(N, D):
    """Integral (A, B) over Q[t] with j = N/D and the least square-free twist factor."""
    N = sp.Poly(to_sympy(N), T)
    D = sp.Poly(to_sympy(D), T)
    M = N - 1728 * D
    cN, fN = sp.factor_list(N.as_expr(), T)
    cM, fM = sp.factor_list(M.as_expr(), T)
    cN, cM = sp.Rational(cN), sp.Rational(cM)
    kap = sp.Integer(1)
    primes = set(sp.factorint(abs(cN.p * cN.q))) | set(sp.factorint(abs(cM.p * cM.q))) | {2, 3}
    for p in primes:
        vN = sp.multiplicity(p, cN.p) - sp.multiplicity(p, cN.q)
        vM = sp.multiplicity(p, cM.p) - sp.multiplicity(p, cM.q)
        e = next(e for e in range(6) if (vN + e) % 3 == 0 and (vM + e) % 2 == 0)
        kap *= sp.Integer(p) ** e
    if cM < 0:
        kap = -kap
    c4 = sp.Rational(cN * kap)
    c4 = sp.sign(c4) * sp.Rational(sp.integer_nthroot(abs(c4.p), 3)[0], sp.integer_nthroot(c4.q, 3)[0])
    assert c4 ** 3 == cN * kap
    c6 = sp.sqrt(cM * kap)
    assert c6.is_Rational
    c4, c6, H = sp.Poly(c4, T), sp.Poly(c6, T), sp.Poly(kap, T)
    for f, a in fN:
        e = next(e for e in range(6) if (a + e) % 3 == 0 and e % 2 == 0)
        f = sp.Poly(f, T)
        H *= f ** e
        c4 *= f ** ((a + e) // 3)
        c6 *= f ** (e // 2)
    for f, a in fM:
        e = next(e for e in range(6) if (a + e) % 2 == 0 and e % 3 == 0)
        f = sp.Poly(f, T)
        H *= f ** e
        c6 *= f ** ((a + e) // 2)
        c4 *= f ** (e // 3)
    assert c4 ** 3 == N * H and c6 ** 2 == M * H
    A = from_sympy(-c4.as_expr() / 48)
    B = from_sympy(-c6.as_expr() / 864)
    return integral_scale(A, B)


def integral_scale(A, B):
    """Scale by the least constant u (A u^4, B u^6) giving integral, content-minimal coefficients."""
    cs = [(F(c), 4) for c in A.coeffs() if c != 0] + [(F(c), 6) for c in B.coeffs() if c != 0]
    primes = {2, 3}
    for c, _ in cs:
        primes |= set(sp.factorint(abs(c.numerator))) | set(sp.factorint(c.denominator))
    u = Fraction(1)
    for p in primes:
        e = max(-((sp.multiplicity(p, c.numerator) - sp.multiplicity(p, c.denominator)) // w) for c, w in cs)
        u *= Fraction(p) ** e
    return scale(A, B, u)


def scale(A, B, u):
    u = flint.fmpq(u.numerator, u.denominator)
    return A * u ** 4, B * u ** 6


def long_to_short(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    return c4 * flint.fmpq(-1, 48), c6 * flint.fmpq(-1, 864)


def f_model_short(n):
    a, b = Q([1]), TP
    if n == 6:
        m = (36 * a + 5 * b, 2 * b * (9 * a + b), 9 * b * (8 * a + b) * (9 * a + b), Q([0]), Q([0]))
    elif n == 9:
        m = (3 * (6 * a + b), Q([0]), (b - 3 * a) ** 3, Q([0]), Q([0]))
    else:
        raise ValueError(n)
    return long_to_short(*m)


def seed(n):
    k1 = PT.K_INDICES[n][0]
    if n == 4:
        # C_{4,4}: kernel x = -6t - 192 with v = 81 t^2 for the normalized map to C_{4,1}
        x0 = -6 * TP - 192
        A = 81 * TP ** 2 - 3 * x0 ** 2
        B = -x0 ** 3 - A * x0
        return k1, (A, B)
    if n in (6, 9):
        return k1, integral_scale(*f_model_short(n))
    return k1, seed_from_j(*fricke(n, 1))


# ------------------------------------------------------------ Q(t) helpers


def mpoly_roots(coeffs_in_x):
    """Roots in Q[t] of sum c_k(t) x^k (c_k fmpq_poly)."""
    den = 1
    for c in coeffs_in_x:
        for v in c.coeffs():
            den = den * int(v.q) // flint.fmpz(den).gcd(int(v.q))
    ctx = flint.fmpz_mpoly_ctx.get(("x", "t"), "lex")
    terms = {}
    for k, c in enumerate(coeffs_in_x):
        for m, v in enumerate(c.coeffs()):
            v = v * den
            if v != 0:
                terms[(k, m)] = int(v.p)
    f = ctx.from_dict(terms)
    _, facs = f.factor()
    out = []
    for g, _ in facs:
        if g.degrees()[0] != 1:
            continue
        d = g.to_dict()
        lead = [(m, c) for (k, m), c in d.items() if k == 1]
        if len(lead) != 1 or lead[0][0] != 0:
            continue
        c1 = lead[0][1]
        const = Q([0] * 1)
        for (k, m), c in d.items():
            if k == 0:
                const += Q([0] * m + [1]) * c
        out.append(-const / c1)
    return out


def kernels(E, ell):
    A, B = E
    if ell == 2:
        return mpoly_roots([B, A, Q([0]), Q([1])])
    return mpoly_roots([-A * A, 12 * B, 6 * A, Q([0]), Q([3])])


def velu(E, x0, ell):
    A, B = E
    if ell == 2:
        return -4 * A - 15 * x0 ** 2, B - 7 * x0 * (3 * x0 ** 2 + A)
    return -9 * A - 30 * x0 ** 2, -27 * B - 70 * x0 ** 3 - 42 * A * x0


def j_parts(E):
    A, B = E
    return 6912 * A ** 3, 4 * A ** 3 + 27 * B ** 2


def same_j(E1, E2):
    n1, d1 = j_parts(E1)
    n2, d2 = j_parts(E2)
    return n1 * d2 == n2 * d1


def j_is(E, N, D):
    n1, d1 = j_parts(E)
    return n1 * D == N * d1


def iso_qt(E1, E2):
    """Q(t)-isomorphism for j not identically 0 or 1728."""
    if not same_j(E1, E2):
        return False
    A1, B1 = E1
    A2, B2 = E2
    if A1 == 0 or A2 == 0 or B1 == 0 or B2 == 0:
        raise ValueError("family j-invariant is constant 0 or 1728")
    # u^2 = A1 B2 / (A2 B1) must be a square in Q(t)
    num, den = A1 * B2, A2 * B1
    return is_square_qt_pair(num, den)


def is_square_qt_pair(num, den):
    c, facs = (num * den).factor()
    c = F(c)
    if c <= 0:
        return False
    r1 = sp.integer_nthroot(c.numerator, 2)
    r2 = sp.integer_nthroot(c.denominator, 2)
    return r1[1] and r2[1] and all(e % 2 == 0 for _, e in facs)


# ------------------------------------------- higher degree, by sampling


def division_poly_at(A, B, ell):
    """psi_ell as fmpq_poly in x for odd ell (short model, rational A, B)."""
    x = Q([0, 1])
    fA, fB = flint.fmpq(A.numerator, A.denominator), flint.fmpq(B.numerator, B.denominator)
    f2 = 16 * (x ** 3 + fA * x + fB) ** 2
    # g_m = psi_m for odd m, psi_m / (2y) for even m
    g = {0: Q([0]), 1: Q([1]), 2: Q([1]),
         3: 3 * x ** 4 + 6 * fA * x ** 2 + 12 * fB * x - fA ** 2,
         4: 2 * (x ** 6 + 5 * fA * x ** 4 + 20 * fB * x ** 3 - 5 * fA ** 2 * x ** 2
                 - 4 * fA * fB * x - 8 * fB ** 2 - fA ** 3)}

    def get(m):
        if m not in g:
            k = m // 2
            if m % 2 == 0:
                g[m] = get(k) * (get(k + 2) * get(k - 1) ** 2 - get(k - 2) * get(k + 1) ** 2)
            elif k % 2 == 0:
                g[m] = f2 * get(k + 2) * get(k) ** 3 - get(k - 1) * get(k + 1) ** 3
            else:
                g[m] = get(k + 2) * get(k) ** 3 - f2 * get(k - 1) * get(k + 1) ** 3
        return g[m]

    return get(ell)


def kohel(A, B, D):
    """Normalized codomain for an odd-degree kernel polynomial D (monic, fmpq_poly)."""
    m = D.degree()
    c = [F(v) for v in D.coeffs()]
    s1 = -c[m - 1]
    s2 = c[m - 2] if m >= 2 else Fraction(0)
    s3 = -c[m - 3] if m >= 3 else Fraction(0)
    p1 = s1
    p2 = s1 * s1 - 2 * s2
    p3 = s1 ** 3 - 3 * s1 * s2 + 3 * s3
    tt = 6 * p2 + 2 * A * m
    w = 10 * p3 + 6 * A * p1 + 4 * B * m
    return A - 5 * tt, B - 7 * w


def jval(A, B):
    d = 4 * A ** 3 + 27 * B ** 2
    return 6912 * A ** 3 / d


def kernel_candidates(A, B, ell):
    psi = division_poly_at(A, B, ell)
    _, facs = psi.factor()
    m = (ell - 1) // 2
    small = [g / g.coeffs()[-1] for g, _ in facs if g.degree() <= m]
    out = []
    for r in range(1, len(small) + 1):
        for combo in itertools.combinations(small, r):
            if sum(g.degree() for g in combo) == m:
                D = Q([1])
                for g in combo:
                    D *= g
                out.append(D)
    return out


def sample_codomain(E, t, ell, accept):
    A, B = ev(E[0], t), ev(E[1], t)
    hits = []
    for D in kernel_candidates(A, B, ell):
        A2, B2 = kohel(A, B, D)
        if 4 * A2 ** 3 + 27 * B2 ** 2 == 0:
            continue
        if accept(t, jval(A2, B2)):
            hits.append((A2, B2))
    return hits


def interpolate(points):
    """Newton interpolation over Q; returns fmpq_poly."""
    xs = [p[0] for p in points]
    coef = [p[1] for p in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = Q([0])
    for i in range(n - 1, -1, -1):
        poly = poly * Q([-flint.fmpq(xs[i].numerator, xs[i].denominator), 1]) + flint.fmpq(coef[i].numerator, coef[i].denominator)
    return poly


def interpolated_codomain(E, ell, accept, bad):
    A, B = E
    deg = 2 * max(A.degree(), B.degree()) + 4
    ts = []
    pts = []
    cand = iter(range(1, 10 ** 6))
    while True:
        while len(pts) < deg + 8:
            k = next(cand)
            t = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
            if bad(t):
                continue
            hits = sample_codomain(E, t, ell, accept)
            if len(hits) != 1:
                continue
            ts.append(t)
            pts.append(hits[0])
        PA = interpolate([(t, a) for t, (a, _) in zip(ts[:deg + 1], pts)])
        PB = interpolate([(t, b) for t, (_, b) in zip(ts[:deg + 1], pts)])
        if all(ev(PA, t) == a and ev(PB, t) == b for t, (a, b) in zip(ts, pts)):
            return PA, PB
        deg *= 2


# ---------------------------------------------------------- the families


def build(n, phi=None, log=print):
    k1, k2 = PT.K_INDICES[n]
    N1, D1 = fricke(n, 1)
    N2, D2 = fricke(n, 2)
    m = PT.MEMBER_COUNT[n]
    arrows = PT.ARROWS[n]
    models = {k1: seed(n)[1]}
    assert j_is(models[k1], N1, D1), "seed j"

    def bad(t):
        return D1(flint.fmpq(t.numerator, t.denominator)) == 0 or D2(flint.fmpq(t.numerator, t.denominator)) == 0 or \
            any(4 * ev(E[0], t) ** 3 + 27 * ev(E[1], t) ** 2 == 0 for E in models.values())

    # arrows in breadth-first order from the seed member
    order = []
    frontier = [k1]
    seen = {k1}
    while frontier:
        k = frontier.pop(0)
        for a, b, ell in arrows:
            if a == k and b not in seen:
                order.append((a, b, ell))
                seen.add(b)
                frontier.append(b)
    assert len(seen) == m
    models = _assign(n, models, order, arrows, N2, D2, k2, phi, bad, log)
    exact = []
    # every arrow must be an exact normalized isogeny, up to a recorded constant scaling
    for a, b, ell in arrows:
        if ell > 3:
            ts = [Fraction(k) for k in range(2, 40) if not bad(Fraction(k))][:5]
            for t in ts:
                target = (ev(models[b][0], t), ev(models[b][1], t))
                assert target in sample_codomain(models[a], t, ell, lambda t, j: True), ("arrow", n, a, b, ell)
            exact.append((a, b, ell, "1"))
            continue
        cods = codomains(models[a], ell)
        u = None
        for E in cods:
            if iso_qt(E, models[b]):
                u = scaling(E, models[b])
                break
        assert u is not None, ("arrow", n, a, b, ell)
        exact.append((a, b, ell, str(u)))
    assert j_is(models[k1], N1, D1) and j_is(models[k2], N2, D2)
    for i, j_ in itertools.combinations(range(1, m + 1), 2):
        assert not iso_qt(models[i], models[j_]), ("iso members", n, i, j_)
    return models, exact


def scaling(E, target):
    """u with target = (u^4 A, u^6 B) for constant u, else the string 'poly'."""
    A1, B1 = E
    A2, B2 = target
    if A1 != 0:
        r = A2 / A1
        if r.degree() == 0:
            r4 = F(r.coeffs()[0])
            for s in (1, -1):
                num = sp.integer_nthroot(abs(r4.numerator), 4)
                den = sp.integer_nthroot(r4.denominator, 4)
                if num[1] and den[1] and r4 > 0:
                    u = Fraction(num[0], den[0]) * s
                    if B1 * flint.fmpq(u.numerator, u.denominator) ** 6 == B2:
                        return u
    return "poly"


def codomains(E, ell):
    return [velu(E, x0, ell) for x0 in kernels(E, ell)]


def _assign(n, models, order, arrows, N2, D2, k2, phi, bad, log):
    """Walk arrows from the seed; at ambiguous steps try every option, keep those passing pins."""

    def extend(models, idx):
        if idx == len(order):
            yield models
            return
        a, b, ell = order[idx]
        E = models[a]
        if ell in (2, 3):
            cands = [velu(E, x0, ell) for x0 in kernels(E, ell)]
        else:
            cands = [sampled(E, ell, b)]
        used = list(models.values())
        opts = [C for C in cands if not any(iso_qt(C, U) for U in used)]
        # drop duplicates among options
        uniq = []
        for C in opts:
            if not any(iso_qt(C, U) for U in uniq):
                uniq.append(C)
        for C in uniq:
            if b == k2 and not j_is(C, N2, D2):
                continue
            nm = dict(models)
            nm[b] = C
            yield from extend(nm, idx + 1)

    def sampled(E, ell, b):
        N2f, D2f = N2, D2
        if b == k2:
            def accept(t, j):
                return j == ev(N2f, t) / ev(D2f, t)
        else:
            def accept(t, j):
                return phi_zero(phi, ell, jval(ev(E[0], t), ev(E[1], t)), j) and \
                    all(jval(ev(U[0], t), ev(U[1], t)) != j for U in models.values())
        P = interpolated_codomain(E, ell, accept, bad)
        log("  level %d: %d-isogenous member %d interpolated (deg %d, %d)" % (n, ell, b, P[0].degree(), P[1].degree()))
        return P

    sols = []
    for M in extend(dict(models), 0):
        # graph check: every arrow realized
        ok = True
        for a, b, ell in arrows:
            if ell in (2, 3):
                cods = [velu(M[a], x0, ell) for x0 in kernels(M[a], ell)]
                if not any(iso_qt(C, M[b]) for C in cods):
                    ok = False
                    break
        if ok:
            sols.append(M)
    assert len(sols) == 1, ("labeling not unique", n, len(sols))
    return sols[0]


def phi_zero(phi, ell, j1, j2):
    P = phi[ell]
    s = Fraction(0)
    for (a, b), c in P.items():
        s += c * j1 ** a * j2 ** b
    return s == 0


def load_phi(path, ell):
    P = {}
    with open(os.path.join(path, "phi_j_%d.txt" % ell)) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            e, c = line.split()
            a, b = (int(v) for v in e.strip("[]").split(","))
            P[(a, b)] = int(c)
            P[(b, a)] = int(c)
    return P


def ints(p):
    out = []
    for v in p.coeffs():
        assert v.q == 1, "non-integral coefficient"
        out.append(str(int(v.p)))
    return out


def fricke_entries():
    out = []
    for n in PT.GENUS_ZERO:
        for i in (1, 2):
            N, D = fricke(n, i)
            out.append({"n": n, "i": i, "num": ints(N), "den": ints(D)})
    return out


def main():
    outdir = sys.argv[1]
    here = os.path.dirname(os.path.abspath(__file__))
    phidir = os.path.join(here, "..", "src", "isogeny_atlas", "data", "phi")
    phi = {ell: load_phi(phidir, ell) for ell in (2, 3, 5, 7, 13)}
    genus_zero = []
    scalings = {}
    for n in PT.GENUS_ZERO:
        print("level", n, flush=True)
        models, exact = build(n, phi)
        for i in sorted(models):
            A, B = models[i]
            genus_zero.append({"n": n, "i": i, "A": ints(A), "B": ints(B)})
        scalings[n] = [[a, b, ell, u] for a, b, ell, u in exact if u != "1"]
        print("  arrows:", exact, flush=True)
    sporadic = [{"n": n, "i": i + 1, "A": str(A), "B": str(B)}
                for n in PT.SPORADIC for i, (A, B) in enumerate(PT.SPORADIC_PAIRS[n])]
    graphs = [{"n": n, "edges": [list(e) for e in PT.ARROWS[n]], "matrix": PT.MATRICES[n]}
              for n in PT.GENUS_ZERO + PT.SPORADIC]
    levels = [{"n": n, "k": list(PT.K_INDICES[n]), "members": PT.MEMBER_COUNT[n],
               "rescaled_arrows": scalings[n]} for n in PT.GENUS_ZERO]
    with open(os.path.join(outdir, "families.json"), "w") as fh:
        json.dump({"genus_zero": genus_zero, "sporadic": sporadic, "graphs": graphs,
                   "levels": levels}, fh, indent=1)
        fh.write("\n")
    with open(os.path.join(outdir, "fricke_params.json"), "w") as fh:
        json.dump(fricke_entries(), fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
