"""Build-time generator for the classical modular polynomials Phi_l(X, Y).

Works from the q-expansion of j.  The l+1 roots of Phi_l(X, j(q)) are j(q^l)
and j(zeta^k q^(1/l)); their power sums are modular functions whose
q-expansions are computed exactly, converted to elementary symmetric
functions by Newton's identities and then rewritten as polynomials in j.

Usage: python3 tools/gen_phi.py OUTDIR 2 3 5 7 13
"""
import sys
import time
from pathlib import Path

from flint import fmpz_poly


def qj_series(prec):
    """Coefficients of q*j(q) up to q^prec (inclusive)."""
    n = prec + 1
    sigma3 = [0] * n
    for d in range(1, n):
        d3 = d ** 3
        for m in range(d, n, d):
            sigma3[m] += d3
    e4 = fmpz_poly([1] + [240 * sigma3[k] for k in range(1, n)])
    # eta^24 / q = prod (1 - q^k)^24, via the pentagonal product for prod(1-q^k)
    eta = [0] * n
    k = 0
    while True:
        done = True
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g < n:
                eta[g] = (-1) ** k
                done = False
        if done:
            break
        k += 1
    eta = fmpz_poly(eta)
    delta = _pow_trunc(eta, 24, n)
    inv = _inverse_trunc(delta, n)
    return _trunc(_trunc(e4 * e4, n) * e4, n) * inv, n


def _trunc(p, n):
    c = p.coeffs()[:n]
    return fmpz_poly(c)


def _pow_trunc(p, e, n):
    result = fmpz_poly([1])
    base = p
    while e:
        if e & 1:
            result = _trunc(result * base, n)
        e >>= 1
        if e:
            base = _trunc(base * base, n)
    return result


def _inverse_trunc(p, n):
    # Newton iteration, constant term 1
    inv = fmpz_poly([1])
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        inv = _trunc(inv * _trunc(2 - _trunc(p, prec) * inv, prec), prec)
    return inv


def coeff(p, k):
    c = p.coeffs()
    return int(c[k]) if 0 <= k < len(c) else 0


def modular_polynomial(l):
    P = l * (l + 1) + l + 1           # q-precision needed for the symmetric functions
    N = l * P + l + 2                 # precision of q*j for the 1/l side
    f, _ = qj_series(N)
    f = _trunc(f, N + 1)
    # j^i = q^-i * f^i ; keep f^i up to q^(l*P + i)
    fpow = [fmpz_poly([1])]
    for i in range(1, l + 2):
        fpow.append(_trunc(fpow[-1] * f, l * P + i + 1))

    def laurent_jpow_at(i, e):
        # coefficient of q^e in j^i
        return coeff(fpow[i], e + i)

    # power sums p_i as Laurent series: dict offset -> list of coefficients from q^-l*i to q^P
    power_sums = []
    for i in range(1, l + 2):
        lo = -l * i
        vals = []
        for e in range(lo, P + 1):
            s = 0
            if e % l == 0:
                s += laurent_jpow_at(i, e // l)
            s += l * laurent_jpow_at(i, l * e)
            vals.append(s)
        power_sums.append((lo, vals))

    # elementary symmetric functions via Newton, as Laurent series truncated at q^P
    def mul(a, b):
        (la, va), (lb, vb) = a, b
        pa = fmpz_poly(va)
        pb = fmpz_poly(vb)
        lo = la + lb
        keep = P - lo + 1
        c = (pa * pb).coeffs()[:keep]
        return lo, [int(x) for x in c] + [0] * (keep - len(c))

    def add_scaled(acc, term, s):
        (la, va), (lt, vt) = acc, term
        lo = min(la, lt)
        out = [0] * (P - lo + 1)
        for k, x in enumerate(va):
            out[la - lo + k] += x
        for k, x in enumerate(vt):
            out[lt - lo + k] += s * x
        return lo, out

    elem = [(0, [1] + [0] * P)]
    for m in range(1, l + 2):
        acc = (0, [0] * (P + 1))
        for i in range(1, m + 1):
            sign = 1 if i % 2 == 1 else -1
            acc = add_scaled(acc, mul(elem[m - i], power_sums[i - 1]), sign)
        lo, vals = acc
        # only terms up to q^(P - l*m) are exact after truncation
        exact = P - l * m - lo + 1
        assert all(v % m == 0 for v in vals[:exact])
        elem.append((lo, [v // m for v in vals[:exact]] + [0] * (len(vals) - exact)))

    # rewrite each e_m (pole order <= l+1) as a polynomial in j
    jpows = []
    for k in range(l + 2):
        jpows.append([laurent_jpow_at(k, e) for e in range(-k, 1)])  # q^-k .. q^0

    phi = {}
    for m in range(l + 2):
        lo, vals = elem[m]
        series = {lo + k: v for k, v in enumerate(vals) if lo + k <= 0}
        poly = [0] * (l + 2)
        for k in range(l + 1, 0, -1):
            c = series.get(-k, 0)
            if c:
                poly[k] = c
                for idx, v in enumerate(jpows[k]):
                    e = -k + idx
                    series[e] = series.get(e, 0) - c * v
        poly[0] = series.get(0, 0)
        for e, v in series.items():
            if e < 0:
                assert v == 0, (l, m, e)
        sign = -1 if m % 2 else 1
        for b, c in enumerate(poly):
            if c:
                phi[(l + 1 - m, b)] = phi.get((l + 1 - m, b), 0) + sign * c
    for (a, b), c in phi.items():
        assert phi.get((b, a)) == c, "not symmetric"
    return phi


def write(phi, path):
    lines = []
    for (a, b) in sorted(phi, reverse=True):
        if a >= b:
            lines.append("[%d,%d] %d" % (a, b, phi[(a, b)]))
    Path(path).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    for arg in sys.argv[2:]:
        l = int(arg)
        t0 = time.time()
        phi = modular_polynomial(l)
        write(phi, out / ("phi_j_%d.txt" % l))
        print(l, len(phi), "terms", round(time.time() - t0, 1), "s")
