"""Cofactors mu, nu with mu*alpha_n + nu*gamma_n = c * a^e (and likewise b^e).

alpha_n, gamma_n are homogeneous in (a, b), so the identity is a linear system in
the coefficients of homogeneous mu, nu. The system has a unique rational solution,
so the least c admitting an integral one is the common denominator.

Usage: python3 tools/gen_bezout.py OUTDIR
"""
import json
import os
import sys

import sympy as sp

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import printed_tables as PT  # noqa: E402

a, b = sp.symbols("a b")

ALPHA_GAMMA = {
    4: (16 * (256 * a ** 2 + 16 * a * b + b ** 2), 4096 * a ** 2 * b ** 2 * (16 * a + b) ** 2),
    6: (9 * (12 * a + b) * (15552 * a ** 3 + 3888 * a ** 2 * b + 252 * a * b ** 2 + b ** 3),
        729 * a * b ** 6 * (8 * a + b) ** 2 * (9 * a + b) ** 3),
    9: (9 * (6 * a + b) * (2160 * a ** 3 + 756 * a ** 2 * b + 234 * a * b ** 2 + b ** 3),
        729 * a * (-3 * a + b) ** 9 * (9 * a ** 2 + 3 * a * b + b ** 2)),
}


def hcoeffs(expr, deg):
    """Coefficients of a homogeneous form, index k = exponent of a."""
    p = sp.Poly(sp.expand(expr), a, b)
    out = [0] * (deg + 1)
    for (i, j), c in p.terms():
        assert i + j == deg
        out[i] = int(c)
    return out


def witness(n, target):
    alpha, gamma = ALPHA_GAMMA[n]
    _, e = PT.BEZOUT_CONSTANTS[n]
    da, dg = 4 if n != 4 else 2, 12 if n != 4 else 6
    ca, cg = hcoeffs(alpha, da), hcoeffs(gamma, dg)
    nm, nn = e - da + 1, e - dg + 1
    # columns: mu_k * a^k b^(e-da-k) * alpha, then nu_k likewise; rows: exponent of a in the product
    cols = []
    for k in range(nm):
        col = [0] * (e + 1)
        for i, c in enumerate(ca):
            col[i + k] += c
        cols.append(col)
    for k in range(nn):
        col = [0] * (e + 1)
        for i, c in enumerate(cg):
            col[i + k] += c
        cols.append(col)
    M = sp.Matrix(cols).T  # (e+1) x (nm+nn)
    row = e if target == "a" else 0
    rhs = sp.zeros(e + 1, 1)
    rhs[row] = 1
    sol, params = M.gauss_jordan_solve(rhs)
    assert not params, "underdetermined system"
    den = sp.ilcm(*[sp.fraction(sp.Rational(v))[1] for v in sol])
    vec = [int(v * den) for v in sol]
    c = int(den)
    mu = [(k, e - da - k, vec[k]) for k in range(nm) if vec[k]]
    nu = [(k, e - dg - k, vec[nm + k]) for k in range(nn) if vec[nm + k]]
    # exact re-check in Z[a,b]
    mue = sum(cf * a ** i * b ** j for i, j, cf in mu)
    nue = sum(cf * a ** i * b ** j for i, j, cf in nu)
    mono = a ** e if target == "a" else b ** e
    assert sp.expand(mue * alpha + nue * gamma - c * mono) == 0
    assert PT.BEZOUT_CONSTANTS[n][0] % c == 0, (n, target, c)
    return {"target": target, "exponent": e,
            "mu": [[[i, j], str(cf)] for i, j, cf in mu],
            "nu": [[[i, j], str(cf)] for i, j, cf in nu],
            "constant": str(c)}


def main():
    outdir = sys.argv[1]
    for n in (4, 6, 9):
        ws = [witness(n, "a"), witness(n, "b")]
        print(n, [w["constant"] for w in ws], [sp.factorint(int(w["constant"])) for w in ws])
        with open(os.path.join(outdir, "bezout_%d.json" % n), "w") as fh:
            json.dump(ws, fh, indent=1)
            fh.write("\n")


if __name__ == "__main__":
    main()
