"""Named, individually runnable checks reproducing the computer-verified claims."""
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

from .arith import UniPoly, poly_gcd
from .classify import bfs_cross_oracle, isogeny_class
from .curves import is_isomorphic, short
from .families import (
    GENUS_ZERO_LEVELS,
    SPORADIC_LEVELS,
    FamilyError,
    family_curve,
    genus_zero_family,
    graph_data,
    k_indices,
    member_count,
    sporadic_curve,
    subclasses,
)
from .fricke import exceptional_params, fricke_eval, fricke_param, fricke_solve
from .oracle import PhiUnavailable, isogeny_from_kernel, kernel_polynomial, load_modular_polynomial, rational_kernels
from .semistable import LEVELS as F_LEVELS
from .semistable import alpha_gamma, derive_bezout, gcd_bound_check, verify_lemma41

DEFAULT_SAMPLES = 50
DEFAULT_SEED = 7


@dataclass
class CheckReport:
    name: str
    status: str
    samples: int
    seed: int
    elapsed: float = 0.0
    counterexample: Optional[str] = None
    details: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self, timing: bool = False) -> Dict:
        out = {"name": self.name, "status": self.status, "samples": self.samples, "seed": self.seed,
               "counterexample": self.counterexample,
               "details": [{"item": k, "status": v} for k, v in self.details]}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


class _Outcome:
    """Collects per-item statuses; the first failure becomes the counterexample."""

    def __init__(self):
        self.details: List[Tuple[str, str]] = []
        self.counterexample: Optional[str] = None
        self.count = 0

    def item(self, label: str, ok: bool, witness: str = ""):
        self.count += 1
        if not ok and self.counterexample is None:
            self.counterexample = "%s: %s" % (label, witness) if witness else label
        return ok

    def group(self, label: str, status: str):
        self.details.append((label, status))

    def status(self) -> str:
        if self.counterexample is not None:
            return "fail"
        skipped = [k for k, v in self.details if v.startswith("skipped")]
        if skipped:
            reasons = sorted({v[len("skipped("):-1] for k, v in self.details if v.startswith("skipped")},
                             key=lambda s: (len(s), s))
            return "skipped(%s)" % "; ".join(reasons)
        return "pass"


def _rand_t(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-300, 300), rng.randint(1, 60))


def _rand_d(rng: random.Random) -> int:
    while True:
        d = rng.randint(-40, 40)
        if d and all(d % (p * p) for p in (2, 3, 5)):
            return d


def _admissible(rng, n, tries=1000):
    for _ in range(tries):
        t, d = _rand_t(rng), _rand_d(rng)
        try:
            return t, d, [family_curve(n, i, t, d) for i in range(1, member_count(n) + 1)]
        except FamilyError:
            continue
    raise RuntimeError("no admissible parameter found for level %d" % n)


# ------------------------------------------------------------------ checks


def check_prop31_j(samples, rng):
    """j(C_{n,k_i}(t,d)) = j_{n,i}(t) as rational functions, at degree bound + 1 points."""
    out = _Outcome()
    for n in GENUS_ZERO_LEVELS:
        ok_level = True
        for side, k in zip((1, 2), k_indices(n)):
            num, den = genus_zero_family(n, k).j_parts()
            F = fricke_param(n, side)
            # 6912 A^3 * den_F - num_F * (4 A^3 + 27 B^2) vanishes identically
            bound = max(num.degree + F.den_poly.degree, F.num_poly.degree + den.degree)
            for t in range(bound + 1):
                lhs = num(t) * F.den_poly(t)
                rhs = F.num_poly(t) * den(t)
                if not out.item("n=%d i=%d (member %d)" % (n, side, k), lhs == rhs, "t=%d" % t):
                    ok_level = False
                    break
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def check_prop31_noniso(samples, rng):
    """Members of each genus-zero family have pairwise distinct j-functions in Q(t)."""
    out = _Outcome()
    for n in GENUS_ZERO_LEVELS:
        m = member_count(n)
        parts = [genus_zero_family(n, i).j_parts() for i in range(1, m + 1)]
        ok_level = True
        for a in range(m):
            for b in range(a + 1, m):
                distinct = parts[a][0] * parts[b][1] != parts[b][0] * parts[a][1]
                ok_level &= out.item("n=%d members %d,%d" % (n, a + 1, b + 1), distinct, "equal j")
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def _phi_or_none(ell):
    try:
        return load_modular_polynomial(ell)
    except PhiUnavailable:
        return None


def check_prop31_edges(samples, rng):
    """Every prime edge of every genus-zero graph vanishes under the modular polynomial."""
    out = _Outcome()
    count = max(1, samples // 2)
    for n in GENUS_ZERO_LEVELS:
        g = graph_data(n)
        ok_level, missing = True, set()
        draws = [_admissible(rng, n) for _ in range(count)]
        for i, k, ell in g.edges:
            Phi = _phi_or_none(ell)
            if Phi is None:
                missing.add(ell)
                continue
            for t, d, models in draws:
                ok = Phi(models[i - 1].j, models[k - 1].j) == 0
                if not out.item("n=%d edge %d-%d (l=%d)" % (n, i, k, ell), ok, "t=%s d=%s" % (t, d)):
                    ok_level = False
                    break
        status = "pass" if ok_level else "fail"
        if ok_level and missing:
            status = "skipped(phi data unavailable (level %s))" % ",".join(map(str, sorted(missing)))
        out.group("n=%d" % n, status)
    return out


def check_lemma33(samples, rng):
    """Singular fibres: rational members listed exactly, j values 0 or 1728 on both sides,
    and every singular parameter of every member is a cusp or lies in the listed set."""
    out = _Outcome()
    expected = {2: [-64], 3: [-27]}
    for n in GENUS_ZERO_LEVELS:
        ok_level = True
        S = exceptional_params(n, "singular_family")
        members = S.rational_members()
        ok_level &= out.item("n=%d rational members" % n, members == [Fraction(x) for x in expected.get(n, [])],
                             str(members))
        for factor, j in S.j_values():
            for side in (1, 2):
                F = fricke_param(n, side)
                r = (F.num_poly - j * F.den_poly) % factor
                ok_level &= out.item("n=%d j_%d on %s" % (n, side, factor), r.is_zero(), "j != %d" % j)
        for t in members:
            a, b = fricke_eval(n, 1, t), fricke_eval(n, 2, t)
            ok_level &= out.item("n=%d t=%s" % (n, t), a == b and a in (0, 1728), "%s, %s" % (a, b))
        # completeness: discriminants only vanish at cusps and on the listed factors
        allowed = fricke_param(n, 1).den_poly * fricke_param(n, 2).den_poly * S.poly
        for i in range(1, member_count(n) + 1):
            disc = genus_zero_family(n, i).j_parts()[1]
            rest = disc
            while rest.degree > 0:
                g = poly_gcd(rest, allowed)
                if g.degree == 0:
                    break
                rest = rest.exact_div(g)
            ok_level &= out.item("n=%d member %d discriminant" % (n, i), rest.degree == 0,
                                 "unexplained factor %s" % rest)
        # coincidences j_{n,1}(t) = j_{n,2}(t) in {0, 1728}
        C = exceptional_params(n, "coincidence_0_1728").rational_members()
        found = sorted({t for v in (0, 1728) for t in fricke_solve(n, v)
                        if fricke_eval(n, 2, t) == v})
        ok_level &= out.item("n=%d coincidence set" % n, found == C, "%s vs %s" % (found, C))
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def check_lemma44(samples, rng):
    """For n in {4, 6, 9}: j_{n,1}(t) and j_{n,2}(t) are never both in {0, 1728}."""
    out = _Outcome()
    for n in (4, 6, 9):
        ok_level = True
        for side in (1, 2):
            for v in (0, 1728):
                for t in fricke_solve(n, v, side):
                    other = fricke_eval(n, 3 - side, t)
                    ok_level &= out.item("n=%d t=%s" % (n, t), other not in (0, 1728), "both special")
        for _ in range(samples):
            t = _rand_t(rng)
            try:
                a, b = fricke_eval(n, 1, t), fricke_eval(n, 2, t)
            except ValueError:
                continue
            ok_level &= out.item("n=%d t=%s" % (n, t), not (a in (0, 1728) and b in (0, 1728)))
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def check_lemma53(samples, rng):
    """Members C_{n,i}(t,d) are pairwise non-isomorphic over Q at sampled (t, d)."""
    out = _Outcome()
    for n in GENUS_ZERO_LEVELS:
        ok_level = True
        for _ in range(samples):
            t, d, models = _admissible(rng, n)
            for a in range(len(models)):
                for b in range(a + 1, len(models)):
                    ok = is_isomorphic(models[a], models[b]) is None
                    ok_level &= out.item("n=%d t=%s d=%s members %d,%d" % (n, t, d, a + 1, b + 1), ok)
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def _rand_ab(rng, lim=10 ** 6):
    while True:
        a, b = rng.randint(-lim, lim), rng.randint(-lim, lim)
        if gcd(a, b) == 1:
            return a, b


def check_lemma41(samples, rng):
    """c4 and disc of F_n(a,b) equal alpha_n and gamma_n (samples exceed the degree bound)."""
    out = _Outcome()
    count = max(samples, 16)
    for n in F_LEVELS:
        ok_level, done = True, 0
        while done < count:
            a, b = _rand_ab(rng)
            if alpha_gamma(n, a, b)[1] == 0:
                continue
            done += 1
            ok_level &= out.item("n=%d (a,b)=(%d,%d)" % (n, a, b), verify_lemma41(n, a, b))
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def check_lemma42_gcd(samples, rng):
    """gcd(alpha_n, gamma_n) divides c_n for coprime (a, b); Bezout witnesses re-verify."""
    out = _Outcome()
    for n in F_LEVELS:
        ok_level = True
        try:
            derive_bezout(n)
            derive_bezout(n, recompute=True)
        except ValueError as e:
            ok_level = out.item("n=%d Bezout" % n, False, str(e))
        for _ in range(samples * 20):
            a, b = _rand_ab(rng, 10 ** 4)
            ok_level &= out.item("n=%d (a,b)=(%d,%d)" % (n, a, b), gcd_bound_check(n, a, b))
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    return out


def check_phi_compat(samples, rng):
    """Phi_n(j_{n,1}(t), j_{n,2}(t)) = 0 where Phi_n is available; sporadic edges likewise."""
    out = _Outcome()
    for n in GENUS_ZERO_LEVELS:
        Phi = _phi_or_none(n)
        if Phi is None:
            out.group("n=%d" % n, "skipped(phi data unavailable (level %d))" % n)
            continue
        ok_level, done = True, 0
        while done < samples:
            t = _rand_t(rng)
            try:
                a, b = fricke_eval(n, 1, t), fricke_eval(n, 2, t)
            except ValueError:
                continue
            done += 1
            ok_level &= out.item("n=%d t=%s" % (n, t), Phi(a, b) == 0)
        out.group("n=%d" % n, "pass" if ok_level else "fail")
    for n in SPORADIC_LEVELS:
        for group in subclasses(n):
            relabel = {k + 1: m for k, m in enumerate(group)}
            for i, k, ell in graph_data(n).edges:
                if len(group) < member_count(n):
                    i, k = relabel[i], relabel[k]
                label = "sporadic n=%d edge %d-%d (l=%d)" % (n, i, k, ell)
                Phi = _phi_or_none(ell)
                if Phi is None:
                    out.group(label, "skipped(phi data unavailable (level %d))" % ell)
                    continue
                ok = Phi(sporadic_curve(n, i, 1).j, sporadic_curve(n, k, 1).j) == 0
                out.item(label, ok)
                out.group(label, "pass" if ok else "fail")
    return out


HAND_CURVES = [
    (-15, -22), (0, 16), (1, 1), (-1, 0), (4, 0), (0, 1), (2, 0), (0, 5), (-11, 14),
    (-2, 1), (-432, 8208), (-27, 8694), (-1, 1), (0, -432), (-4, 0),
    (-35, 98), (-3267, 45630), (-27, -10), (0, -2), (-13392, -1080432),
]


def check_oracle_agreement(samples, rng):
    """Breadth-first closure (kernel isogenies, Fricke preimages, sporadic matches)
    agrees with the table-driven class; kernel codomains match j_{l,2}."""
    out = _Outcome()
    corpus = [short(A, B) for A, B in HAND_CURVES]
    for _ in range(samples):
        n = rng.choice(GENUS_ZERO_LEVELS)
        t, d, models = _admissible(rng, n)
        corpus.append(rng.choice(models))
    ok_all = True
    for E in corpus:
        cls = isogeny_class(E)
        bfs = bfs_cross_oracle(E)
        ok = bfs.j_values() == cls.j_values() and bfs.edge_labels() == cls.edge_labels()
        ok_all &= out.item("curve %s" % E.text(), ok,
                           "bfs %d nodes vs class n=%d" % (len(bfs.nodes), cls.n))
    out.group("classes", "pass" if ok_all else "fail")
    for ell in (2, 3):
        ok_ell, done = True, 0
        while done < samples:
            t, d = _rand_t(rng), _rand_d(rng)
            try:
                E = family_curve(ell, 1, t, d)
            except FamilyError:
                continue
            done += 1
            target = fricke_eval(ell, 2, t)
            cods = [isogeny_from_kernel(E, kernel_polynomial(E, x0, ell)).codomain.j
                    for x0 in rational_kernels(E, ell)]
            ok_ell &= out.item("kernel l=%d t=%s d=%s" % (ell, t, d), target in cods)
        out.group("kernel l=%d" % ell, "pass" if ok_ell else "fail")
    return out


CHECKS: Dict[str, Tuple[str, Callable]] = {
    "prop31_j": ("j of the distinguished members equals the Fricke parameterization", check_prop31_j),
    "prop31_noniso": ("family members are pairwise non-isomorphic over Q(t)", check_prop31_noniso),
    "prop31_edges": ("family graph edges are isogenies (modular polynomial test)", check_prop31_edges),
    "lemma33": ("singular fibres and 0/1728 coincidences of the families", check_lemma33),
    "lemma44": ("n in {4,6,9}: isogenous j values are not both 0 or 1728", check_lemma44),
    "lemma53": ("members are pairwise non-isomorphic over Q at sampled parameters", check_lemma53),
    "lemma41": ("F_n(a,b) has c4 = alpha_n and disc = gamma_n", check_lemma41),
    "lemma42_gcd": ("gcd(alpha_n, gamma_n) divides the Bezout constant", check_lemma42_gcd),
    "phi_compat": ("modular polynomial vanishes on Fricke pairs and sporadic edges", check_phi_compat),
    "oracle_agreement": ("independent breadth-first closure agrees with the classification", check_oracle_agreement),
}


def run_check(name: str, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CheckReport:
    if name not in CHECKS:
        raise KeyError("unknown check %r (known: %s)" % (name, ", ".join(CHECKS)))
    rng = random.Random("%s:%d" % (name, seed))
    start = time.perf_counter()
    out = CHECKS[name][1](samples, rng)
    elapsed = time.perf_counter() - start
    return CheckReport(name, out.status(), out.count, seed, elapsed, out.counterexample, out.details)


def run_all(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> List[CheckReport]:
    return [run_check(name, samples, seed) for name in sorted(CHECKS)]


def header() -> str:
    width = max(len(k) for k in CHECKS)
    lines = ["check".ljust(width) + "  claim"]
    for name in sorted(CHECKS):
        lines.append(name.ljust(width) + "  " + CHECKS[name][0])
    return "\n".join(lines)


def table(reports: List[CheckReport]) -> str:
    width = max(len(r.name) for r in reports)
    lines = ["%s  %-8s  %s" % ("check".ljust(width), "items", "status")]
    for r in reports:
        lines.append("%s  %-8d  %s" % (r.name.ljust(width), r.samples, r.status))
        if r.counterexample:
            lines.append("%s  counterexample: %s" % (" " * width, r.counterexample))
    return "\n".join(lines)


def jsonl(reports: List[CheckReport], timing: bool = False) -> str:
    return "".join(json.dumps(r.to_dict(timing)) + "\n" for r in reports)
