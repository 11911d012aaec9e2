"""Isogeny class computation over Q from the explicit families, an independent
breadth-first cross-check, and the semistable twist finder."""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .arith import format_rational, power_free_part, rational_roots, squarefree_part
from .curves import (
    CurveError,
    WeierstrassModel,
    is_isomorphic,
    is_semistable_outside,
    minimal_model,
    quadratic_twist,
    require_nonsingular,
    short,
    twist_parameter,
)
from .families import (
    GENUS_ZERO_LEVELS,
    SPORADIC_LEVELS,
    FamilyError,
    family_curve,
    genus_zero_family,
    graph_data,
    j_quotient,
    k_indices,
    member_count,
    special_curve,
    sporadic_curve,
    subclasses,
)
from .fricke import fricke_solve
from .oracle import prime_isogenies

BRANCHES = ("genus_zero", "sporadic", "special_j0", "special_j1728", "singleton")
KENKU_BOUND = 8


class ClassifyError(CurveError):
    pass


class ClassificationInconsistency(ClassifyError):
    def __init__(self, detail):
        super().__init__("classification inconsistency: %s" % detail)


@dataclass(frozen=True)
class IsogenyClass:
    n: int
    branch: str
    t: Optional[Fraction]
    d: Optional[Fraction]
    members: Tuple[Tuple[int, WeierstrassModel], ...]
    edges: Tuple[Tuple[int, int, int], ...]
    matrix: Tuple[Tuple[int, ...], ...]
    input_member: int = 0
    meta: Tuple[Tuple[str, str], ...] = field(default=())

    def model(self, i: int) -> WeierstrassModel:
        return dict(self.members)[i]

    def j_values(self) -> List[Fraction]:
        return sorted(M.j for _, M in self.members)

    def edge_labels(self) -> List[int]:
        return sorted(l for _, _, l in self.edges)


# ------------------------------------------------------------ solving J


def _preimage_coeffs(num, den, j: Fraction) -> List[int]:
    size = max(len(num), len(den))
    num = list(num) + [0] * (size - len(num))
    den = list(den) + [0] * (size - len(den))
    p, q = j.numerator, j.denominator
    return [q * a - p * b for a, b in zip(num, den)]


def member_preimages(n: int, i: int, j) -> List[Fraction]:
    """All rational t with J_{n,i}(t) = j and C_{n,i}(t, 1) nonsingular."""
    j = Fraction(j)
    num, den = j_quotient(n, i)
    F = genus_zero_family(n, i)
    out = []
    for t in rational_roots(_preimage_coeffs(num, den, j)):
        A, B = F.at(t)
        disc = 4 * A ** 3 + 27 * B ** 2
        if disc != 0 and 6912 * A ** 3 == j * disc:
            out.append(t)
    return out


def _preimage_set(j: Fraction) -> List[Tuple[int, int, Fraction]]:
    R = []
    for n in GENUS_ZERO_LEVELS:
        for i in range(1, member_count(n) + 1):
            for t in member_preimages(n, i, j):
                R.append((n, i, t))
    return R


# ----------------------------------------------------------- isogenies at a fixed level


def _twist_T(n: int, i: int, t: Fraction, E: WeierstrassModel) -> Fraction:
    A, B = genus_zero_family(n, i).at(t)
    return B * E.c4 / (2 * A * E.c6)


def isogenies_genus_0(E: WeierstrassModel, n: int) -> List[WeierstrassModel]:
    """Curves C_{n,i}(t, T(t)) over all rational t with j_{n,1}(t) = j(E)."""
    E = require_nonsingular(E).to_short()
    if n not in GENUS_ZERO_LEVELS:
        raise ClassifyError("X0(%s) is not a genus-zero level" % n)
    j = E.j
    if j in (0, 1728):
        raise ClassifyError("precondition: j(E) must not be 0 or 1728")
    k1 = k_indices(n)[0]
    out = []
    for t in fricke_solve(n, j):
        T = _twist_T(n, k1, t, E)
        out.extend(family_curve(n, i, t, T) for i in range(1, member_count(n) + 1))
    return out


# ------------------------------------------------------------- branches


def _graph(n: int, members: Tuple[int, ...]):
    g = graph_data(n)
    if len(members) == member_count(n):
        return g.edges, g.matrix
    # a sub-class (level 11): relabel the two-member graph onto the member indices
    relabel = {k + 1: m for k, m in enumerate(members)}
    edges = tuple((relabel[i], relabel[k], l) for i, k, l in g.edges)
    return edges, g.matrix


def _genus_zero_class(E: WeierstrassModel, R) -> IsogenyClass:
    top = max(n for n, _, _ in R)
    S = [(i, t) for n, i, t in R if n == top]
    i, t = min(S, key=lambda s: (s[0], s[1].numerator, s[1].denominator))
    d = squarefree_part(_twist_T(top, i, t, E))
    idx = tuple(range(1, member_count(top) + 1))
    members = tuple((k, family_curve(top, k, t, d)) for k in idx)
    edges, matrix = _graph(top, idx)
    return IsogenyClass(top, "genus_zero", t, Fraction(d), members, edges, matrix)


@lru_cache(maxsize=None)
def _sporadic_refs():
    refs = []
    for n in SPORADIC_LEVELS:
        for group in subclasses(n):
            for i in group:
                refs.append((n, i, group, sporadic_curve(n, i, 1)))
    return tuple(refs)


def _sporadic_class(E: WeierstrassModel) -> Optional[IsogenyClass]:
    j = E.j
    cands = []
    for n, i, group, S in _sporadic_refs():
        if S.j != j:
            continue
        if j == 0:
            # quadratic twisting moves B by cubes
            c = Fraction(E.a6) / S.a6
            from .arith import rational_root_exact

            r = rational_root_exact(c, 3)
            if r is None:
                continue
            d = squarefree_part(r)
        elif j == 1728:
            continue
        else:
            d = squarefree_part(twist_parameter(S, E))
        cands.append((abs(d), d < 0, n, i, d, group))
    if not cands:
        return None
    _, _, n, i, d, group = min(cands)
    members = tuple((k, sporadic_curve(n, k, d)) for k in group)
    edges, matrix = _graph(n, group)
    return IsogenyClass(n, "sporadic", None, Fraction(d), members, edges, matrix)


_M_NOTE = ("twist_exponent", None)


def _special_class(E: WeierstrassModel) -> IsogenyClass:
    A, B = E.a4, E.a6
    if A == 0:
        kind, ell, m = "j0_n3", 3, 6
        opts = [(power_free_part(B / 16, 6), 1), (power_free_part(B / -432, 6), 2)]
        branch = "special_j0"
    else:
        kind, ell, m = "j1728_n2", 2, 4
        opts = [(power_free_part(-A, 4), 1), (power_free_part(A / 4, 4), 2)]
        branch = "special_j1728"
    d, _ = min(opts, key=lambda o: (abs(o[0]), o[0] < 0, o[1]))
    members = ((1, special_curve(kind, 1, d)), (2, special_curve(kind, 2, d)))
    meta = (("twist_exponent", str(m)),
            ("note", "d is reported modulo %d-th powers (quartic twists for j=1728, sextic for j=0)" % m))
    return IsogenyClass(ell, branch, None, Fraction(d), members, ((1, 2, ell),),
                        ((1, ell), (ell, 1)), meta=meta)


def _generic_neighbor(E: WeierstrassModel) -> Optional[WeierstrassModel]:
    """A curve 2- or 3-isogenous to E or to its special partner with j outside {0, 1728}."""
    frontier = [E]
    partner = [phi.codomain for ell in (2, 3) for phi in prime_isogenies(E, ell)
               if phi.codomain.j in (0, 1728)]
    frontier += partner
    for C in frontier:
        for ell in (2, 3):
            for phi in prime_isogenies(C, ell):
                if phi.codomain.j not in (0, 1728):
                    return phi.codomain
    return None


def _locate(cls: IsogenyClass, E: WeierstrassModel) -> IsogenyClass:
    hits = [i for i, M in cls.members if is_isomorphic(M, E) is not None]
    if len(hits) != 1:
        raise ClassificationInconsistency(
            "input is isomorphic to %d members of the computed class" % len(hits))
    models = [M for _, M in cls.members]
    for a in range(len(models)):
        for b in range(a + 1, len(models)):
            if is_isomorphic(models[a], models[b]) is not None:
                raise ClassificationInconsistency("members %d and %d are isomorphic"
                                                  % (cls.members[a][0], cls.members[b][0]))
    return IsogenyClass(cls.n, cls.branch, cls.t, cls.d, cls.members, cls.edges, cls.matrix,
                        hits[0], cls.meta)


def isogeny_class(E: WeierstrassModel) -> IsogenyClass:
    E = require_nonsingular(E).to_short()
    j = E.j
    cls = _sporadic_class(E)
    if cls is None and j in (0, 1728):
        nb = _generic_neighbor(E)
        if nb is not None:
            cls = isogeny_class(nb)
        else:
            cls = _special_class(E)
    if cls is None:
        R = _preimage_set(j)
        if R:
            cls = _genus_zero_class(E, R)
        else:
            cls = IsogenyClass(1, "singleton", None, None, ((1, E),), (), ((1,),))
    return _locate(cls, E)


# ------------------------------------------------------- cross-oracle


@dataclass(frozen=True)
class BFSResult:
    nodes: Tuple[WeierstrassModel, ...]
    edges: Tuple[Tuple[int, int, int], ...]

    def j_values(self) -> List[Fraction]:
        return sorted(M.j for M in self.nodes)

    def edge_labels(self) -> List[int]:
        return sorted(l for _, _, l in self.edges)


@lru_cache(maxsize=None)
def _sporadic_big_edges():
    """Sporadic edges of prime degree outside {2, 3, 5, 7, 13}, as (ref model, other model, ell)."""
    out = []
    for n in SPORADIC_LEVELS:
        g = graph_data(n)
        for group in subclasses(n):
            relabel = {k + 1: m for k, m in enumerate(group)} if len(group) < member_count(n) else None
            for i, k, l in g.edges:
                if l in (2, 3, 5, 7, 13):
                    continue
                if relabel:
                    i, k = relabel[i], relabel[k]
                out.append((sporadic_curve(n, i, 1), sporadic_curve(n, k, 1), l))
                out.append((sporadic_curve(n, k, 1), sporadic_curve(n, i, 1), l))
    return tuple(out)


def _bfs_neighbors(N: WeierstrassModel):
    out = []
    for ell in (2, 3):
        for phi in prime_isogenies(N, ell):
            out.append((phi.codomain, ell))
    j = N.j
    if j in (0, 1728):
        return out
    for ell in (5, 7, 13):
        k = k_indices(ell)
        for side in (1, 2):
            for t in fricke_solve(ell, j, side):
                here, there = k[side - 1], k[2 - side]
                d = twist_parameter(family_curve(ell, here, t, 1), N)
                out.append((family_curve(ell, there, t, d, normalize=False), ell))
    for S, T, ell in _sporadic_big_edges():
        if S.j == j:
            d = twist_parameter(S, N)
            out.append((quadratic_twist(T, d), ell))
    return out


def bfs_cross_oracle(E: WeierstrassModel) -> BFSResult:
    E = require_nonsingular(E).to_short()
    nodes = [E]
    edges = set()
    queue = [0]
    while queue:
        a = queue.pop(0)
        for C, ell in _bfs_neighbors(nodes[a]):
            b = next((k for k, M in enumerate(nodes) if is_isomorphic(M, C) is not None), None)
            if b is None:
                nodes.append(C)
                b = len(nodes) - 1
                queue.append(b)
                if len(nodes) > KENKU_BOUND:
                    raise ClassificationInconsistency("breadth-first closure exceeds %d curves" % KENKU_BOUND)
            if a != b:
                edges.add((min(a, b), max(a, b), ell))
    return BFSResult(tuple(nodes), tuple(sorted(edges)))


def cross_check(E: WeierstrassModel, cls: Optional[IsogenyClass] = None) -> bool:
    cls = cls or isogeny_class(E)
    bfs = bfs_cross_oracle(E)
    return bfs.j_values() == cls.j_values() and bfs.edge_labels() == cls.edge_labels()


# ------------------------------------------------------ semistable twist


def semistable_twist(E: WeierstrassModel) -> Tuple[int, WeierstrassModel]:
    """Squarefree d such that E^d is semistable at every prime not dividing n0 in {4, 6, 9}."""
    E = require_nonsingular(E).to_short()
    cls = isogeny_class(E)
    n0 = next((m for m in (4, 6, 9) if cls.n % m == 0), None)
    if n0 is None:
        raise ClassifyError("precondition: isogeny class degree %d is not divisible by 4, 6 or 9" % cls.n)
    for i, M in cls.members:
        if M.j in (0, 1728):
            continue
        for k in range(1, member_count(n0) + 1):
            ts = member_preimages(n0, k, M.j)
            if not ts:
                continue
            t0 = ts[0]
            dd = twist_parameter(family_curve(n0, k, t0, 1), M)
            if n0 == 4:
                # C_{4,1}(b/a, a) is the integral model F_4(a, b)
                dd *= t0.denominator
            d = squarefree_part(dd)
            Ed = quadratic_twist(E, d)
            if not is_semistable_outside(Ed, n0):
                raise ClassificationInconsistency("twist by %d is not semistable outside %d" % (d, n0))
            return d, Ed
    raise ClassificationInconsistency("no level-%d parameter found for a class of degree %d" % (n0, cls.n))


# ---------------------------------------------------------------- output


def _label(cls: IsogenyClass, i: int) -> str:
    return "C_{%d,%d}" % (cls.n, i)


def class_json(cls: IsogenyClass, minimal: bool = False) -> Dict:
    members = []
    for i, M in cls.members:
        entry = {"i": i, "A": format_rational(M.a4), "B": format_rational(M.a6)}
        if minimal:
            entry["minimal"] = [format_rational(a) for a in minimal_model(M).coeffs]
        members.append(entry)
    out = {
        "n": cls.n,
        "branch": cls.branch,
        "t": None if cls.t is None else format_rational(cls.t),
        "d": None if cls.d is None else format_rational(cls.d),
        "members": members,
        "edges": [list(e) for e in cls.edges],
        "matrix": [list(r) for r in cls.matrix],
        "input_member": cls.input_member,
    }
    if cls.meta:
        out["meta"] = dict(cls.meta)
    return out


def emit_graph(cls: IsogenyClass, fmt: str = "dot", minimal: bool = False) -> str:
    if fmt == "json":
        return json.dumps(class_json(cls, minimal), sort_keys=False)
    if fmt != "dot":
        raise ClassifyError("unknown graph format %r" % fmt)
    lines = ['graph "isogeny_class_n%d" {' % cls.n]
    for i, _ in cls.members:
        lines.append('  %d [label="%s"];' % (i, _label(cls, i)))
    for i, k, l in cls.edges:
        lines.append("  %d -- %d [label=%d];" % (i, k, l))
    lines.append("}")
    return "\n".join(lines) + "\n"
