"""Command-line front end."""
import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional

from .arith import format_rational, parse_rational
from .classify import class_json, emit_graph, isogenies_genus_0, isogeny_class, semistable_twist
from .curves import WeierstrassModel, minimal_model, model_json, parse_curve
from .families import family_curve, graph_data, sporadic_curve
from .fricke import fricke_eval
from .verify import CHECKS, DEFAULT_SAMPLES, DEFAULT_SEED, header, jsonl, run_all, run_check, table


@dataclass(frozen=True)
class CurveInput:
    model: WeierstrassModel
    text: str


def parse_curve_input(text: str) -> CurveInput:
    return CurveInput(parse_curve(text), text.strip())


# argparse reads "-15,-22" or "-1/4" as an option; a leading space keeps it positional
_NUMERIC = re.compile(r"^-\d[\d/,\s-]*$")


def _protect(argv: List[str]) -> List[str]:
    return [" " + a if _NUMERIC.match(a) else a for a in argv]


def _model_out(W: WeierstrassModel, as_json: bool) -> str:
    if as_json:
        return json.dumps(model_json(W))
    return W.text()


def _classify_text(cls, minimal: bool) -> str:
    lines = ["n = %d (%s)" % (cls.n, cls.branch)]
    if cls.t is not None:
        lines.append("t = %s" % format_rational(cls.t))
    if cls.d is not None:
        lines.append("d = %s" % format_rational(cls.d))
    for i, M in cls.members:
        mark = "  <- input" if i == cls.input_member else ""
        text = str(minimal_model(M)) if minimal else M.text()
        lines.append("C_{%d,%d}: %s%s" % (cls.n, i, text, mark))
    lines.append("edges: " + " ".join("%d-%d:%d" % e for e in cls.edges))
    for row in cls.matrix:
        lines.append("  " + " ".join("%3d" % v for v in row))
    for k, v in cls.meta:
        lines.append("%s: %s" % (k, v))
    return "\n".join(lines)


def _classify_one(text: str, args) -> str:
    E = parse_curve_input(text).model
    cls = isogeny_class(E)
    if args.json:
        return emit_graph(cls, "json", args.minimal)
    if args.dot:
        return emit_graph(cls, "dot").rstrip("\n")
    return _classify_text(cls, args.minimal)


def cmd_classify(args) -> int:
    if args.stdin:
        status = 0
        for line in sys.stdin:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                print(_classify_one(line, args))
            except ValueError as e:
                print("error: %s: %s" % (line, e), file=sys.stderr)
                status = 1
        return status
    if args.curve is None:
        raise SystemExit2("classify needs a curve or --stdin")
    print(_classify_one(args.curve, args))
    return 0


def cmd_family(args) -> int:
    W = family_curve(args.n, args.i, parse_rational(args.t), parse_rational(args.d))
    print(_model_out(W, args.json))
    return 0


def cmd_sporadic(args) -> int:
    W = sporadic_curve(args.n, args.i, parse_rational(args.d))
    print(_model_out(W, args.json))
    return 0


def cmd_fricke(args) -> int:
    print(format_rational(fricke_eval(args.n, args.i, parse_rational(args.t))))
    return 0


def cmd_graph(args) -> int:
    g = graph_data(args.n)
    if args.dot:
        lines = ['graph "isogeny_class_n%d" {' % g.n]
        for i in range(1, len(g.matrix) + 1):
            lines.append('  %d [label="C_{%d,%d}"];' % (i, g.n, i))
        for i, k, l in g.edges:
            lines.append("  %d -- %d [label=%d];" % (i, k, l))
        lines.append("}")
        print("\n".join(lines))
    else:
        print(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges], "matrix": [list(r) for r in g.matrix]}))
    return 0


def cmd_semistable_twist(args) -> int:
    d, Ed = semistable_twist(parse_curve_input(args.curve).model)
    print("d = %d" % d)
    print(Ed.text())
    return 0


def cmd_isogenies(args) -> int:
    for W in isogenies_genus_0(parse_curve_input(args.curve).model, args.n):
        print(W.text())
    return 0


def cmd_verify(args) -> int:
    if args.check:
        reports = [run_check(name, args.samples, args.seed) for name in args.check]
    else:
        reports = run_all(args.seed, args.samples)
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            fh.write(jsonl(reports, args.timing))
    if args.format == "jsonl":
        sys.stdout.write(jsonl(reports, args.timing))
    else:
        print(header())
        print()
        print(table(reports))
    return 1 if any(r.failed for r in reports) else 0


class SystemExit2(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isogeny-atlas",
                                description="Isogeny classes of elliptic curves over Q from explicit families.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="isogeny class of a curve 'A,B' or 'a1,a2,a3,a4,a6'")
    c.add_argument("curve", nargs="?")
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true")
    c.add_argument("--minimal", action="store_true", help="show global minimal models of the members")
    c.add_argument("--stdin", action="store_true", help="read one curve per line from standard input")
    c.set_defaults(func=cmd_classify)

    f = sub.add_parser("family", help="C_{n,i}(t,d)")
    f.add_argument("n", type=int)
    f.add_argument("i", type=int)
    f.add_argument("t")
    f.add_argument("d")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("sporadic", help="C_{n,i}(d) for a sporadic level")
    s.add_argument("n", type=int)
    s.add_argument("i", type=int)
    s.add_argument("d")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sporadic)

    fr = sub.add_parser("fricke", help="j_{n,i}(t)")
    fr.add_argument("n", type=int)
    fr.add_argument("i", type=int)
    fr.add_argument("t")
    fr.set_defaults(func=cmd_fricke)

    g = sub.add_parser("graph", help="isogeny graph and matrix of a level")
    g.add_argument("n", type=int)
    g.add_argument("--dot", action="store_true")
    g.set_defaults(func=cmd_graph)

    st = sub.add_parser("semistable-twist", help="quadratic twist semistable away from 4, 6 or 9")
    st.add_argument("curve")
    st.set_defaults(func=cmd_semistable_twist)

    iso = sub.add_parser("isogenies", help="curves C_{n,i}(t,T(t)) isogenous to a curve at level n")
    iso.add_argument("curve")
    iso.add_argument("n", type=int)
    iso.set_defaults(func=cmd_isogenies)

    v = sub.add_parser("verify", help="run the verification checks")
    v.add_argument("--check", action="append", choices=sorted(CHECKS))
    v.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--format", choices=("table", "jsonl"), default="table")
    v.add_argument("--jsonl", metavar="PATH", help="also write JSON lines to PATH")
    v.add_argument("--timing", action="store_true", help="include elapsed times in JSON lines")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_protect(argv))
    try:
        return args.func(args)
    except SystemExit2 as e:
        parser.print_usage(sys.stderr)
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print("error: %s" % msg, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
