"""Command-line interface: ``vlplus {classify,table,verify,certify,eval}``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .expr import ParseError, parse, to_string
from .lattice import K1Notice, LatticeState
from .structure import classify
from .suites import SUITES, Report, certify_report, fmt, run_suite, table_report
from .zhu import character

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _approx(x) -> str:
    if isinstance(x, Fraction):
        return f"{float(x):.6g}"
    if isinstance(x, tuple):
        return "(" + ", ".join(_approx(y) for y in x) + ")"
    return str(x)


def _print_report(rep: Report, args, out):
    if args.json:
        print(rep.to_json(), file=out)
        return
    width = max((len(e.name) for e in rep.entries), default=4)
    print(f"suite {rep.suite}  k={rep.k}", file=out)
    for e in rep.entries:
        line = f"  {e.status.upper():<12} {e.name:<{width}}  expected {e.expected}  actual {e.actual}"
        print(line, file=out)
    status = "PASS" if rep.all_pass else "FAIL"
    flagged = sum(e.status == "inconclusive" for e in rep.entries)
    extra = f", {flagged} inconclusive" if flagged else ""
    print(f"{status}: {sum(e.status == 'pass' for e in rep.entries)}/{len(rep.entries)} passed{extra}"
          f" ({rep.timing:.2f}s)", file=out)


def cmd_classify(args, out) -> int:
    c = classify(args.k)
    if args.k == 1:
        if args.json:
            print(json.dumps({"k": 1, "notice": c.notice, "module_count": c.module_count}), file=out)
        else:
            print(c.notice, file=out)
            print(f"number of irreducible modules: {c.module_count}", file=out)
        return EXIT_OK
    if args.json:
        print(json.dumps({
            "k": c.k,
            "modules": [{"id": m.id, "top_weight": fmt(m.top_weight),
                         "omega": fmt(m.omega), "E": fmt(m.E), "J": fmt(m.J)} for m in c.modules],
            "basis": c.basis,
            "dim": c.dim,
            "commutative_semisimple": c.commutative_semisimple,
        }, indent=2), file=out)
    else:
        print(f"k = {c.k}: {len(c.modules)} irreducible V_L^+-modules", file=out)
        for m in c.modules:
            print(f"  {m.id:<10} top weight {fmt(m.top_weight)}", file=out)
        print("basis: " + ", ".join(c.basis), file=out)
        print(f"dim A(V_L^+) = {c.dim}", file=out)
        if c.commutative_semisimple:
            print("A(V_L^+) is commutative semisimple (distinct characters, nonsingular evaluation matrix)",
                  file=out)
    return EXIT_OK if c.commutative_semisimple and c.dim == args.k + 7 else EXIT_FAIL


def cmd_table(args, out) -> int:
    rep, catalog = table_report(args.k)
    if args.json:
        print(rep.to_json(), file=out)
        return EXIT_OK if rep.all_pass else EXIT_FAIL
    cols = ("module", "weight", "omega", "E", "J")
    rows = [(m.id, fmt(m.top_weight), fmt(m.omega), fmt(m.E), fmt(m.J)) for m in catalog]
    if args.approx:
        rows = [r + (_approx(m.character),) for r, m in zip(rows, catalog)]
        cols += ("approx (omega, E, J)",)
    widths = [max(len(str(x)) for x in col) for col in zip(cols, *rows)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)), file=out)
    for r in rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)), file=out)
    bad = [e.name for e in rep.entries if e.status == "fail"]
    print("all entries match closed forms" if not bad else "MISMATCH: " + ", ".join(bad), file=out)
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def cmd_verify(args, out) -> int:
    rep = run_suite(args.k, args.suite, samples=args.samples)
    _print_report(rep, args, out)
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def cmd_certify(args, out) -> int:
    rep = certify_report(args.k, args.relation, args.cutoff)
    _print_report(rep, args, out)
    return EXIT_OK if rep.all_pass else EXIT_FAIL


def cmd_eval(args, out) -> int:
    try:
        v = parse(args.expr, args.k)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(v, (Fraction, LatticeState)):
        print("error: expression evaluates to an operator; apply it to a state", file=sys.stderr)
        return EXIT_USAGE
    result = {"k": args.k, "expr": args.expr, "value": to_string(v)}
    if args.module:
        if isinstance(v, Fraction):
            v = LatticeState({((), 0): v}, args.k)
        try:
            result["character"] = fmt(character(v, args.module))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.json:
        print(json.dumps(result, indent=2), file=out)
    else:
        print(result["value"], file=out)
        if "character" in result:
            text = result["character"]
            if args.approx:
                text += f"  (~ {_approx(Fraction(text))})"
            print(f"character on {args.module}: {text}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vlplus", description="Exact computations for V_L^+ and A(V_L^+).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--k", type=int, required=True, help="<alpha, alpha> = 2k")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--approx", action="store_true", help="also show decimal approximations")

    common(sub.add_parser("classify", help="module list and dim A(V_L^+)"))
    common(sub.add_parser("table", help="computed top-level scalars"))
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--samples", type=int, default=100, help="randomized samples per commutator check")
    sp = sub.add_parser("certify", help="search an O(V) certificate for a relation")
    common(sp)
    sp.add_argument("--relation", choices=("L1", "L2"), required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp = sub.add_parser("eval", help="evaluate a state expression")
    common(sp)
    sp.add_argument("--expr", required=True)
    sp.add_argument("--module", help="module id for the character, e.g. T1+ or VL[1]")
    return p


COMMANDS = {"classify": cmd_classify, "table": cmd_table, "verify": cmd_verify,
            "certify": cmd_certify, "eval": cmd_eval}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.k < 1:
        print("error: k must be a positive integer", file=sys.stderr)
        return EXIT_USAGE
    if args.k == 1 and args.command != "classify":
        print(str(K1Notice()), file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
