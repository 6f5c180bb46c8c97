"""Command-line interface: ``prelie <command> ...``.

Exit codes: 0 success or verified, 1 verification failed, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .combination import GraphCombination
from .enumeration import ResourceLimitError, enumerate_graphs
from .factorization import Side, alpha, verify_unique_factorization
from .graph import AdmissibleGraph, GraphKind, GraphStructureError, aut_order, validate
from .grammar import GraphParseError, canonical_string, read_graph
from .insertion import compose, insert_at
from .verification import (
    coefficient_theorem_sweep,
    constant_case_check,
    g23_census,
    g23_table,
    mc_defect,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _graph(text: str, kind: GraphKind | None = None) -> AdmissibleGraph:
    try:
        g = read_graph(text)
    except GraphParseError as exc:
        raise InputError(f"parse error: {exc}") from None
    except GraphStructureError as exc:
        raise InputError(f"invalid graph: {exc}") from None
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    if kind is not None and not validate(g, kind):
        raise InputError(f"invalid graph: {text!r} is not an admissible {kind.value} graph")
    return g


def _print_combination(x: GraphCombination, kind: GraphKind, as_json: bool) -> None:
    if as_json:
        print(json.dumps(x.to_records(kind.value), indent=2))
        return
    if not x:
        print("0")
    for text, c in x.sorted_terms():
        print(f"{c}\t{text}")


def _write_json(path: str | None, payload) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def cmd_enumerate(args) -> int:
    kind = GraphKind.coerce(args.kind)
    entries = enumerate_graphs(args.n, args.m, kind, signed=not args.unsigned)
    if args.json:
        records = [{"schema": 1, "class": kind.value, "graph": e.text, "aut": e.aut} for e in entries]
        print(json.dumps(records, indent=2))
    else:
        for e in entries:
            print(f"{e.text} |Aut|={e.aut}")
    return EXIT_OK


def cmd_aut(args) -> int:
    print(aut_order(_graph(args.graph), allow_flips=args.unsigned))
    return EXIT_OK


def cmd_insert(args) -> int:
    kind = GraphKind.coerce(args.kind)
    outer, inner = _graph(args.outer, kind), _graph(args.inner, kind)
    if not 1 <= args.position <= outer.m:
        raise InputError(f"position {args.position} out of range 1..{outer.m}")
    _print_combination(insert_at(outer, args.position, inner, kind, signed=not args.unsigned), kind, args.json)
    return EXIT_OK


def cmd_compose(args) -> int:
    kind = GraphKind.coerce(args.kind)
    x, y = _graph(args.outer, kind), _graph(args.inner, kind)
    _print_combination(compose(x, y, kind, signed=not args.unsigned), kind, args.json)
    return EXIT_OK


def cmd_factor(args) -> int:
    g = _graph(args.graph)
    if g.m != 3:
        raise InputError(f"factor needs a graph on 3 boundary points, got {g.m}")
    f = alpha(g, Side(args.side))
    print(f"alpha: {canonical_string(f.alpha)}")
    print(f"quotient: {canonical_string(f.quotient)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    kind = GraphKind.coerce(args.kind)
    signed = not args.unsigned
    if args.what == "mc":
        reports = [mc_defect(n, kind, signed=signed) for n in range(args.max_order + 1)]
        for r in reports:
            status = "pass" if r.passed else f"FAIL ({len(r.defect)} nonzero terms)"
            print(f"order {r.order}: {status}")
            for text, c in r.defect.sorted_terms():
                print(f"  {c}\t{text}")
        ok = all(r.passed for r in reports)
        _write_json(args.json, [r.to_record() for r in reports])
    elif args.what == "uf":
        report = verify_unique_factorization(args.max_order, kind, signed=signed)
        print(f"checked {report.checked} insertion classes, {len(report.violations)} violations")
        ok = report.passed
        _write_json(args.json, {"schema": 1, "class": kind.value, "violations": report.violations})
    else:
        report = coefficient_theorem_sweep(args.max_order, kind, signed=signed)
        print(f"checked {report.checked} insertion classes")
        print(f"normalized coefficients: {len(report.bad_coefficients)} not equal to 1")
        print(f"left/right mismatches: {len(report.lr_mismatches)}")
        for m in report.lr_mismatches:
            print(f"  {m['graph']}\tC_left={m['C_left']}\tC_right={m['C_right']}")
        ok = report.passed
        _write_json(args.json, report.to_record())
    print("verified" if ok else "verification failed")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_table(args) -> int:
    rows = g23_table()
    census = g23_census()
    if args.json:
        print(
            json.dumps(
                {
                    "schema": 1,
                    "class": "linear",
                    "rows": [r.to_record() for r in rows],
                    "census": {
                        k: v if k != "rows" else [r.to_record() for r in v] for k, v in census.items()
                    },
                },
                indent=2,
            )
        )
    else:
        header = ("graph", "alpha_L", "alpha_R", "G/alpha_L", "G/alpha_R", "C_L", "C_R", "C", "unsigned C_L-C_R")
        print("\t".join(header))
        for r in rows:
            print(
                "\t".join(
                    str(x)
                    for x in (
                        r.name,
                        r.alpha_left,
                        r.alpha_right,
                        r.quotient_left,
                        r.quotient_right,
                        r.c_left,
                        r.c_right,
                        r.c,
                        f"{r.count_left}-{r.count_right}={r.count_c}",
                    )
                )
            )
        print()
        flag = "equals" if census["count_matches_named"] else "DIFFERS FROM"
        print(f"G2,3 (linear) has {census['count']} classes; this {flag} the {census['named_count']} named classes")
        for r in census["rows"]:
            print(f"  {r.name}\tC={r.c_left}-{r.c_right}={r.c}\tunsigned C={r.count_c}")
        print(f"signed C = 0 for every class: {census['all_signed_zero']}")
        print(f"unsigned C = 0 for every class: {census['all_unsigned_zero']}")
    ok = census["all_unsigned_zero"] if args.unsigned else census["all_signed_zero"]
    return EXIT_OK if ok else EXIT_FAILED


def cmd_constcase(args) -> int:
    if min(args.r, args.s, args.t) < 0 or args.r + args.s + args.t == 0:
        raise InputError("need R, S, T >= 0, not all zero")
    res = constant_case_check(args.r, args.s, args.t, signed=not args.unsigned)
    for key in ("closed_form", "direct", "left", "left_formula", "right", "right_formula"):
        print(f"{key}: {res[key]}")
    print(f"left_count: {res['left_count']} (binomial {res['left_count_formula']})")
    print(f"right_count: {res['right_count']} (binomial {res['right_count_formula']})")
    ok = (
        res["closed_form"] == 0
        and res["direct"] == 0
        and res["left"] == res["left_formula"]
        and res["right"] == res["right_formula"]
        and res["left_count"] == res["left_count_formula"]
        and res["right_count"] == res["right_count_formula"]
    )
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prelie", description="Exact computations with admissible graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kind=True, json_flag=True):
        if kind:
            sp.add_argument("--class", dest="kind", choices=["linear", "constant"], default="linear")
        sp.add_argument("--unsigned", action="store_true", help="ignore orientation; count unoriented classes")
        if json_flag:
            sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("enumerate", help="list the classes G_{N,M}")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("aut", help="automorphism group order")
    sp.add_argument("graph")
    common(sp, kind=False, json_flag=False)
    sp.set_defaults(func=cmd_aut)

    sp = sub.add_parser("insert", help="insert G2 at boundary point I of G1")
    sp.add_argument("outer")
    sp.add_argument("position", type=int)
    sp.add_argument("inner")
    common(sp)
    sp.set_defaults(func=cmd_insert)

    sp = sub.add_parser("compose", help="signed sum of insertions over all boundary points")
    sp.add_argument("outer")
    sp.add_argument("inner")
    common(sp)
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("factor", help="largest normal subgraph on the left or right pair")
    sp.add_argument("--side", choices=["left", "right"], required=True)
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("verify", help="run a verification sweep")
    sp.add_argument("what", choices=["mc", "uf", "coeff"])
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--class", dest="kind", choices=["linear", "constant"], default="linear")
    sp.add_argument("--unsigned", action="store_true")
    sp.add_argument("--json", metavar="PATH")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="factorization table of the two-vertex three-point classes")
    sp.add_argument("which", choices=["g23"])
    sp.add_argument("--unsigned", action="store_true", help="gate the exit code on the unsigned identity")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("constcase", help="constant-case closed form for Gamma_1^R Gamma_2^S Gamma_3^T")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("--unsigned", action="store_true")
    sp.set_defaults(func=cmd_constcase)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
