"""Command-line interface.

Data goes to stdout, diagnostics to stderr. Big integers are always
written as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from descent_forge.arith import ternary_solvable
from descent_forge.descent import descend_to_root
from descent_forge.oracle import EquationSpec, default_budget, oracle_sweep
from descent_forge.solutions import PPSolution, Tag, is_suitable, verify
from descent_forge.successor import Kind, successor
from descent_forge.tree import enumerate_tree

EXIT_OK = 0
EXIT_OTHER_CLASS = 1
EXIT_NOT_SOLUTION = 2
EXIT_TRUNCATED = 3


def _write_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    fields = list(rows[0]) if rows else []
    w = csv.writer(out, lineterminator="\n")
    if fields:
        w.writerow(fields)
    for row in rows:
        w.writerow(["yes" if v is True else "no" if v is False else v for v in row.values()])


def _pp_solution(args) -> PPSolution:
    return PPSolution(args.x, args.y, args.m)


def cmd_generate(args) -> int:
    if args.max_m < 5:
        args.parser.error("--max-m must be at least 5")
    rows = [node.to_record() for node in enumerate_tree(args.max_m)]
    _write_rows(rows, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    cls = verify(args.x, args.y, args.m)
    print(cls.describe())
    if cls.tag is Tag.PP_SOLUTION:
        return EXIT_OK
    if cls.tag is Tag.NOT_A_SOLUTION:
        return EXIT_NOT_SOLUTION
    return EXIT_OTHER_CLASS


def cmd_descend(args) -> int:
    path = descend_to_root(_pp_solution(args))
    json.dump(path.to_certificate(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_successor(args) -> int:
    s = successor(_pp_solution(args), Kind(args.which))
    print(json.dumps(s.to_record()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = EquationSpec(args.a, args.b, args.lam, args.k)
    budget = args.budget if args.budget is not None else default_budget()
    res = oracle_sweep(spec, args.m_max, budget=budget)
    _write_rows(res.records(), args.format, sys.stdout)
    print(f"{spec}: hits at m = {res.exponents_with_hits()}", file=sys.stderr)
    print(f"primitive hits at m = {res.suitable_exponents}", file=sys.stderr)
    if res.truncated:
        print(f"truncated: budget {budget} exhausted before m = {res.truncated_at}", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_check_solvability(args) -> int:
    ok = ternary_solvable(args.a, args.b, args.c)
    print("solvable" if ok else "unsolvable")
    return EXIT_OK


def cmd_suitable(args) -> int:
    ok = is_suitable(args.m)
    print("suitable" if ok else "not suitable")
    return EXIT_OK if ok else EXIT_OTHER_CLASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descent-forge",
        description="Primitive positive solutions of 7x^2 + 59y^2 = 3^m.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func, parser=p)
        return p

    def add_xym(p):
        p.add_argument("x", type=int)
        p.add_argument("y", type=int)
        p.add_argument("m", type=int)

    p = add("generate", cmd_generate, "list every pp-solution with m <= MAX_M")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")

    add_xym(add("verify", cmd_verify, "classify (x, y, m)"))
    add_xym(add("descend", cmd_descend, "descent certificate down to (1, 2, 5)"))

    p = add("successor", cmd_successor, "first or second successor of a pp-solution")
    add_xym(p)
    p.add_argument("--which", choices=["first", "second"], default="second")

    p = add("oracle", cmd_oracle, "brute-force a x^2 + b y^2 = lambda k^m for m = 1..M_MAX")
    p.add_argument("--a", type=int, default=7)
    p.add_argument("--b", type=int, default=59)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=None,
                   help="scan iteration budget (default 1e8, or $DESCENT_FORGE_BUDGET)")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")

    p = add("check-solvability", cmd_check_solvability,
            "Legendre's criterion for a x^2 + b y^2 = c z^2")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=int)

    p = add("suitable", cmd_suitable, "is m in the progression 10k + 5")
    p.add_argument("m", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SOLUTION


if __name__ == "__main__":
    sys.exit(main())
