"""Decide formulas and manipulate .aut files from the command line.

Exit codes: 0 = SAT / equal, 1 = UNSAT / counterexample, 2 = error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import logic
from .automata import BuchiAutomaton, lasso_membership
from .compiler import DEFAULT_MAX_OFFSET, CompileTrace, decide_sat
from .formats import dump_stages, read_aut, to_dot, write_aut, write_manifest
from .oracle import brute_force_universal_membership, enumerate_lassos, languages_equal_on_lassos
from .universal import universal_quantify_with_artifacts


def _formula_text(args) -> str:
    if args.file:
        return Path(args.file).read_text()
    if args.formula is None:
        raise ValueError("give a formula or --file")
    return args.formula


def cmd_decide(args) -> int:
    formula = logic.parse(_formula_text(args))
    trace = CompileTrace()
    result = decide_sat(formula, max_offset=args.max_offset, trace=trace)
    if result.satisfiable:
        print("SAT")
        for line in result.witness.lines():
            print(line)
    else:
        print("UNSAT")
    if args.stats:
        for what, n, m in trace.steps:
            print(f"stage {what}: {n} states, {m} transitions")
        for j, art in enumerate(trace.quantifications):
            print(f"forall {art.var} [{j}]: normalized {art.normalized.num_states}, "
                  f"subset {art.subset.num_states}, final {art.result.num_states} states")
        print(f"final: {result.automaton.num_states} states, "
              f"{result.automaton.num_transitions} transitions")
    if args.emit_aut:
        write_aut(result.automaton, args.emit_aut)
    if args.emit_dot:
        Path(args.emit_dot).write_text(to_dot(result.automaton))
    if args.dump_stages:
        entries = []
        for j, art in enumerate(trace.quantifications):
            entries += dump_stages(art, args.dump_stages, prefix=f"forall{j}_{art.var}_")
        write_manifest(entries, args.dump_stages)
    return 0 if result.satisfiable else 1


def cmd_quantify(args) -> int:
    a = read_aut(args.aut)
    if not isinstance(a, BuchiAutomaton):
        raise ValueError("quantify needs a Büchi automaton")
    art = universal_quantify_with_artifacts(a, args.var)
    write_aut(art.result, args.output)
    if args.dump_stages:
        write_manifest(dump_stages(art, args.dump_stages), args.dump_stages)
    return 0


def cmd_oracle_check(args) -> int:
    a = read_aut(args.first)
    if args.var:
        result = universal_quantify_with_artifacts(a, args.var).result
        width = a.signature.width - 1
        for w in enumerate_lassos(width, args.max_u, args.max_v):
            if lasso_membership(result, w) != brute_force_universal_membership(a, args.var, w):
                print(f"MISMATCH {w}")
                return 1
        print(f"AGREE on all lassos |u|<={args.max_u}, |v|<={args.max_v}")
        return 0
    if not args.second:
        raise ValueError("give a second .aut file or --var")
    w = languages_equal_on_lassos(a, read_aut(args.second), args.max_u, args.max_v)
    if w is None:
        print(f"EQUAL on all lassos |u|<={args.max_u}, |v|<={args.max_v}")
        return 0
    print(f"COUNTEREXAMPLE {w}")
    return 1


def cmd_export_dot(args) -> int:
    text = to_dot(read_aut(args.aut))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unaryfol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide satisfiability of a formula")
    p.add_argument("formula", nargs="?", help="formula text; omit when using --file")
    p.add_argument("-f", "--file", help="read the formula from a .fol file")
    p.add_argument("--emit-dot", metavar="PATH", help="write the final automaton as DOT")
    p.add_argument("--emit-aut", metavar="PATH", help="write the final automaton as .aut")
    p.add_argument("--dump-stages", metavar="DIR",
                   help="write every intermediate automaton plus manifest.json")
    p.add_argument("--stats", action="store_true", help="print per-node automaton sizes")
    p.add_argument("--max-offset", type=int, default=DEFAULT_MAX_OFFSET,
                   help="largest c allowed in y = x + c (default %(default)s)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("quantify", help="universally quantify a variable of an .aut file")
    p.add_argument("aut", help="input automaton")
    p.add_argument("var", help="first-order variable to quantify")
    p.add_argument("-o", "--output", required=True, help="where to write the result")
    p.add_argument("--dump-stages", metavar="DIR",
                   help="write the pipeline stages plus manifest.json")
    p.set_defaults(func=cmd_quantify)

    p = sub.add_parser("oracle-check", help="bounded lasso comparison")
    p.add_argument("first", help="automaton under test")
    p.add_argument("second", nargs="?", help="automaton to compare against")
    p.add_argument("--var", help="check universal quantification of VAR against brute force")
    p.add_argument("--max-u", type=int, default=3, help="longest lasso prefix (default 3)")
    p.add_argument("--max-v", type=int, default=3, help="longest lasso period (default 3)")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("export-dot", help="render an .aut file as Graphviz DOT")
    p.add_argument("aut", help="input automaton")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
