"""Command-line interface.

Reports are plain structured text, one fact per line, keyed by a leading
keyword (ORDER, MEMBER, WITNESS, STATES, REFUTED, ...), so outputs are
byte-deterministic and easy to golden-test.

Exit codes: 0 positive answer (member / solved / refuted), 1 negative
answer, 2 budget or limit exhausted, 3 input or format error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import brute, dfa, dovetail, rationals
from .errors import (
    CapacityError,
    GroupEqError,
    SearchBudgetError,
    StateLimitError,
)
from .groups import load_group
from .polynomials import parse_polynomial

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_EXHAUSTED = 2
EXIT_INPUT = 3

_BUDGET_ERRORS = (CapacityError, StateLimitError, SearchBudgetError)


def _load_group_file(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GroupEqError(f"cannot read group file {path}: {exc}")
    return load_group(text)


def _cmd_group_validate(args) -> int:
    group = _load_group_file(args.file)
    print(f"GROUP {group.name}")
    print(f"ORDER {group.order}")
    print("GENERATORS " + " ".join(group.generator_labels))
    return EXIT_POSITIVE


def _cmd_eq_solve(args) -> int:
    group = _load_group_file(args.group)
    p = parse_polynomial(args.equation, group, args.arity)
    member = None
    witness = None
    if args.method in ("dfa", "both"):
        member = dfa.membership(group, args.arity, p)
    if args.method in ("brute", "both"):
        report = brute.solve_brute(group, args.arity, p)
        if member is not None and member != report.found:
            print("ERROR method disagreement between dfa and brute")
            return EXIT_INPUT
        member = report.found
        witness = report.witness
    print(f"MEMBER {'true' if member else 'false'}")
    if witness is not None:
        pairs = " ".join(f"x{k + 1}={w}" for k, w in enumerate(witness))
        print(f"WITNESS {pairs}".rstrip())
    return EXIT_POSITIVE if member else EXIT_NEGATIVE


def _cmd_eq_build_dfa(args) -> int:
    group = _load_group_file(args.group)
    automaton = dfa.build_reachable_dfa(group, args.arity, state_limit=args.limit)
    if args.minimize:
        automaton = dfa.minimize_dfa(automaton)
    print(f"STATES {automaton.num_states}")
    print(f"ACCEPTING {len(automaton.accepting)}")
    text = dfa.export_dfa(automaton, args.format)
    if args.output:
        Path(args.output).write_text(text)
        print(f"WROTE {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_POSITIVE


def _cmd_eq_enumerate(args) -> int:
    group = _load_group_file(args.group)
    for line in brute.enumerate_language(group, args.arity, args.maxlen):
        print(line)
    return EXIT_POSITIVE


def _make_oracle(selector: str):
    kind, _, rest = selector.partition(":")
    if kind == "free":
        try:
            rank = int(rest)
        except ValueError:
            raise GroupEqError(f"bad free-group rank {rest!r}")
        return dovetail.free_group_oracle(rank)
    if kind == "group":
        return dovetail.finite_group_oracle(_load_group_file(rest))
    raise GroupEqError(
        f"unknown oracle {selector!r}; use free:<rank> or group:<file>"
    )


def _cmd_eq_dovetail(args) -> int:
    oracle = _make_oracle(args.oracle)
    p = parse_polynomial(args.equation, oracle.alphabet, args.arity)
    result = dovetail.dovetail_solve(oracle, args.arity, p, args.max_steps)
    if result.solved:
        print(f"SOLVED m={result.steps}")
        for k, labels in enumerate(result.witness_labels(oracle.alphabet)):
            print(f"WITNESS x{k + 1} {labels}".rstrip())
        return EXIT_POSITIVE
    print(f"EXHAUSTED m={result.steps}")
    return EXIT_EXHAUSTED


def _parse_set(selector: str) -> rationals.RationalSet:
    if selector == "integers":
        return rationals.RationalSet.positive_integers()
    if selector == "all":
        return rationals.RationalSet.all_rationals()
    if selector.startswith("list:"):
        items = [s for s in selector[len("list:"):].split(",") if s]
        if not items:
            raise GroupEqError("empty fraction list")
        try:
            return rationals.RationalSet.explicit(Fraction(s) for s in items)
        except (ValueError, ZeroDivisionError) as exc:
            raise GroupEqError(f"bad fraction list: {exc}")
    raise GroupEqError(
        f"unknown set {selector!r}; use integers, all or list:<m/n,...>"
    )


def _cmd_cfl_pump(args) -> int:
    q_set = _parse_set(args.set)
    if args.auto_witness and args.word:
        raise GroupEqError("give either --word or --auto-witness, not both")
    if args.auto_witness:
        witness = rationals.auto_pumping_witness(q_set, args.p)
        print(f"WITNESS-MULTIPLIER {witness.multiplier}")
        word = witness.word
    elif args.word is not None:
        word = args.word
    else:
        raise GroupEqError("need --word <s> or --auto-witness")
    a_count = word.count("a")
    b_count = len(word) - a_count
    print(f"SET {q_set.name}")
    print(f"P {args.p}")
    print(f"WORD a^{a_count} b^{b_count}")
    report = rationals.refute_pumping(q_set, args.p, word, t_max=args.tmax)
    for line in report.format_lines():
        print(line)
    return EXIT_POSITIVE if report.refuted else EXIT_NEGATIVE


def _cmd_cfl_demo_z(args) -> int:
    pairs = rationals.divisor_pairs(args.max_m, args.max_n)
    by_search = rationals.divisor_pairs_by_search(args.max_m, args.max_n)
    predicate = {
        (m, n)
        for m in range(1, args.max_m + 1)
        for n in range(1, args.max_n + 1)
        if rationals.lang_member(rationals.RationalSet.divisor_predicate(), m, n)
    }
    for m, n in sorted(pairs):
        print(f"PAIR {m} {n}")
    print(f"COUNT {len(pairs)}")
    ok = pairs == by_search == predicate
    print(f"CROSSCHECK {'OK' if ok else 'FAIL'}")
    return EXIT_POSITIVE if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupeq",
        description="Equation solvability over finite groups as formal languages.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    p_group = top.add_parser("group", help="group file operations")
    group_sub = p_group.add_subparsers(dest="subcommand", required=True)
    p_validate = group_sub.add_parser("validate", help="load and validate a group file")
    p_validate.add_argument("file")
    p_validate.set_defaults(func=_cmd_group_validate)

    p_eq = top.add_parser("eq", help="equation solving and automata")
    eq_sub = p_eq.add_subparsers(dest="subcommand", required=True)

    p_solve = eq_sub.add_parser("solve", help="decide whether an equation has a solution")
    p_solve.add_argument("--group", required=True)
    p_solve.add_argument("--arity", type=int, required=True)
    p_solve.add_argument("--method", choices=["dfa", "brute", "both"], default="both")
    p_solve.add_argument("equation")
    p_solve.set_defaults(func=_cmd_eq_solve)

    p_build = eq_sub.add_parser("build-dfa", help="build the reachable automaton")
    p_build.add_argument("--group", required=True)
    p_build.add_argument("--arity", type=int, required=True)
    p_build.add_argument("--minimize", action="store_true")
    p_build.add_argument("--limit", type=int, default=dfa.DEFAULT_STATE_LIMIT)
    p_build.add_argument("--format", choices=["dot", "table"], default="dot")
    p_build.add_argument("-o", "--output")
    p_build.set_defaults(func=_cmd_eq_build_dfa)

    p_enum = eq_sub.add_parser("enumerate", help="list solvable equations by length")
    p_enum.add_argument("--group", required=True)
    p_enum.add_argument("--arity", type=int, required=True)
    p_enum.add_argument("--maxlen", type=int, required=True)
    p_enum.set_defaults(func=_cmd_eq_enumerate)

    p_dove = eq_sub.add_parser(
        "dovetail", help="oracle-backed budgeted search for a solution"
    )
    p_dove.add_argument("--oracle", required=True, help="free:<rank> or group:<file>")
    p_dove.add_argument("--arity", type=int, required=True)
    p_dove.add_argument("--max-steps", type=int, required=True)
    p_dove.add_argument("equation")
    p_dove.set_defaults(func=_cmd_eq_dovetail)

    p_cfl = top.add_parser("cfl", help="ratio languages and pumping refutation")
    cfl_sub = p_cfl.add_subparsers(dest="subcommand", required=True)

    p_pump = cfl_sub.add_parser("pump", help="exhaustive pumping refutation")
    p_pump.add_argument("--set", required=True, help="integers, all or list:<m/n,...>")
    p_pump.add_argument("--p", type=int, required=True)
    p_pump.add_argument("--word")
    p_pump.add_argument("--auto-witness", action="store_true")
    p_pump.add_argument("--tmax", type=int, default=3)
    p_pump.set_defaults(func=_cmd_cfl_pump)

    p_demo = cfl_sub.add_parser("demo-z", help="divisor-pair language with cross-check")
    p_demo.add_argument("--max-m", type=int, required=True)
    p_demo.add_argument("--max-n", type=int, required=True)
    p_demo.set_defaults(func=_cmd_cfl_demo_z)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_POSITIVE
    try:
        return args.func(args)
    except _BUDGET_ERRORS as exc:
        print(f"ERROR {exc}")
        return EXIT_EXHAUSTED
    except GroupEqError as exc:
        print(f"ERROR {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
