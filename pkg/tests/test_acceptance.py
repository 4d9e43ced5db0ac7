"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as the
criteria complete.  Every expected value here is either computed by an
independent route inside the test or was derived by hand (small Cayley
tables, the multiplier formula, integer divisibility).
"""

import itertools

import numpy as np

from groupeq.brute import batch_first_witness, solve_brute
from groupeq.dfa import batch_membership, build_reachable_dfa, membership
from groupeq.dovetail import dovetail_solve, finite_group_oracle
from groupeq.groups import cyclic_group
from groupeq.polynomials import Polynomial, canonical_alphabet, gen, interpret, substitute
from groupeq.rationals import (
    RationalSet,
    auto_pumping_witness,
    divisor_pairs,
    divisor_pairs_by_search,
    lang_member,
    pumping_witness_params,
    refute_pumping,
)
from groupeq.spaces import all_words, get_space

from conftest import make_corpus


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}")


def test_criterion_1_oracle_equivalence():
    """Automaton membership equals brute solvability on every equation of
    length <= 6, arities 1 and 2, over the whole corpus."""
    mismatches = 0
    words_checked = 0
    for group in make_corpus():
        for arity in (1, 2):
            space = get_space(group, arity)
            num_codes = len(space.alphabet)
            for length in range(7):
                mat = all_words(num_codes, length)
                via_dfa = batch_membership(group, arity, mat)
                via_brute = batch_first_witness(group, arity, mat) >= 0
                mismatches += int(np.count_nonzero(via_dfa != via_brute))
                words_checked += mat.shape[0]
    ok = mismatches == 0
    _report(1, ok, f"oracle equivalence on {words_checked} equations, "
                   f"{mismatches} mismatches")
    assert ok


def test_criterion_2_state_bound():
    checked = []
    ok = True
    for group in make_corpus():
        for arity in (1, 2):
            bound = group.order ** (arity * group.order)
            if bound > 10**5:
                continue
            d = build_reachable_dfa(group, arity)
            checked.append((group.name, arity, d.num_states, bound))
            if d.num_states > bound:
                ok = False

    z2 = cyclic_group(2)
    d = build_reachable_dfa(z2, 1)
    exact = d.num_states == 4 and len(d.accepting) == 3
    ok = ok and exact
    _report(2, ok, f"state bounds on {len(checked)} instances "
                   f"(z2 arity 1: {d.num_states} states, "
                   f"{len(d.accepting)} accepting)")
    assert ok, checked


def test_criterion_3_variable_free_words_are_the_word_problem():
    """With no variables, membership is exactly 'evaluates to identity'."""
    mismatches = 0
    words_checked = 0
    for group in make_corpus():
        gens = list(group.generators)
        for length in range(9):
            for letters in itertools.product(gens, repeat=length):
                p = Polynomial(0, tuple(gen(i) for i in letters))
                lhs = membership(group, 0, p)
                rhs = interpret(group, p, ()) == group.identity
                mismatches += int(lhs != rhs)
                words_checked += 1
    ok = mismatches == 0
    _report(3, ok, f"word-problem agreement on {words_checked} variable-free "
                   f"words, {mismatches} mismatches")
    assert ok


def test_criterion_4_dovetail_soundness_and_completeness():
    mismatches = 0
    solved_checked = 0
    checked = 0
    for group in (cyclic_group(2), cyclic_group(3)):
        oracle = finite_group_oracle(group)
        toks = canonical_alphabet(group, 1)
        for length in range(5):
            for tokens in itertools.product(toks, repeat=length):
                p = Polynomial(1, tokens)
                result = dovetail_solve(oracle, 1, p, 8)
                expected = solve_brute(group, 1, p)
                checked += 1
                if result.solved != expected.found:
                    mismatches += 1
                    continue
                if result.solved:
                    words = [[gen(i) for i in w] for w in result.witness]
                    out = substitute(group, p, words)
                    if interpret(group, out, ()) != group.identity:
                        mismatches += 1
                    solved_checked += 1
    ok = mismatches == 0
    _report(4, ok, f"dovetail agreement on {checked} equations "
                   f"({solved_checked} witnesses re-verified), "
                   f"{mismatches} mismatches")
    assert ok


def test_criterion_5_pumping_refutation_and_control():
    integers = RationalSet.positive_integers()
    refuted_all = True
    for p in range(1, 7):
        witness = auto_pumping_witness(integers, p)
        report = refute_pumping(integers, p, witness.word, t_max=2)
        if not report.refuted:
            refuted_all = False

    control = RationalSet.all_rationals()
    over_refutations = 0
    control_checked = 0
    for p in range(1, 5):
        for total in range(2, 13):
            for a_count in range(1, total):
                b_count = total - a_count
                if b_count < 1 or total < p:
                    continue
                word = "a" * a_count + "b" * b_count
                control_checked += 1
                if refute_pumping(control, p, word, t_max=3).refuted:
                    over_refutations += 1
    ok = refuted_all and over_refutations == 0
    _report(5, ok, f"witnesses refuted for p=1..6; control not refuted on "
                   f"{control_checked} words, {over_refutations} over-refutations")
    assert ok


def test_criterion_6_witness_formula_values():
    w1 = pumping_witness_params(3, 1, 1, 2)
    w2 = pumping_witness_params(1, 1, 1, 1)
    ok = (
        w1.multiplier == 17
        and w1.word == "a" * 51 + "b" * 17
        and w2.multiplier == 5
        and w2.word == "a" * 5 + "b" * 5
    )
    _report(6, ok, f"multiplier formula gives ({w1.multiplier}, a^{w1.a_count} "
                   f"b^{w1.b_count}) and ({w2.multiplier}, a^{w2.a_count} "
                   f"b^{w2.b_count})")
    assert ok


def test_criterion_7_divisor_language_cross_check():
    pairs = divisor_pairs(20, 10)
    by_divisibility = {
        (m, n)
        for m in range(1, 21)
        for n in range(1, 11)
        if m % n == 0
    }
    by_search = divisor_pairs_by_search(20, 10)
    by_predicate = {
        (m, n)
        for m in range(1, 21)
        for n in range(1, 11)
        if lang_member(RationalSet.divisor_predicate(), m, n)
    }
    ok = pairs == by_divisibility == by_search == by_predicate
    _report(7, ok, f"divisor language on 20x10 grid, {len(pairs)} members, "
                   f"four routes agree: {ok}")
    assert ok
