import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from groupeq.brute import solve_brute
from groupeq.dovetail import (
    Answer,
    dovetail_solve,
    finite_group_oracle,
    free_group_oracle,
)
from groupeq.errors import SearchBudgetError
from groupeq.groups import cyclic_group
from groupeq.polynomials import (
    Polynomial,
    canonical_alphabet,
    gen,
    interpret,
    parse_polynomial,
    substitute,
)

Z2 = cyclic_group(2)
Z3 = cyclic_group(3)


def test_finite_oracle_examples():
    orc = finite_group_oracle(Z2)
    aa = parse_polynomial("a a", Z2, 0)
    a = parse_polynomial("a", Z2, 0)
    assert orc.recognize(aa, 2) is Answer.ACCEPT
    assert orc.recognize(a, 1) is Answer.REJECT
    assert orc.recognize(aa, 1) is Answer.UNKNOWN


def test_free_oracle_examples():
    orc = free_group_oracle(1, names=("c",))
    fa = orc.alphabet
    cc = parse_polynomial("c c^-1", fa, 0)
    c = parse_polynomial("c", fa, 0)
    cccc = parse_polynomial("c c c^-1 c^-1", fa, 0)
    assert orc.recognize(cc, 2) is Answer.ACCEPT
    assert orc.recognize(c, 1) is Answer.REJECT
    assert orc.recognize(cccc, 2) is Answer.UNKNOWN
    assert orc.recognize(cccc, 4) is Answer.ACCEPT


@given(st.lists(st.integers(min_value=0, max_value=1), max_size=6),
       st.integers(min_value=1, max_value=10))
def test_budget_monotonicity(word_codes, budget):
    orc_f = finite_group_oracle(Z3)
    p = Polynomial(0, tuple(gen(Z3.generators[c]) for c in word_codes))
    first = orc_f.recognize(p, budget)
    if first is not Answer.UNKNOWN:
        for extra in range(1, 4):
            assert orc_f.recognize(p, budget + extra) is first

    orc_g = free_group_oracle(1)
    q = Polynomial(0, tuple(gen(c) for c in word_codes))
    first = orc_g.recognize(q, budget)
    if first is not Answer.UNKNOWN:
        for extra in range(1, 4):
            assert orc_g.recognize(q, budget + extra) is first


def test_dovetail_free_square_equation():
    # x1 x1 c^-1 c^-1 is solved by x1 = c; the substituted word has length
    # 4, so the oracle answers at round 4
    orc = free_group_oracle(1, names=("c",))
    p = parse_polynomial("x1 x1 c^-1 c^-1", orc.alphabet, 1)
    r = dovetail_solve(orc, 1, p, 8)
    assert r.solved
    assert r.witness == ((0,),)
    assert r.steps == 4
    assert r.witness_labels(orc.alphabet) == ("c",)


def test_dovetail_commutator_with_empty_witness():
    orc = free_group_oracle(1, names=("c",))
    p = parse_polynomial("c x1 c^-1 x1^-1", orc.alphabet, 1)
    r = dovetail_solve(orc, 1, p, 8)
    assert r.solved
    assert r.witness == ((),)
    assert r.steps == 2


def test_dovetail_constant_exhausts():
    orc = free_group_oracle(2)
    p = parse_polynomial("a", orc.alphabet, 1)
    r = dovetail_solve(orc, 1, p, 4)
    assert not r.solved
    assert r.steps == 4
    with pytest.raises(ValueError):
        r.witness_labels(orc.alphabet)


def test_dovetail_finite_group():
    orc = finite_group_oracle(Z2)
    p = parse_polynomial("a x1", Z2, 1)
    r = dovetail_solve(orc, 1, p, 8)
    assert r.solved
    assert r.witness == ((1,),)
    assert r.steps == 2  # substituted word "a a" resolves at budget 2


def test_dovetail_witness_is_first_in_order():
    # x1 x1 is solved by the empty word before any longer word
    orc = finite_group_oracle(Z2)
    p = parse_polynomial("x1 x1", Z2, 1)
    r = dovetail_solve(orc, 1, p, 8)
    assert r.witness == ((),)
    assert r.steps == 1


def test_dovetail_order_breaks_ties_componentwise():
    # a x1 x2 over the rank-1 free group is solved by both (empty, a^-1)
    # and (a^-1, empty) at total length 1; the shorter first component wins
    orc = free_group_oracle(1)
    p = parse_polynomial("a x1 x2", orc.alphabet, 2)
    r = dovetail_solve(orc, 2, p, 6)
    assert r.witness == ((), (1,))
    assert r.steps == 2
    assert r.witness_labels(orc.alphabet) == ("", "a^-1")


def test_dovetail_soundness_recheck():
    orc = finite_group_oracle(Z3)
    toks = canonical_alphabet(Z3, 1)
    for length in range(4):
        for tokens in itertools.product(toks, repeat=length):
            p = Polynomial(1, tokens)
            r = dovetail_solve(orc, 1, p, 6)
            if r.solved:
                words = [[gen(i) for i in w] for w in r.witness]
                out = substitute(Z3, p, words)
                assert orc.recognize(out, r.steps) is Answer.ACCEPT
                assert interpret(Z3, out, ()) == Z3.identity


def test_dovetail_agrees_with_brute_z4():
    # every element of z4 is a word of length < 4 over {a, c}, so a round
    # budget of equation length + order suffices
    group = cyclic_group(4)
    orc = finite_group_oracle(group)
    toks = canonical_alphabet(group, 1)
    for length in range(5):
        for tokens in itertools.product(toks, repeat=length):
            p = Polynomial(1, tokens)
            assert dovetail_solve(orc, 1, p, 8).solved == solve_brute(group, 1, p).found


def test_tuple_cap():
    orc = finite_group_oracle(Z3)
    p = parse_polynomial("a x1 x2", Z3, 2)
    with pytest.raises(SearchBudgetError):
        dovetail_solve(orc, 2, p, 8, tuple_cap=10)


def test_arity_zero():
    orc = finite_group_oracle(Z2)
    assert dovetail_solve(orc, 0, parse_polynomial("a a", Z2, 0), 4).solved
    assert not dovetail_solve(orc, 0, parse_polynomial("a", Z2, 0), 4).solved
