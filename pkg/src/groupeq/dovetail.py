"""Budgeted search for solutions given only a word-problem oracle.

The solver never looks inside the group: it enumerates candidate words for
the variables, substitutes them into the equation, and asks an oracle
whether the resulting constant word is the identity, giving the oracle a
step budget that grows round by round.  Any candidate that ever gets a
definite answer keeps it at every larger budget, so a solvable equation is
eventually recognized; an unsolvable one exhausts the budget.

One oracle step is defined as processing one letter, so both bundled
backends answer definitely once the budget reaches the word length and
return Unknown below that.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EquationSyntaxError, SearchBudgetError
from .groups import FreeAlphabet, FreeWord, free_reduce
from .polynomials import Polynomial, gen, interpret, substitute

DEFAULT_TUPLE_CAP = 1_000_000


class Answer(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FiniteGroupOracle:
    """Word-problem oracle backed by table evaluation."""

    group: object

    @property
    def alphabet(self):
        return self.group

    def recognize(self, word: Polynomial, budget: int) -> Answer:
        if len(word) > budget:
            return Answer.UNKNOWN
        value = interpret(self.group, word, ())
        return Answer.ACCEPT if value == self.group.identity else Answer.REJECT


@dataclass(frozen=True)
class FreeGroupOracle:
    """Word-problem oracle backed by free reduction."""

    letters: FreeAlphabet

    @property
    def alphabet(self):
        return self.letters

    def recognize(self, word: Polynomial, budget: int) -> Answer:
        if len(word) > budget:
            return Answer.UNKNOWN
        signed = tuple(self.letters.signed_letter(t.index) for t in word.tokens)
        reduced = free_reduce(FreeWord(self.letters.rank, signed))
        return Answer.ACCEPT if len(reduced) == 0 else Answer.REJECT


def finite_group_oracle(group) -> FiniteGroupOracle:
    return FiniteGroupOracle(group)


def free_group_oracle(rank: int, names: Optional[Sequence[str]] = None) -> FreeGroupOracle:
    return FreeGroupOracle(FreeAlphabet(rank, names))


@dataclass(frozen=True)
class DovetailResult:
    """Either a witness tuple of words (element indices) found at round
    ``steps``, or exhaustion at ``steps`` == the round cap."""

    solved: bool
    witness: Optional[tuple]
    steps: int

    def witness_labels(self, alphabet) -> tuple:
        if self.witness is None:
            raise ValueError("no witness: search was exhausted")
        return tuple(
            " ".join(alphabet.label(i) for i in word) for word in self.witness
        )


def _words_up_to(letters: Sequence[int], max_len: int) -> list:
    """words_by_length[l]: all length-l words over the letters, in the
    order the letters were declared (the canonical letter order)."""
    return [
        [tuple(w) for w in itertools.product(letters, repeat=l)]
        for l in range(max_len + 1)
    ]


def _candidate_count(num_letters: int, arity: int, max_len: int) -> int:
    per_word = sum(num_letters**l for l in range(max_len + 1))
    return per_word**arity


def dovetail_solve(
    oracle,
    arity: int,
    p: Polynomial,
    max_steps: int,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> DovetailResult:
    """Interleave word enumeration with growing oracle budgets.

    Round m considers every tuple of words of length <= m per component, in
    total-length-then-lexicographic order (the empty word is always
    included), asking the oracle with budget m.  The first accepted tuple in
    that order at the smallest accepting round is returned.  Tuples with a
    definite answer are not re-asked at later rounds; budget monotonicity
    makes that sound.
    """
    if max_steps < 1:
        raise SearchBudgetError("max_steps must be at least 1")
    if p.arity > arity:
        raise EquationSyntaxError(
            f"equation of arity {p.arity} searched at arity {arity}"
        )
    alphabet = oracle.alphabet
    letters = list(alphabet.generators)
    rejected: set = set()

    for m in range(1, max_steps + 1):
        count = _candidate_count(len(letters), arity, m)
        if count > tuple_cap:
            raise SearchBudgetError(
                f"round {m} would enumerate {count} tuples over "
                f"{len(letters)} letters at arity {arity}, above the cap of "
                f"{tuple_cap}"
            )
        words_by_length = _words_up_to(letters, m)
        for total in range(arity * m + 1):
            for lens in _compositions(total, arity, m):
                pools = [words_by_length[l] for l in lens]
                for combo in itertools.product(*pools):
                    if combo in rejected:
                        continue
                    word = substitute(
                        alphabet, p, [[gen(i) for i in w] for w in combo]
                    )
                    answer = oracle.recognize(word, m)
                    if answer is Answer.ACCEPT:
                        return DovetailResult(True, combo, m)
                    if answer is Answer.REJECT:
                        rejected.add(combo)
    return DovetailResult(False, None, max_steps)


def _compositions(total: int, parts: int, max_part: int):
    """All ways to split ``total`` into ``parts`` ordered pieces <= max_part,
    in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, max_part) + 1):
        for rest in _compositions(total - first, parts - 1, max_part):
            yield (first,) + rest
