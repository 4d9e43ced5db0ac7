"""Sets of positive rationals viewed through the words a^m b^n.

A set Q of positive rationals induces the language of all words a^m b^n
whose ratio m/n lies in Q (both counts must be at least 1).  This module
answers membership, scans for isolated members, builds the large witness
words whose pumps land strictly inside an isolation gap, and refutes the
context-free pumping property exhaustively over all decompositions.

Everything is exact: fractions throughout, no floats except an infinite
spacing marker for sets with a single member in the scan window.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import CapacityError, RationalDomainError

INTEGERS = "integers"
DIVISOR = "divisor"
ALL = "all"
FRACTIONS = "fractions"

MAX_WITNESS_LENGTH = 20_000

_AB_WORD = re.compile(r"^(a*)(b*)$")


@dataclass(frozen=True)
class RationalSet:
    """A finitely described set of positive rationals.

    Kinds: the positive integers; the same set presented through the
    divisibility test on (m, n) pairs; all positive rationals (a control
    whose language is plainly regular); or an explicit finite list of
    fractions, kept in lowest terms by construction.
    """

    kind: str
    fractions: Optional[frozenset] = None

    @classmethod
    def positive_integers(cls) -> "RationalSet":
        return cls(INTEGERS)

    @classmethod
    def divisor_predicate(cls) -> "RationalSet":
        return cls(DIVISOR)

    @classmethod
    def all_rationals(cls) -> "RationalSet":
        return cls(ALL)

    @classmethod
    def explicit(cls, values: Iterable) -> "RationalSet":
        fracs = frozenset(Fraction(v) for v in values)
        if any(q <= 0 for q in fracs):
            raise RationalDomainError("explicit sets may contain positives only")
        return cls(FRACTIONS, fracs)

    def contains(self, q: Fraction) -> bool:
        if q <= 0:
            return False
        if self.kind in (INTEGERS, DIVISOR):
            return q.denominator == 1
        if self.kind == ALL:
            return True
        return q in self.fractions

    @property
    def name(self) -> str:
        if self.kind == FRACTIONS:
            return "{" + ", ".join(str(q) for q in sorted(self.fractions)) + "}"
        return self.kind


def lang_member(q_set: RationalSet, a_count: int, b_count: int) -> bool:
    """Is a^m b^n in the language of the set?  Needs m >= 1 and n >= 1."""
    if a_count < 1 or b_count < 1:
        return False
    if q_set.kind == DIVISOR:
        return a_count % b_count == 0
    return q_set.contains(Fraction(a_count, b_count))


def word_member(q_set: RationalSet, word: str) -> bool:
    """Exact-shape membership: the word must match a^m b^n with no mixing."""
    m = _AB_WORD.match(word)
    if not m:
        return False
    return lang_member(q_set, len(m.group(1)), len(m.group(2)))


# ---------------------------------------------------------------------------
# isolated members
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsolatedPoint:
    value: Fraction
    spacing: object  # Fraction, or math.inf when no other member was seen


@dataclass(frozen=True)
class IsolationReport:
    """Members isolated relative to a finite scan window.

    The scan looks at all fractions with denominator up to
    ``window_denom_bound`` and value up to ``value_bound`` plus a margin; a
    candidate counts as isolated only when the nearest other member in that
    window is farther than 1/window_denom_bound, the window's own
    granularity.  Isolation is certified relative to this window only.
    """

    points: tuple
    denom_bound: int
    value_bound: int
    window_denom_bound: int


def isolated_points(
    q_set: RationalSet, denom_bound: int, value_bound: int, widen_factor: int = 4
) -> IsolationReport:
    """Scan for isolated members with denominator <= denom_bound and value
    <= value_bound."""
    if denom_bound < 1 or value_bound < 1:
        raise RationalDomainError("bounds must be at least 1")
    if widen_factor < 2:
        raise RationalDomainError("widen_factor must be at least 2")
    window_denom = denom_bound * widen_factor
    threshold = Fraction(1, window_denom)
    value_margin = value_bound + 2

    members = set()
    for den in range(1, window_denom + 1):
        for num in range(1, value_margin * den + 1):
            q = Fraction(num, den)
            if q_set.contains(q):
                members.add(q)

    points = []
    for q in sorted(members):
        if q.denominator > denom_bound or q > value_bound:
            continue
        others = [abs(other - q) for other in members if other != q]
        spacing = min(others) if others else math.inf
        if spacing > threshold:
            points.append(IsolatedPoint(q, spacing))
    return IsolationReport(
        tuple(points), denom_bound, value_bound, window_denom
    )


# ---------------------------------------------------------------------------
# pumping witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PumpingWitness:
    """Witness word a^(multiplier*M) b^(multiplier*N) for an isolated M/N."""

    multiplier: int
    a_count: int
    b_count: int

    @property
    def word(self) -> str:
        return "a" * self.a_count + "b" * self.b_count


def pumping_witness_params(
    numerator: int,
    denominator: int,
    isolation_gap,
    pumping_length: int,
    max_word_length: int = MAX_WITNESS_LENGTH,
) -> PumpingWitness:
    """Multiplier and witness word for an isolated member M/N.

    The multiplier is ceil((M+N)^2 / (gap * N^2)) + 1, which makes every
    single pump move the ratio by less than the isolation gap while keeping
    it off M/N itself.  Requires M/N in lowest terms and M + N exceeding
    the pumping length.
    """
    if numerator < 1 or denominator < 1:
        raise RationalDomainError("numerator and denominator must be positive")
    if math.gcd(numerator, denominator) != 1:
        raise RationalDomainError(
            f"{numerator}/{denominator} is not in lowest terms"
        )
    if numerator + denominator <= pumping_length:
        raise RationalDomainError(
            f"need numerator + denominator > pumping length "
            f"({numerator}+{denominator} <= {pumping_length})"
        )
    if isolation_gap == math.inf:
        multiplier = 1
    else:
        gap = Fraction(isolation_gap)
        if gap <= 0:
            raise RationalDomainError("isolation gap must be positive")
        square = Fraction((numerator + denominator) ** 2, denominator**2)
        multiplier = math.ceil(square / gap) + 1
    a_count = multiplier * numerator
    b_count = multiplier * denominator
    if a_count + b_count > max_word_length:
        raise CapacityError(
            f"witness of length {a_count + b_count} exceeds the cap of "
            f"{max_word_length}"
        )
    return PumpingWitness(multiplier, a_count, b_count)


def choose_isolated_point(
    q_set: RationalSet,
    pumping_length: int,
    denom_bound: int = 8,
    value_bound: Optional[int] = None,
) -> IsolatedPoint:
    """Least isolated member with numerator + denominator above the pumping
    length, scanning values up to a bound derived from it."""
    if value_bound is None:
        value_bound = pumping_length + 2
    report = isolated_points(q_set, denom_bound, value_bound)
    for point in report.points:
        if point.value.numerator + point.value.denominator > pumping_length:
            return point
    raise RationalDomainError(
        f"no isolated member with numerator + denominator > {pumping_length} "
        f"found (denominators <= {denom_bound}, values <= {value_bound})"
    )


def auto_pumping_witness(
    q_set: RationalSet, pumping_length: int, denom_bound: int = 8
) -> PumpingWitness:
    """Witness construction end to end: pick an isolated member, apply the
    multiplier formula."""
    point = choose_isolated_point(q_set, pumping_length, denom_bound)
    return pumping_witness_params(
        point.value.numerator,
        point.value.denominator,
        point.spacing,
        pumping_length,
    )


# ---------------------------------------------------------------------------
# exhaustive refutation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """One split s = u v x y z by its boundaries, with the recorded pump
    exponent and whether the pumped word stayed in the language."""

    u_end: int
    v_end: int
    x_end: int
    y_end: int
    exponent: int
    in_language: bool


@dataclass(frozen=True)
class RefutationReport:
    """Every legal decomposition of the word with its verdict.

    ``refuted`` is True exactly when every decomposition has a recorded
    exponent whose pump leaves the language.  Each line can be replayed
    through :func:`word_member` independently.
    """

    set_name: str
    pumping_length: int
    word: str
    t_max: int
    decompositions: tuple
    refuted: bool

    def format_lines(self) -> list:
        n = len(self.word)
        lines = []
        for d in self.decompositions:
            verdict = "in" if d.in_language else "out"
            lines.append(
                f"u=[0,{d.u_end}) v=[{d.u_end},{d.v_end}) "
                f"x=[{d.v_end},{d.x_end}) y=[{d.x_end},{d.y_end}) "
                f"z=[{d.y_end},{n}) t={d.exponent} verdict={verdict}"
            )
        lines.append(
            f"REFUTED p={self.pumping_length}" if self.refuted else "NOT-REFUTED"
        )
        return lines

    def __str__(self) -> str:
        return "\n".join(self.format_lines())


def pumped_word(word: str, d: Decomposition, t: int) -> str:
    """u v^t x y^t z, built literally; used to replay report lines."""
    u = word[: d.u_end]
    v = word[d.u_end : d.v_end]
    x = word[d.v_end : d.x_end]
    y = word[d.x_end : d.y_end]
    z = word[d.y_end :]
    return u + v * t + x + y * t + z


def _segment_a_count(lo: int, hi: int, a_total: int) -> int:
    return max(0, min(hi, a_total) - lo)


def refute_pumping(
    q_set: RationalSet, pumping_length: int, word: str, t_max: int = 3
) -> RefutationReport:
    """Try every decomposition s = uvxyz with |vxy| <= p and |vy| >= 1.

    For each, search t in 2..t_max for a pump that leaves the language
    (t = 1 reproduces the word itself and deletion is not used, so a
    pumpable split is one that survives every repetition).  Verdicts are
    computed arithmetically from segment letter counts; a pump of a
    boundary-straddling piece creates 'ba' and is out by shape.
    Decompositions are listed in lexicographic (|u|, |v|, |x|, |y|) order.
    """
    if pumping_length < 1:
        raise RationalDomainError("pumping length must be at least 1")
    shape = _AB_WORD.match(word)
    if not shape:
        raise RationalDomainError("word is not of the shape a^m b^n")
    a_total, b_total = len(shape.group(1)), len(shape.group(2))
    if not lang_member(q_set, a_total, b_total):
        raise RationalDomainError(
            f"word a^{a_total} b^{b_total} is not in the language of {q_set.name}"
        )
    n = len(word)
    if n < pumping_length:
        raise RationalDomainError(
            f"word of length {n} is shorter than the pumping length {pumping_length}"
        )

    records = []
    refuted = True
    for i in range(n + 1):
        for vlen in range(pumping_length + 1):
            j = i + vlen
            if j > n:
                break
            v_a = _segment_a_count(i, j, a_total)
            v_b = vlen - v_a
            v_mixed = v_a > 0 and v_b > 0
            for xlen in range(pumping_length - vlen + 1):
                k = j + xlen
                if k > n:
                    break
                for ylen in range(pumping_length - vlen - xlen + 1):
                    l = k + ylen
                    if l > n:
                        break
                    if vlen + ylen == 0:
                        continue
                    y_a = _segment_a_count(k, l, a_total)
                    y_b = ylen - y_a
                    y_mixed = y_a > 0 and y_b > 0
                    pump_a = v_a + y_a
                    pump_b = v_b + y_b

                    failing = None
                    for t in range(2, t_max + 1):
                        if v_mixed or y_mixed:
                            member = False
                        else:
                            member = lang_member(
                                q_set,
                                a_total + (t - 1) * pump_a,
                                b_total + (t - 1) * pump_b,
                            )
                        if not member:
                            failing = t
                            break
                    if failing is None:
                        records.append(Decomposition(i, j, k, l, t_max, True))
                        refuted = False
                    else:
                        records.append(Decomposition(i, j, k, l, failing, False))

    return RefutationReport(
        q_set.name, pumping_length, word, t_max, tuple(records), refuted
    )


# ---------------------------------------------------------------------------
# the integer instance
# ---------------------------------------------------------------------------

def divisor_pairs(max_a: int, max_b: int) -> set:
    """Pairs (m, n) with n dividing m, up to the bounds.

    These are exactly the exponent pairs for which the one-variable
    equation c^m x^n over the additive integers has a solution: an integer
    b with m + n*b = 0 exists precisely when n divides m.
    """
    if max_a < 1 or max_b < 1:
        raise RationalDomainError("bounds must be at least 1")
    return {
        (m, n)
        for n in range(1, max_b + 1)
        for m in range(n, max_a + 1, n)
    }


def divisor_pairs_by_search(max_a: int, max_b: int) -> set:
    """The same set by brute integer search for b in [-max_a, max_a]; the
    independent cross-check for :func:`divisor_pairs`."""
    if max_a < 1 or max_b < 1:
        raise RationalDomainError("bounds must be at least 1")
    out = set()
    for m in range(1, max_a + 1):
        for n in range(1, max_b + 1):
            if any(m + n * b == 0 for b in range(-max_a, max_a + 1)):
                out.add((m, n))
    return out
