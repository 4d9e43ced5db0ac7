"""Deterministic automaton deciding which equations have a solution.

A solver state assigns one group element to every tuple of a fixed arity;
reading a letter right-multiplies each entry by what that letter denotes at
the tuple (a generator by itself, xk by the k-th component, xk^-1 by its
inverse).  Starting from the all-identity state, the state reached after a
word w stores the value of w at every tuple, so w is solvable exactly when
some entry equals the identity.

Membership queries evolve the state vector directly and never materialize
the automaton; :func:`build_reachable_dfa` is the separate, explicit
construction (breadth-first over the canonical alphabet), and
:func:`minimize_dfa` is standard partition refinement.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .errors import EquationSyntaxError, StateLimitError
from .polynomials import Polynomial, Token
from .spaces import DEFAULT_MAX_ENTRIES, StateSpace, get_space

DEFAULT_STATE_LIMIT = 100_000

# above this many entries per state, state labels fall back to a digest
_LABEL_ENTRY_CUTOFF = 4096


@dataclass(frozen=True)
class SolverState:
    """One automaton state: the value vector over all tuples."""

    group: object
    arity: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values.setflags(write=False)


def initial_state(group, arity: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> SolverState:
    """The state of the empty word: constant identity."""
    space = get_space(group, arity, max_entries)
    return SolverState(group, arity, space.init_values())


def step(group, state: SolverState, token: Token) -> SolverState:
    """Read one letter; pure, returns a fresh state."""
    space = get_space(
        group, state.arity, max(DEFAULT_MAX_ENTRIES, state.values.shape[0])
    )
    code = space.token_code(token)
    codes = np.array([code], dtype=np.int64)
    values = kernels.evolve_state(group.table, space.rhs, codes, state.values)
    return SolverState(group, state.arity, values)


def is_accepting(state: SolverState) -> bool:
    """True when some tuple is mapped to the identity."""
    return bool(np.any(state.values == state.group.identity))


def membership(
    group, arity: int, p: Polynomial, max_entries: int = DEFAULT_MAX_ENTRIES
) -> bool:
    """Does the equation have a solution in ``group``?

    Runs the state evolution for the word; O(len(p) * order**arity) time,
    one state vector of memory.
    """
    if p.arity > arity:
        raise EquationSyntaxError(
            f"equation of arity {p.arity} queried at arity {arity}"
        )
    space = get_space(group, arity, max_entries)
    values = kernels.evolve_state(
        group.table, space.rhs, space.encode(p), space.init_values()
    )
    return bool(np.any(values == group.identity))


def batch_membership(group, arity: int, codes_mat: np.ndarray) -> np.ndarray:
    """Vector of membership answers for same-length words given as a code
    matrix over the canonical alphabet."""
    space = get_space(group, arity)
    return kernels.batch_membership(
        group.table,
        space.rhs,
        group.identity,
        space.init_values(),
        np.ascontiguousarray(codes_mat, dtype=np.int64),
    )


# ---------------------------------------------------------------------------
# explicit automaton
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Dfa:
    """An explicit automaton over the canonical token alphabet.

    ``transitions[s, c]`` is the successor of state s on alphabet column c.
    State ids are breadth-first discovery order from the initial state, so
    equal inputs give byte-identical exports.
    """

    alphabet: tuple
    state_labels: tuple
    initial: int
    accepting: frozenset
    transitions: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.transitions.setflags(write=False)
        n = len(self.state_labels)
        if self.transitions.shape != (n, len(self.alphabet)):
            raise ValueError("transition table shape mismatch")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        if any(not 0 <= s < n for s in self.accepting):
            raise ValueError("accepting state out of range")
        if n and (self.transitions.min() < 0 or self.transitions.max() >= n):
            raise ValueError("transition target out of range")

    @property
    def num_states(self) -> int:
        return len(self.state_labels)

    def accepts_codes(self, codes: Sequence[int]) -> bool:
        s = self.initial
        for c in codes:
            s = int(self.transitions[s, c])
        return s in self.accepting

    def accepts(self, labels: Sequence[str]) -> bool:
        cols = {lab: c for c, lab in enumerate(self.alphabet)}
        return self.accepts_codes([cols[lab] for lab in labels])


def _state_label(space: StateSpace, values: np.ndarray) -> str:
    if space.total <= _LABEL_ENTRY_CUTOFF:
        return ",".join(space.group.elements[int(v)] for v in values)
    return "sha1:" + hashlib.sha1(values.tobytes()).hexdigest()[:16]


def build_reachable_dfa(
    group,
    arity: int,
    state_limit: int = DEFAULT_STATE_LIMIT,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> Dfa:
    """Breadth-first construction of the reachable automaton.

    States are deduplicated by their value vectors; the reachable count is
    bounded by the number of functions from tuples to elements, i.e.
    order**(order**arity), though in practice it is far smaller.
    """
    if state_limit < 1:
        raise StateLimitError("state limit must be at least 1", 0)
    space = get_space(group, arity, max_entries)
    table = group.table
    rhs = space.rhs
    num_codes = len(space.alphabet)
    code_arrays = [np.array([c], dtype=np.int64) for c in range(num_codes)]

    init = space.init_values()
    ids = {init.tobytes(): 0}
    vectors = [init]
    rows = []
    queue = deque([0])
    while queue:
        sid = queue.popleft()
        vals = vectors[sid]
        row = np.empty(num_codes, dtype=np.int64)
        for c in range(num_codes):
            nxt = kernels.evolve_state(table, rhs, code_arrays[c], vals)
            key = nxt.tobytes()
            nid = ids.get(key)
            if nid is None:
                nid = len(vectors)
                if nid >= state_limit:
                    raise StateLimitError(
                        f"more than {state_limit} reachable states", nid + 1
                    )
                ids[key] = nid
                vectors.append(nxt)
                queue.append(nid)
            row[c] = nid
        rows.append(row)

    identity = group.identity
    accepting = frozenset(
        i for i, v in enumerate(vectors) if bool(np.any(v == identity))
    )
    return Dfa(
        alphabet=space.labels,
        state_labels=tuple(_state_label(space, v) for v in vectors),
        initial=0,
        accepting=accepting,
        transitions=np.vstack(rows),
    )


def minimize_dfa(dfa: Dfa) -> Dfa:
    """Language-equivalent automaton with the minimal number of states.

    Hopcroft partition refinement after restricting to the reachable part,
    then breadth-first renumbering from the initial state so the result is
    canonical whatever order the refinement ran in.
    """
    num_codes = len(dfa.alphabet)
    # reachable restriction
    reach = [dfa.initial]
    seen = {dfa.initial}
    for s in reach:
        for c in range(num_codes):
            t = int(dfa.transitions[s, c])
            if t not in seen:
                seen.add(t)
                reach.append(t)
    old_ids = sorted(seen)
    remap = {old: i for i, old in enumerate(old_ids)}
    n = len(old_ids)
    trans = np.array(
        [[remap[int(dfa.transitions[old, c])] for c in range(num_codes)] for old in old_ids],
        dtype=np.int64,
    )
    accepting = {remap[s] for s in dfa.accepting if s in seen}

    preds: list = [[[] for _ in range(n)] for _ in range(num_codes)]
    for s in range(n):
        for c in range(num_codes):
            preds[c][trans[s, c]].append(s)

    final = frozenset(accepting)
    nonfinal = frozenset(range(n)) - final
    partition = {b for b in (final, nonfinal) if b}
    work = set()
    if final and nonfinal:
        work.add(final if len(final) <= len(nonfinal) else nonfinal)

    while work:
        splitter = work.pop()
        for c in range(num_codes):
            movers: dict = {}
            block_of = {}
            for block in partition:
                for s in block:
                    block_of[s] = block
            incoming = set()
            for t in splitter:
                incoming.update(preds[c][t])
            for s in incoming:
                movers.setdefault(block_of[s], set()).add(s)
            for block, inside in movers.items():
                if len(inside) == len(block):
                    continue
                part1 = frozenset(inside)
                part2 = block - part1
                partition.remove(block)
                partition.add(part1)
                partition.add(part2)
                if block in work:
                    work.remove(block)
                    work.add(part1)
                    work.add(part2)
                else:
                    work.add(part1 if len(part1) <= len(part2) else part2)

    block_index = {}
    for block in partition:
        for s in block:
            block_index[s] = block
    representative = {block: min(block) for block in partition}

    # canonical renumbering: BFS over blocks from the initial block
    order: list = []
    number: dict = {}
    start = block_index[remap[dfa.initial]]
    number[start] = 0
    order.append(start)
    qi = 0
    while qi < len(order):
        block = order[qi]
        qi += 1
        rep = representative[block]
        for c in range(num_codes):
            nxt = block_index[int(trans[rep, c])]
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)

    m = len(order)
    new_trans = np.empty((m, num_codes), dtype=np.int64)
    labels = []
    new_accepting = set()
    old_labels = [dfa.state_labels[old] for old in old_ids]
    for i, block in enumerate(order):
        rep = representative[block]
        for c in range(num_codes):
            new_trans[i, c] = number[block_index[int(trans[rep, c])]]
        labels.append(old_labels[rep])
        if rep in accepting:
            new_accepting.add(i)
    return Dfa(
        alphabet=dfa.alphabet,
        state_labels=tuple(labels),
        initial=0,
        accepting=frozenset(new_accepting),
        transitions=new_trans,
    )


def export_dfa(dfa: Dfa, format: str) -> str:
    """Render the automaton as a DOT digraph or a tab-separated table."""
    if format == "dot":
        lines = ["digraph dfa {", "  rankdir=LR;", '  start [shape=none, label=""];']
        for s in range(dfa.num_states):
            shape = "doublecircle" if s in dfa.accepting else "circle"
            lines.append(f"  q{s} [shape={shape}];")
        lines.append(f"  start -> q{dfa.initial};")
        for s in range(dfa.num_states):
            for c, lab in enumerate(dfa.alphabet):
                lines.append(
                    f'  q{s} -> q{int(dfa.transitions[s, c])} [label="{lab}"];'
                )
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "table":
        header = "state\t" + "\t".join(dfa.alphabet) + "\taccepting"
        lines = [header]
        for s in range(dfa.num_states):
            cells = [str(s)]
            cells.extend(str(int(dfa.transitions[s, c])) for c in range(len(dfa.alphabet)))
            cells.append("true" if s in dfa.accepting else "false")
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {format!r}")
