"""Dense evaluation context for equations of a fixed arity over a finite group.

Tuples (g_1, ..., g_n) are addressed by a mixed-radix index with base
``order``: x1 is the most significant digit and xn varies fastest.  For each
token of the canonical alphabet, ``rhs[code]`` holds the element that token
denotes at every tuple index, so one evaluation step is a single gather
``table[values, rhs[code]]``.
"""

from __future__ import annotations

import weakref
from typing import Sequence

import numpy as np

from .errors import CapacityError, EquationSyntaxError
from .polynomials import GEN, VAR, Polynomial, Token, canonical_alphabet, token_label

DEFAULT_MAX_ENTRIES = 10**6

_space_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


class StateSpace:
    """Precomputed indexing data for (group, arity)."""

    def __init__(self, group, arity: int):
        if arity < 0:
            raise EquationSyntaxError("arity must be nonnegative")
        order = group.order
        total = order**arity
        self.group = group
        self.arity = arity
        self.total = total
        self.strides = np.array(
            [order ** (arity - 1 - j) for j in range(arity)], dtype=np.int64
        )
        self.alphabet = canonical_alphabet(group, arity)
        self.labels = tuple(token_label(group, t) for t in self.alphabet)
        self.num_generators = len(group.generators)
        self.generator_elements = np.array(group.generators, dtype=np.int64)
        self._gen_code = {g: c for c, g in enumerate(group.generators)}
        self._rhs = None

    @property
    def rhs(self) -> np.ndarray:
        """Per-token right multipliers, shape (alphabet size, total)."""
        if self._rhs is None:
            order = self.group.order
            idx = np.arange(self.total, dtype=np.int64)
            rows = [
                np.full(self.total, g, dtype=np.int64) for g in self.group.generators
            ]
            for j in range(self.arity):
                comp = (idx // self.strides[j]) % order
                rows.append(comp)
                rows.append(self.group.inverses[comp])
            if rows:
                rhs = np.ascontiguousarray(np.stack(rows))
            else:
                rhs = np.zeros((0, self.total), dtype=np.int64)
            rhs.setflags(write=False)
            self._rhs = rhs
        return self._rhs

    def token_code(self, t: Token) -> int:
        if t.kind == GEN:
            code = self._gen_code.get(t.index)
            if code is None:
                raise EquationSyntaxError(
                    f"element {self.group.label(t.index)!r} is not a generator"
                )
            return code
        if t.index > self.arity:
            raise EquationSyntaxError(
                f"variable x{t.index} exceeds arity {self.arity}"
            )
        base = self.num_generators + 2 * (t.index - 1)
        return base if t.kind == VAR else base + 1

    def encode(self, p: Polynomial) -> np.ndarray:
        """Token codes of an equation, ready for the kernels."""
        return np.array([self.token_code(t) for t in p.tokens], dtype=np.int64)

    def init_values(self) -> np.ndarray:
        """State of the empty word: every tuple maps to the identity."""
        return np.full(self.total, self.group.identity, dtype=np.int64)

    def tuple_of_index(self, t: int) -> tuple:
        order = self.group.order
        return tuple(int(t // s) % order for s in self.strides)

    def index_of_tuple(self, values: Sequence[int]) -> int:
        return int(sum(int(v) * int(s) for v, s in zip(values, self.strides)))


def get_space(group, arity: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> StateSpace:
    """Cached StateSpace for (group, arity); errors out above max_entries."""
    if arity < 0:
        raise EquationSyntaxError("arity must be nonnegative")
    if group.order**arity > max_entries:
        raise CapacityError(
            f"{group.order}^{arity} tuples exceed the cap of {max_entries}"
        )
    per_group = _space_cache.get(group)
    if per_group is None:
        per_group = {}
        _space_cache[group] = per_group
    space = per_group.get(arity)
    if space is None:
        space = StateSpace(group, arity)
        per_group[arity] = space
    return space


def all_words(alphabet_size: int, length: int) -> np.ndarray:
    """All words of the given length as a (count, length) code matrix,
    in lexicographic order of the canonical alphabet."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    if alphabet_size < 1:
        raise CapacityError("cannot enumerate words over an empty alphabet")
    count = alphabet_size**length
    digits = np.unravel_index(
        np.arange(count, dtype=np.int64), (alphabet_size,) * length
    )
    return np.ascontiguousarray(np.stack(digits, axis=1).astype(np.int64))
