"""Ground-truth solving by exhaustive enumeration of all tuples.

This is the independent oracle the automaton route is validated against:
it evaluates each equation per tuple, right to left with left
multiplication, instead of folding a state vector over the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import CapacityError
from .polynomials import Polynomial, serialize
from .spaces import all_words, get_space

DEFAULT_MAX_TUPLES = 10**7
_BATCH_CELL_CAP = 1 << 22


@dataclass(frozen=True)
class SolutionReport:
    """Outcome of a brute-force solve.

    ``witness`` holds element labels for x1..xn, and is the least solving
    tuple in mixed-radix order (x1 most significant).
    """

    found: bool
    witness: Optional[tuple]


def _space_for_brute(group, arity: int, max_tuples: int):
    if group.order**arity > max_tuples:
        raise CapacityError(
            f"{group.order}^{arity} tuples exceed the enumeration cap of {max_tuples}"
        )
    return get_space(group, arity, max_entries=max(max_tuples, 1))


def solve_brute(
    group, arity: int, p: Polynomial, max_tuples: int = DEFAULT_MAX_TUPLES
) -> SolutionReport:
    """Scan all tuples in mixed-radix order; report the first solution."""
    space = _space_for_brute(group, arity, max_tuples)
    codes = space.encode(p).reshape(1, -1)
    first = kernels.batch_first_witness(
        group.table,
        group.inverses,
        space.generator_elements,
        group.order,
        arity,
        space.strides,
        group.identity,
        np.ascontiguousarray(codes),
    )[0]
    if first < 0:
        return SolutionReport(False, None)
    witness = tuple(group.elements[g] for g in space.tuple_of_index(int(first)))
    return SolutionReport(True, witness)


def batch_first_witness(group, arity: int, codes_mat: np.ndarray) -> np.ndarray:
    """First solving tuple index per same-length word, or -1; the brute
    route, for cross-validation against the automaton route."""
    space = get_space(group, arity)
    return kernels.batch_first_witness(
        group.table,
        group.inverses,
        space.generator_elements,
        group.order,
        arity,
        space.strides,
        group.identity,
        np.ascontiguousarray(codes_mat, dtype=np.int64),
    )


def enumerate_language(
    group, arity: int, max_len: int, max_words: int = DEFAULT_MAX_TUPLES
) -> list:
    """All solvable equations of length <= max_len, in length-then-lex
    order of the canonical alphabet, as equation strings."""
    space = get_space(group, arity)
    num_codes = len(space.alphabet)
    if num_codes == 0 and max_len > 0:
        raise CapacityError("empty alphabet")
    if num_codes > 0 and num_codes**max_len > max_words:
        raise CapacityError(
            f"{num_codes}^{max_len} words exceed the cap of {max_words}"
        )
    out = []
    for length in range(max_len + 1):
        mat = all_words(max(num_codes, 1), length)
        rows_per_chunk = max(1, _BATCH_CELL_CAP // max(space.total, 1))
        for start in range(0, mat.shape[0], rows_per_chunk):
            chunk = mat[start : start + rows_per_chunk]
            solvable = batch_first_witness(group, arity, chunk) >= 0
            for row, ok in zip(chunk, solvable):
                if ok:
                    tokens = tuple(space.alphabet[int(c)] for c in row)
                    out.append(serialize(group, Polynomial(arity, tokens)))
    return out
