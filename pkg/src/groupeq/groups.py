"""Finite groups given by Cayley tables, plus free-group words.

A group is loaded from a small line-oriented text format (see
:func:`load_group`) or built with one of the constructors at the bottom of
this module.  Elements are dense integer indices 0..order-1; string labels
are kept only for I/O.  Every group is validated exhaustively on
construction (full associativity check, two-sided identity and inverses,
symmetric generating set that generates the whole group) and is immutable
afterwards, so instances can be shared freely between threads.

The free-group side is deliberately tiny: :class:`FreeWord` with
:func:`free_reduce` is the word-problem primitive, and :class:`FreeAlphabet`
exposes the letters of a free group in the same shape as a finite group's
generating set so equations can be parsed over either.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CapacityError,
    GeneratingSetError,
    GroupParseError,
    InvalidGroupError,
)

# Full O(order^3) associativity validation is required at load time, so
# refuse anything larger than this outright.
ASSOCIATIVITY_CAP = 256

# Labels that would collide with variable tokens (x1, x2^-1, ...) in the
# equation syntax are rejected at load time.
_VARIABLE_LIKE = re.compile(r"^x[0-9]+(\^-1)?$")
_LABEL_FORBIDDEN = set(" \t\r\n#:")

_LETTER_POOL = "abcdfghijklmnopqrstuvwyz"  # skips 'e' (identity) and 'x' (variables)


def _check_label(label: str) -> str:
    if not label:
        raise InvalidGroupError("element labels must be nonempty")
    if any(ch in _LABEL_FORBIDDEN for ch in label):
        raise InvalidGroupError(f"label {label!r} contains whitespace, '#' or ':'")
    if _VARIABLE_LIKE.match(label):
        raise InvalidGroupError(
            f"label {label!r} collides with variable token syntax x<k>/x<k>^-1"
        )
    return label


class FiniteGroup:
    """A finite group: labels, Cayley table, inverses and a generating set.

    ``table[g, h]`` is the index of the product g*h.  ``generators`` holds
    element indices in the order they were declared; that order is the
    canonical alphabet order everywhere else in the package.
    """

    def __init__(
        self,
        name: str,
        elements: Sequence[str],
        identity: int,
        table,
        generators: Sequence[int],
    ):
        self.name = str(name)
        self.elements = tuple(_check_label(str(l)) for l in elements)
        order = len(self.elements)
        if order == 0:
            raise InvalidGroupError("a group needs at least one element")
        if len(set(self.elements)) != order:
            raise InvalidGroupError("element labels must be distinct")
        if order > ASSOCIATIVITY_CAP:
            raise CapacityError(
                f"group of order {order} exceeds the validation cap "
                f"of {ASSOCIATIVITY_CAP}"
            )
        self.order = order

        table = np.asarray(table, dtype=np.int64)
        if table.shape != (order, order):
            raise InvalidGroupError(
                f"table has shape {table.shape}, expected {(order, order)}"
            )
        if table.min() < 0 or table.max() >= order:
            raise InvalidGroupError("table entries out of range")
        self.table = table

        if not 0 <= identity < order:
            raise InvalidGroupError("identity index out of range")
        self.identity = int(identity)

        self._validate_axioms()
        self.inverses = self._compute_inverses()

        gens = tuple(int(g) for g in generators)
        if len(set(gens)) != len(gens):
            raise GeneratingSetError("generating set contains duplicates")
        if any(not 0 <= g < order for g in gens):
            raise GeneratingSetError("generator index out of range")
        for g in gens:
            if int(self.inverses[g]) not in gens:
                raise GeneratingSetError(
                    f"asymmetric generating set: inverse of "
                    f"{self.elements[g]!r} is {self.elements[self.inverses[g]]!r}, "
                    f"which is not a generator"
                )
        self.generators = gens
        if self._closure(gens) != set(range(order)):
            raise GeneratingSetError("generating set does not generate the group")

        self._index = {label: i for i, label in enumerate(self.elements)}
        self.table.setflags(write=False)
        self.inverses.setflags(write=False)

    def _validate_axioms(self) -> None:
        t = self.table
        e = self.identity
        n = self.order
        idx = np.arange(n)
        if not (np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)):
            raise InvalidGroupError(
                f"{self.elements[e]!r} is not a two-sided identity"
            )
        # (g*h)*k == g*(h*k), one row of g at a time to bound memory.
        for g in range(n):
            if not np.array_equal(t[t[g]], t[g][t]):
                raise InvalidGroupError(
                    f"multiplication is not associative (row {self.elements[g]!r})"
                )

    def _compute_inverses(self) -> np.ndarray:
        t = self.table
        e = self.identity
        inv = np.empty(self.order, dtype=np.int64)
        for g in range(self.order):
            hits = np.flatnonzero(t[g] == e)
            if hits.size != 1 or t[hits[0], g] != e:
                raise InvalidGroupError(
                    f"{self.elements[g]!r} has no two-sided inverse"
                )
            inv[g] = hits[0]
        return inv

    def _closure(self, gens: Iterable[int]) -> set:
        seen = {self.identity, *gens}
        frontier = list(seen)
        while frontier:
            g = frontier.pop()
            for h in tuple(seen):
                for p in (int(self.table[g, h]), int(self.table[h, g])):
                    if p not in seen:
                        seen.add(p)
                        frontier.append(p)
        return seen

    # -- basic operations ------------------------------------------------

    def mul(self, g: int, h: int) -> int:
        """Product g*h by table lookup."""
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        """The unique h with g*h = h*g = identity."""
        return int(self.inverses[g])

    def element_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r} in group {self.name!r}")

    def label(self, g: int) -> str:
        return self.elements[g]

    # -- generating-set surface shared with FreeAlphabet ------------------

    @property
    def generator_labels(self) -> tuple:
        return tuple(self.elements[g] for g in self.generators)

    def generator_index(self, label: str) -> Optional[int]:
        """Element index of the generator with this label, or None."""
        i = self._index.get(label)
        if i is None or i not in self.generators:
            return None
        return i

    def generator_inverse(self, g: int) -> int:
        return int(self.inverses[g])

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


# ---------------------------------------------------------------------------
# group file format
# ---------------------------------------------------------------------------

def _logical_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def load_group(text: str) -> FiniteGroup:
    """Parse a group from its text description.

    The format is line oriented; blank lines and ``#`` comments are ignored::

        group <name>
        elements <label> <label> ...
        identity <label>
        table
        <label>: <label> <label> ...   # products g*h in element order
        ...
        generators <label> <label> ...
    """
    lines = list(_logical_lines(text))
    pos = 0

    def take(keyword: str) -> list:
        nonlocal pos
        if pos >= len(lines):
            raise GroupParseError(f"unexpected end of input, expected {keyword!r}")
        parts = lines[pos].split()
        if parts[0] != keyword:
            raise GroupParseError(
                f"expected {keyword!r}, got {lines[pos]!r} (line {pos + 1})"
            )
        pos += 1
        return parts[1:]

    name_parts = take("group")
    if len(name_parts) != 1:
        raise GroupParseError("'group' line must carry exactly one name")
    name = name_parts[0]

    labels = take("elements")
    if not labels:
        raise GroupParseError("'elements' line lists no elements")
    if len(set(labels)) != len(labels):
        raise GroupParseError("duplicate element label")
    index = {label: i for i, label in enumerate(labels)}

    ident = take("identity")
    if len(ident) != 1 or ident[0] not in index:
        raise GroupParseError("'identity' must name one declared element")

    if take("table"):
        raise GroupParseError("'table' line takes no arguments")

    table = np.full((len(labels), len(labels)), -1, dtype=np.int64)
    for _ in range(len(labels)):
        if pos >= len(lines):
            raise GroupParseError("table has fewer rows than elements")
        parts = lines[pos].split()
        pos += 1
        row_label = parts[0]
        if not row_label.endswith(":"):
            raise GroupParseError(f"table row {parts[0]!r} must end with ':'")
        row_label = row_label[:-1]
        if row_label not in index:
            raise GroupParseError(f"table row for unknown element {row_label!r}")
        g = index[row_label]
        if table[g, 0] != -1:
            raise GroupParseError(f"duplicate table row for {row_label!r}")
        entries = parts[1:]
        if len(entries) != len(labels):
            raise GroupParseError(
                f"table row {row_label!r} has {len(entries)} entries, "
                f"expected {len(labels)}"
            )
        for h, lab in enumerate(entries):
            if lab not in index:
                raise GroupParseError(
                    f"unknown element {lab!r} in table row {row_label!r}"
                )
            table[g, h] = index[lab]

    gen_labels = take("generators")
    if not gen_labels:
        raise GroupParseError("'generators' line lists no generators")
    for lab in gen_labels:
        if lab not in index:
            raise GroupParseError(f"unknown generator label {lab!r}")

    if pos != len(lines):
        raise GroupParseError(f"trailing input: {lines[pos]!r}")

    return FiniteGroup(
        name,
        labels,
        index[ident[0]],
        table,
        [index[lab] for lab in gen_labels],
    )


def format_group_file(group: FiniteGroup) -> str:
    """Render a group in the file format accepted by :func:`load_group`."""
    out = [f"group {group.name}"]
    out.append("elements " + " ".join(group.elements))
    out.append(f"identity {group.elements[group.identity]}")
    out.append("table")
    for g in range(group.order):
        row = " ".join(group.elements[int(k)] for k in group.table[g])
        out.append(f"{group.elements[g]}: {row}")
    out.append("generators " + " ".join(group.generator_labels))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _cyclic_labels(k: int) -> list:
    if k - 1 <= len(_LETTER_POOL):
        return ["e"] + list(_LETTER_POOL[: k - 1])
    return ["e"] + [f"g{i}" for i in range(1, k)]


def cyclic_group(k: int, name: Optional[str] = None) -> FiniteGroup:
    """Cyclic group of order k with generating set {g, g^-1}."""
    if k < 1:
        raise InvalidGroupError("order must be positive")
    labels = _cyclic_labels(k)
    table = (np.arange(k)[:, None] + np.arange(k)[None, :]) % k
    if k == 1:
        gens: list = []
    elif k == 2:
        gens = [1]
    else:
        gens = [1, k - 1]
    return FiniteGroup(name or f"z{k}", labels, 0, table, gens)


def klein_group(name: str = "v4") -> FiniteGroup:
    """The direct square of the order-2 group, generated by two involutions."""
    table = np.bitwise_xor(np.arange(4)[:, None], np.arange(4)[None, :])
    return FiniteGroup(name, ["e", "p", "q", "r"], 0, table, [1, 2])


_S3_PERMS = (
    (0, 1, 2),  # e
    (1, 2, 0),  # r   three-cycle
    (2, 0, 1),  # q   its inverse
    (1, 0, 2),  # t   swaps 0,1
    (2, 1, 0),  # u   swaps 0,2
    (0, 2, 1),  # v   swaps 1,2
)


def symmetric_group_3(generating: str = "pair", name: str = "s3") -> FiniteGroup:
    """Symmetric group on three points.

    ``generating="pair"`` uses two transpositions (a symmetric pair);
    ``generating="all"`` uses every non-identity element.
    """
    index = {p: i for i, p in enumerate(_S3_PERMS)}
    table = np.empty((6, 6), dtype=np.int64)
    for i, g in enumerate(_S3_PERMS):
        for j, h in enumerate(_S3_PERMS):
            table[i, j] = index[tuple(g[h[x]] for x in range(3))]
    if generating == "pair":
        gens = [3, 5]
    elif generating == "all":
        gens = [1, 2, 3, 4, 5]
    else:
        raise ValueError(f"unknown generating set choice {generating!r}")
    return FiniteGroup(name, ["e", "r", "q", "t", "u", "v"], 0, table, gens)


# ---------------------------------------------------------------------------
# free-group words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeWord:
    """A word in a free group of given rank; letters are ±1..±rank."""

    rank: int
    letters: tuple

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for l in self.letters:
            if l == 0 or abs(l) > self.rank:
                raise ValueError(f"letter {l} out of rank range ±1..±{self.rank}")

    def __len__(self) -> int:
        return len(self.letters)


def free_reduce(word: FreeWord) -> FreeWord:
    """Cancel adjacent inverse pairs until none remain. Idempotent."""
    stack: list = []
    for l in word.letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return FreeWord(word.rank, tuple(stack))


class FreeAlphabet:
    """Letters of a free group, shaped like a finite group's generating set.

    Letter 2k is the (k+1)-th free generator and letter 2k+1 its inverse,
    so ``generator_inverse`` is the pairing i ^ 1.  This gives equations a
    uniform parsing surface over finite groups and free groups alike.
    """

    def __init__(self, rank: int, names: Optional[Sequence[str]] = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        if names is None:
            if rank <= len(_LETTER_POOL):
                names = list(_LETTER_POOL[:rank])
            else:
                names = [f"g{i}" for i in range(1, rank + 1)]
        names = [str(n) for n in names]
        if len(names) != rank:
            raise ValueError(f"need {rank} names, got {len(names)}")
        labels = []
        for n in names:
            _check_label(n)
            labels.append(n)
            labels.append(n + "^-1")
        if len(set(labels)) != len(labels):
            raise ValueError("free generator names collide")
        self.rank = rank
        self.names = tuple(names)
        self.elements = tuple(labels)
        self.generators = tuple(range(2 * rank))
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def generator_labels(self) -> tuple:
        return self.elements

    def label(self, i: int) -> str:
        return self.elements[i]

    def generator_index(self, label: str) -> Optional[int]:
        return self._index.get(label)

    def generator_inverse(self, i: int) -> int:
        return i ^ 1

    def signed_letter(self, i: int) -> int:
        """Map a letter index to the ±k convention of :class:`FreeWord`."""
        k = i // 2 + 1
        return -k if i % 2 else k

    def __repr__(self) -> str:
        return f"FreeAlphabet(rank={self.rank}, names={self.names})"
