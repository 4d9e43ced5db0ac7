"""Equation words over a generating alphabet with formal variables.

An equation of arity n is a word whose letters are either generators or the
formal variables x1..xn and their inverses.  Its value at a tuple of group
elements is the left-to-right product obtained by reading generators as
themselves and xk as the k-th tuple entry.  The empty word is a valid
equation and evaluates to the identity.

Concrete syntax is whitespace separated: generator labels as declared by
the group, plus ``x<k>`` and ``x<k>^-1``.  Generator labels may not look
like variable tokens; group loading enforces that.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import EquationSyntaxError

GEN = "gen"
VAR = "var"
VARINV = "varinv"

_VAR_TOKEN = re.compile(r"^x([0-9]+)(\^-1)?$")


@dataclass(frozen=True)
class Token:
    """One letter of an equation.

    ``index`` is an element index for generators and the 1-based variable
    number for the two variable kinds.
    """

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (GEN, VAR, VARINV):
            raise EquationSyntaxError(f"unknown token kind {self.kind!r}")
        if self.kind != GEN and self.index < 1:
            raise EquationSyntaxError("variable numbers start at 1")
        if self.kind == GEN and self.index < 0:
            raise EquationSyntaxError("generator index must be nonnegative")


def gen(i: int) -> Token:
    return Token(GEN, i)


def var(k: int) -> Token:
    return Token(VAR, k)


def varinv(k: int) -> Token:
    return Token(VARINV, k)


@dataclass(frozen=True)
class Polynomial:
    """An equation word: arity plus a token sequence (possibly empty)."""

    arity: int
    tokens: tuple

    def __post_init__(self):
        if self.arity < 0:
            raise EquationSyntaxError("arity must be nonnegative")
        for t in self.tokens:
            if t.kind != GEN and t.index > self.arity:
                raise EquationSyntaxError(
                    f"variable x{t.index} exceeds arity {self.arity}"
                )

    def __len__(self) -> int:
        return len(self.tokens)


def token_label(alphabet, token: Token) -> str:
    if token.kind == GEN:
        return alphabet.label(token.index)
    if token.kind == VAR:
        return f"x{token.index}"
    return f"x{token.index}^-1"


def serialize(alphabet, p: Polynomial) -> str:
    """Inverse of :func:`parse_polynomial`; the empty word serializes to ''."""
    return " ".join(token_label(alphabet, t) for t in p.tokens)


def parse_polynomial(text: str, alphabet, arity: int) -> Polynomial:
    """Parse a whitespace-separated equation over the given alphabet.

    ``alphabet`` is a :class:`~groupeq.groups.FiniteGroup` or
    :class:`~groupeq.groups.FreeAlphabet`; generator tokens must be labels
    of its generating set.
    """
    if arity < 0:
        raise EquationSyntaxError("arity must be nonnegative")
    tokens = []
    for part in text.split():
        m = _VAR_TOKEN.match(part)
        if m:
            k = int(m.group(1))
            if k < 1 or k > arity:
                raise EquationSyntaxError(
                    f"variable {part!r} out of range for arity {arity}"
                )
            tokens.append(varinv(k) if m.group(2) else var(k))
            continue
        i = alphabet.generator_index(part)
        if i is None:
            raise EquationSyntaxError(
                f"unknown token {part!r}: not a variable and not a generator label"
            )
        tokens.append(gen(i))
    return Polynomial(arity, tuple(tokens))


def interpret(group, p: Polynomial, values: Sequence[int]) -> int:
    """Value of the equation at a tuple of group elements.

    The empty word yields the identity; otherwise the product is taken left
    to right with xk read as ``values[k-1]`` and xk^-1 as its inverse.
    """
    if len(values) != p.arity:
        raise EquationSyntaxError(
            f"tuple of length {len(values)} given for arity {p.arity}"
        )
    acc = group.identity
    for t in p.tokens:
        if t.kind == GEN:
            elem = t.index
        elif t.kind == VAR:
            elem = values[t.index - 1]
        else:
            elem = group.inv(values[t.index - 1])
        acc = group.mul(acc, elem)
    return acc


def substitute(alphabet, p: Polynomial, words: Sequence[Sequence[Token]]) -> Polynomial:
    """Replace each variable with a word over the generators.

    ``words[k-1]`` replaces xk; xk^-1 is replaced by the formal inverse of
    that word (reversed, letters inverted), which is well defined because
    the generating set is closed under inverses.  The result has arity 0.
    """
    if len(words) != p.arity:
        raise EquationSyntaxError(
            f"{len(words)} replacement words given for arity {p.arity}"
        )
    for w in words:
        for t in w:
            if t.kind != GEN:
                raise EquationSyntaxError(
                    "replacement words may contain generator tokens only"
                )
    out = []
    for t in p.tokens:
        if t.kind == GEN:
            out.append(t)
        elif t.kind == VAR:
            out.extend(words[t.index - 1])
        else:
            for g in reversed(words[t.index - 1]):
                out.append(gen(alphabet.generator_inverse(g.index)))
    return Polynomial(0, tuple(out))


def canonical_alphabet(alphabet, arity: int) -> tuple:
    """Token alphabet in canonical order: generators as declared, then
    x1, x1^-1, ..., xn, xn^-1."""
    tokens = [gen(i) for i in alphabet.generators]
    for k in range(1, arity + 1):
        tokens.append(var(k))
        tokens.append(varinv(k))
    return tuple(tokens)
