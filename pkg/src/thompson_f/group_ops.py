"""Group operations on reduced tree pair diagrams.

Multiplication follows the composition recipe: to form w·v, build unreduced
representatives of the two factors sharing a middle tree (the minimal common
refinement of w's negative tree and v's positive tree), take the outer trees
and reduce.  Inversion swaps the two trees.

The orientation of the generator diagrams is not a free choice: it is pinned
by requiring that both defining relators of

    F = < x0, x1 | [x0 x1^-1, x0^-1 x1 x0], [x0 x1^-1, x0^-2 x1 x0^2] >

evaluate to the identity, that x0^-1·x1·x0 equals the diagram of x2 from the
infinite presentation, and that the generator shape conditions live on the
negative tree.  The test suite enforces all three; the mirrored convention
fails them.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, Sequence

from . import kernels
from .errors import GrammarError
from .trees import TreePair


class Generator(enum.IntEnum):
    """The four directed generators; values match the kernel codes."""

    X0 = kernels.X0
    X0_INV = kernels.X0_INV
    X1 = kernels.X1
    X1_INV = kernels.X1_INV

    @property
    def inverse(self) -> "Generator":
        return Generator(self.value ^ 1)

    @property
    def token(self) -> str:
        return _TOKENS[self]

    def __str__(self) -> str:
        return self.token


_TOKENS = {
    Generator.X0: "x0",
    Generator.X0_INV: "x0^-1",
    Generator.X1: "x1",
    Generator.X1_INV: "x1^-1",
}

GENERATORS: tuple[Generator, ...] = tuple(Generator)

#: Default tie-break ordering for geodesic descent.
DEFAULT_ORDER: tuple[Generator, ...] = (
    Generator.X0,
    Generator.X0_INV,
    Generator.X1,
    Generator.X1_INV,
)

GenWord = Sequence[Generator]


def generator_pair(g: Generator) -> TreePair:
    """The reduced 2-caret (x0) or 3-caret (x1) diagram of ``g``."""
    neg, pos = kernels.GENERATOR_DIAGRAMS[g.value]
    return TreePair(neg, pos)


def multiply(w: TreePair, v: TreePair) -> TreePair:
    """Reduced product w·v via the minimal common refinement."""
    neg, pos = kernels.multiply(w.neg_bits, w.pos_bits, v.neg_bits, v.pos_bits)
    return TreePair(neg, pos)


def inverse(w: TreePair) -> TreePair:
    """Swap the two trees; multiply(w, inverse(w)) is the identity."""
    return TreePair(w.pos_bits, w.neg_bits)


def condition_holds(w: TreePair, g: Generator) -> bool:
    """Shape condition on T- under which right multiplication by ``g`` is a
    pure subtree rotation of the negative tree:

    * x0:    the left subtree of the root is nonempty;
    * x0^-1: the right subtree of the root is nonempty;
    * x1:    the root has a right child with nonempty left subtree;
    * x1^-1: the root has a right child with nonempty right subtree.
    """
    return kernels.condition_holds(w.neg_bits, g.value)


def right_multiply_generator(w: TreePair, g: Generator) -> TreePair:
    """w·g, using the rotation fast path when the shape condition holds.

    Always equals ``multiply(w, generator_pair(g))``; the fast path is an
    optimization whose equivalence is property-tested.
    """
    neg, pos = kernels.right_multiply(w.neg_bits, w.pos_bits, g.value)
    return TreePair(neg, pos)


def evaluate(word: Iterable[Generator]) -> TreePair:
    """Left-to-right product of generators starting at the identity."""
    neg, pos = "0", "0"
    for g in word:
        neg, pos = kernels.right_multiply(neg, pos, g)
    return TreePair(neg, pos)


def invert_word(word: GenWord) -> tuple[Generator, ...]:
    """The generator word evaluating to the inverse element."""
    return tuple(g.inverse for g in reversed(word))


_TOKEN_RE = re.compile(r"^x([01])(?:\^(-?\d+))?$")


def parse_genword(text: str) -> tuple[Generator, ...]:
    """Parse a generator word: whitespace-separated ``x0``/``x1`` tokens with
    an optional ``^<signed int>`` exponent, e.g. ``"x0^-3 x1 x0^2"``.
    """
    word: list[Generator] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise GrammarError(
                f"bad generator token {token!r}; expected x0 or x1 with an "
                f"optional ^<signed int> exponent",
                token=token,
            )
        base = Generator.X0 if m.group(1) == "0" else Generator.X1
        exp = int(m.group(2)) if m.group(2) else 1
        g = base if exp >= 0 else base.inverse
        word.extend([g] * abs(exp))
    return tuple(word)


def format_genword(word: GenWord) -> str:
    """Token text of a generator word, with adjacent equal generators pooled
    into exponents; the empty word renders as ``"<id>"``.
    """
    if not word:
        return "<id>"
    out: list[str] = []
    i = 0
    word = list(word)
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        base = "x0" if word[i] in (Generator.X0, Generator.X0_INV) else "x1"
        exp = run if word[i].value % 2 == 0 else -run
        out.append(base if exp == 1 else f"{base}^{exp}")
        i = j
    return " ".join(out)
