"""Rooted binary trees of carets and reduced tree pair diagrams.

A tree is either a leaf or a caret with a left and a right subtree.  Carets
are numbered in infix order starting at zero (every caret in a left subtree
precedes its parent, every caret in a right subtree follows it); leaves are
numbered left to right.

The canonical serialization is the preorder bitstring

    TREE := '0' | '1' TREE TREE

with '1' for a caret and '0' for a leaf.  Encoding is injective and is used
as the deduplication key throughout.  A tree pair diagram is written
``"NEG:POS"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .errors import GrammarError, MalformedPairError


@dataclass(frozen=True)
class Tree:
    """Immutable rooted binary tree; ``Tree(None, None)`` is a leaf."""

    left: "Tree | None"
    right: "Tree | None"

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a caret needs both subtrees, a leaf neither")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def caret_count(self) -> int:
        return self.encode().count("1")

    @property
    def leaf_count(self) -> int:
        return self.caret_count + 1

    def encode(self) -> str:
        """Preorder bitstring; cached on first use."""
        bits = self.__dict__.get("_bits")
        if bits is None:
            out: list[str] = []
            stack = [self]
            while stack:
                t = stack.pop()
                if t.is_leaf:
                    out.append("0")
                else:
                    out.append("1")
                    stack.append(t.right)
                    stack.append(t.left)
            bits = "".join(out)
            object.__setattr__(self, "_bits", bits)
        return bits

    @staticmethod
    def decode(bits: str) -> "Tree":
        if not kernels.validate_tree(bits):
            raise GrammarError(f"not a preorder tree encoding: {bits!r}", token=bits)
        pos = 0

        def rec() -> Tree:
            nonlocal pos
            ch = bits[pos]
            pos += 1
            if ch == "0":
                return LEAF
            left = rec()
            right = rec()
            return Tree(left, right)

        return rec()

    def __str__(self) -> str:
        return self.encode()


LEAF = Tree(None, None)


def leaf() -> Tree:
    """The 0-caret tree."""
    return LEAF


def caret(left: Tree, right: Tree) -> Tree:
    """A caret over the given subtrees."""
    return Tree(left, right)


def enumerate_trees(caret_count: int) -> Iterator[Tree]:
    """All trees with exactly ``caret_count`` carets (Catalan many)."""
    if caret_count == 0:
        yield LEAF
        return
    for k in range(caret_count):
        for left in enumerate_trees(k):
            for right in enumerate_trees(caret_count - 1 - k):
                yield Tree(left, right)


@dataclass(frozen=True)
class TreePair:
    """A tree pair diagram (T-, T+) with equal leaf counts.

    The constructor checks well-formedness and equal leaf counts but not
    reducedness; use :func:`reduce` (or the group operations, which reduce
    on the way out) to obtain canonical representatives.  The identity is
    the pair of two leaf-only trees.
    """

    neg_bits: str
    pos_bits: str

    def __post_init__(self):
        for bits in (self.neg_bits, self.pos_bits):
            if not kernels.validate_tree(bits):
                raise GrammarError(f"not a preorder tree encoding: {bits!r}", token=bits)
        if self.neg_bits.count("1") != self.pos_bits.count("1"):
            raise MalformedPairError(
                f"leaf counts differ: {self.neg_bits!r} vs {self.pos_bits!r}"
            )

    @property
    def neg(self) -> Tree:
        return Tree.decode(self.neg_bits)

    @property
    def pos(self) -> Tree:
        return Tree.decode(self.pos_bits)

    @property
    def caret_count(self) -> int:
        return self.neg_bits.count("1")

    @property
    def is_identity(self) -> bool:
        return self.neg_bits == "0"

    @property
    def is_reduced(self) -> bool:
        return kernels.is_reduced(self.neg_bits, self.pos_bits)

    def text(self) -> str:
        return f"{self.neg_bits}:{self.pos_bits}"

    @staticmethod
    def from_text(text: str) -> "TreePair":
        """Parse ``"NEG:POS"`` and reduce."""
        head, sep, tail = text.partition(":")
        if not sep:
            raise GrammarError(f"pair text needs a ':' separator: {text!r}", token=text)
        return reduce(TreePair(head, tail))

    def __str__(self) -> str:
        return self.text()


IDENTITY = TreePair("0", "0")


def reduce(pair: TreePair) -> TreePair:
    """The unique reduced pair representing the same group element.

    A pair is unreduced while some caret with two exposed leaves covers the
    same leaf numbers n, n+1 in both trees; such carets are removed and the
    leaves renumbered, to fixpoint.  Idempotent.
    """
    neg, pos = kernels.reduce_pair(pair.neg_bits, pair.pos_bits)
    return TreePair(neg, pos)


def pair_of_trees(neg: Tree, pos: Tree) -> TreePair:
    """Reduced pair from two trees; raises MalformedPairError on leaf mismatch."""
    return reduce(TreePair(neg.encode(), pos.encode()))
