"""Normal forms in the infinite presentation of F.

F = < x_n, n >= 0 | x_i^-1 x_j x_i = x_{j+1} for i < j >.  Every element has
a unique expression

    x_{i1}^{r1} ... x_{ik}^{rk} · x_{jl}^{-sl} ... x_{j1}^{-s1}

with strictly increasing indices within each part, subject to the condition
that whenever x_i and x_i^-1 both occur, so does x_{i+1} or x_{i+1}^-1.

Conversion to a tree pair goes through the rewriting x_n -> x0^{-(n-1)} x1
x0^{n-1}; the reverse direction reads off one leaf exponent per leaf of each
tree.  The round trip is the correctness certificate for both directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GrammarError
from .group_ops import Generator, evaluate
from .trees import Tree, TreePair

Part = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NormalForm:
    """Exponent sequences of the two parts, as (index, exponent) pairs.

    Both parts are stored with ascending indices and positive exponents; the
    negative part is applied with descending indices and negative signs.
    """

    positive: Part
    negative: Part

    def __post_init__(self):
        for part in (self.positive, self.negative):
            for i, (idx, exp) in enumerate(part):
                if idx < 0 or exp < 1:
                    raise ValueError(f"bad normal form entry ({idx}, {exp})")
                if i and part[i - 1][0] >= idx:
                    raise ValueError("indices must be strictly increasing")

    @property
    def is_trivial(self) -> bool:
        return not self.positive and not self.negative

    def satisfies_uniqueness(self) -> bool:
        """Whenever x_i occurs in both parts, x_{i+1} occurs in at least one."""
        pos_idx = {i for i, _ in self.positive}
        neg_idx = {i for i, _ in self.negative}
        both = pos_idx & neg_idx
        present = pos_idx | neg_idx
        return all(i + 1 in present for i in both)

    def __str__(self) -> str:
        return format_nf(self)


TRIVIAL_NF = NormalForm((), ())


def _expand(index: int, exponent: int) -> list[Generator]:
    """Generator word for x_index^exponent via x_n = x0^{-(n-1)} x1 x0^{n-1}."""
    if index == 0:
        base = [Generator.X0]
    else:
        base = (
            [Generator.X0_INV] * (index - 1)
            + [Generator.X1]
            + [Generator.X0] * (index - 1)
        )
    if exponent < 0:
        base = [g.inverse for g in reversed(base)]
    return base * abs(exponent)


def nf_to_genword(nf: NormalForm) -> tuple[Generator, ...]:
    """The {x0, x1} word obtained by rewriting every x_n; usually not minimal."""
    word: list[Generator] = []
    for idx, exp in nf.positive:
        word.extend(_expand(idx, exp))
    for idx, exp in reversed(nf.negative):
        word.extend(_expand(idx, -exp))
    return tuple(word)


def nf_to_pair(nf: NormalForm) -> TreePair:
    """Reduced tree pair diagram of the normal form."""
    return evaluate(nf_to_genword(nf))


def leaf_exponents(tree: Tree) -> list[int]:
    """One exponent per leaf: the length of the maximal chain of left edges
    going up from the leaf, not counting an edge that ends on the right side
    of the tree (the root counts as being on the right side).
    """
    exps: list[int] = []

    def rec(node: Tree, chain: int, on_right_side: bool) -> None:
        if node.is_leaf:
            exps.append(chain)
            return
        rec(node.left, 0 if on_right_side else chain + 1, False)
        rec(node.right, 0, on_right_side)

    rec(tree, 0, True)
    return exps


def pair_to_nf(pair: TreePair) -> NormalForm:
    """Normal form of a reduced pair, read off the leaf exponents.

    The positive part comes from T+, the negative part from T-.  For reduced
    pairs the result satisfies the uniqueness condition; the cancellation
    x_i, x_i^-1 -> (shift intermediate indices down) is applied if a caller
    hands in an unreduced-but-valid pair.
    """
    positive = tuple(
        (k, e) for k, e in enumerate(leaf_exponents(pair.pos)) if e > 0
    )
    negative = tuple(
        (k, e) for k, e in enumerate(leaf_exponents(pair.neg)) if e > 0
    )
    nf = NormalForm(positive, negative)
    while not nf.satisfies_uniqueness():
        nf = _cancel_once(nf)
    return nf


def _cancel_once(nf: NormalForm) -> NormalForm:
    pos_idx = {i for i, _ in nf.positive}
    neg_idx = {i for i, _ in nf.negative}
    present = pos_idx | neg_idx
    i = min(k for k in pos_idx & neg_idx if k + 1 not in present)

    def drop_and_shift(part: Part) -> Part:
        out = []
        for idx, exp in part:
            if idx == i:
                exp -= 1
            if idx > i:
                idx -= 1
            if exp > 0:
                out.append((idx, exp))
        return tuple(out)

    return NormalForm(drop_and_shift(nf.positive), drop_and_shift(nf.negative))


_NF_TOKEN_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_nf(text: str) -> NormalForm:
    """Parse a product of ``x<n>`` tokens with optional ``^<signed int>``
    exponents, left to right, and canonicalize it to the unique normal form.
    """
    word: list[Generator] = []
    for token in text.split():
        m = _NF_TOKEN_RE.match(token)
        if not m:
            raise GrammarError(
                f"bad token {token!r}; expected x<n> with an optional "
                f"^<signed int> exponent",
                token=token,
            )
        word.extend(_expand(int(m.group(1)), int(m.group(2) or 1)))
    return pair_to_nf(evaluate(word))


def format_nf(nf: NormalForm) -> str:
    """Text form, e.g. ``"x0^2 x1 x5 x4^-1 x0^-2"``; identity is ``"<id>"``."""
    if nf.is_trivial:
        return "<id>"
    out = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in nf.positive]
    out += [f"x{i}^{-e}" for i, e in reversed(nf.negative)]
    return " ".join(out)
