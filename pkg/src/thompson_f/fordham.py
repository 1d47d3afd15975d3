"""Fordham's caret-type classification and the exact word-length metric.

Every caret of a tree gets one of seven types.  With the carets of a reduced
pair (T-, T+) matched up by infix number, each pair of types has a fixed
weight, and the sum of the weights is exactly the word length of the element
over {x0, x1}.  The breadth-first Cayley-graph oracle in :mod:`geodesy`
certifies this equality on the radius-10 ball.
"""

from __future__ import annotations

import enum

from . import kernels
from .errors import UnreducedPairError
from .trees import Tree, TreePair


class CaretType(enum.IntEnum):
    """Fordham's seven caret classes; values match the kernel type codes."""

    L0 = kernels.pykernel.L0    # deepest caret of the left side (infix number 0)
    LL = kernels.pykernel.LL    # any other left caret
    I0 = kernels.pykernel.I0    # interior caret without a right child
    IR = kernels.pykernel.IR    # interior caret with a right child
    RI = kernels.pykernel.RI    # right caret whose successor caret is interior
    R0 = kernels.pykernel.R0    # right caret with no interior caret after it
    RNI = kernels.pykernel.RNI  # any other right caret

    def __str__(self) -> str:
        return self.name


#: Weights of unordered caret-type pairs.  (L0, L0) carries weight 0; L0
#: never meets any other type because caret 0 of every nonempty tree is L0.
WEIGHTS: dict[tuple[CaretType, CaretType], int] = {
    (CaretType(a), CaretType(b)): w
    for a, row in enumerate(kernels.WEIGHT_TABLE)
    for b, w in enumerate(row)
    if w >= 0
}


def weight(a: CaretType, b: CaretType) -> int:
    """Weight of the type pair (a, b); symmetric."""
    try:
        return WEIGHTS[(a, b)]
    except KeyError:
        raise ValueError(f"no weight defined for the pair ({a}, {b})") from None


def classify(tree: Tree) -> tuple[CaretType, ...]:
    """Caret types of ``tree`` indexed by infix number; empty for a leaf."""
    return tuple(CaretType(c) for c in kernels.classify(tree.encode()))


def classify_pair(pair: TreePair) -> tuple[tuple[CaretType, ...], tuple[CaretType, ...]]:
    """Types of (T-, T+), matched up by infix caret number."""
    return (
        tuple(CaretType(c) for c in kernels.classify(pair.neg_bits)),
        tuple(CaretType(c) for c in kernels.classify(pair.pos_bits)),
    )


def length(pair: TreePair) -> int:
    """Word length of ``pair`` over {x0^±1, x1^±1}.

    The pair must be reduced; the identity has length 0 (empty sum).
    """
    if not pair.is_reduced:
        raise UnreducedPairError(f"length needs a reduced pair, got {pair.text()}")
    return kernels.fordham_length(pair.neg_bits, pair.pos_bits)
