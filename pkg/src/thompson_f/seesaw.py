"""The seesaw family S(l, m) and swing verification.

A seesaw word of swing k with respect to a generator g: both g and g^-1
shorten the word, no other generator does, and once a direction is chosen
only that generator keeps shortening for k steps (clauses (1)-(3) below).

The two-parameter family is built from the normal form

    x0^{m-1} x1 x_{m+2l+2} x_{m+2l+1}^-1 x_{m+2l-1}^-1 ... x_{m+3}^-1
    x_{m+1}^-1 x0^{-m}

where l controls how far x0^-1 keeps shortening and m how far x0 does.
Lengths along the descent are computed with the Fordham metric, which the
breadth-first oracle certifies exactly on the radius-10 ball; seesaw words
of interesting swing lie far outside any enumerable ball.

Caution: the (LL, LL) pairing at the root of T- that makes *both* x0 and
x0^-1 shorten the word requires m >= 2.  S(l, 1) is shortened by x0^-1 only
(certified against raw breadth-first distances for S(1, 1), which lies in
the radius-10 ball), so the symmetric family S(k, k) has full seesaw
behaviour only from k = 2 on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fordham import length
from .group_ops import GENERATORS, Generator, right_multiply_generator
from .normal_form import NormalForm, nf_to_pair
from .trees import TreePair


@dataclass(frozen=True)
class SeesawParams:
    """l: length of the RI caret string on the right side of T-;
    m: length of the left sides of both trees."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 1 or self.m < 1:
            raise ValueError(f"seesaw parameters must be >= 1, got {self}")


def seesaw_nf(params: SeesawParams) -> NormalForm:
    """Normal form of S(l, m)."""
    l, m = params.l, params.m
    top = m + 2 * l + 2
    positive = []
    if m > 1:
        positive.append((0, m - 1))
    positive += [(1, 1), (top, 1)]
    negative = [(0, m)] + [(idx, 1) for idx in range(m + 1, top, 2)]
    return NormalForm(tuple(positive), tuple(negative))


def seesaw_word(params: SeesawParams) -> TreePair:
    """Reduced tree pair diagram of S(l, m)."""
    return nf_to_pair(seesaw_nf(params))


def reducing_generators(w: TreePair) -> frozenset[Generator]:
    """The generators whose right multiplication shortens ``w`` by one."""
    n = length(w)
    return frozenset(
        g for g in GENERATORS if length(right_multiply_generator(w, g)) == n - 1
    )


@dataclass(frozen=True)
class SwingStep:
    """Length and shortening generators at offset s along a power of g
    (negative offsets are powers of g^-1)."""

    offset: int
    length: int
    reducers: tuple[str, ...]


@dataclass(frozen=True)
class SwingReport:
    """Outcome of checking the three seesaw clauses at a given target swing.

    ``swing`` is the largest k' <= requested k for which all clauses hold.
    ``forward_depth`` / ``backward_depth`` report the unit-descent depths in
    the g and g^-1 directions separately, since the two parameters of the
    family control them independently.
    """

    element: str
    generator: str
    requested: int
    swing: int
    forward_depth: int
    backward_depth: int
    balanced_at_top: bool
    steps: tuple[SwingStep, ...] = field(repr=False)
    first_violation: str | None = None

    def as_dict(self) -> dict:
        return {
            "element": self.element,
            "generator": self.generator,
            "requested": self.requested,
            "swing": self.swing,
            "forward_depth": self.forward_depth,
            "backward_depth": self.backward_depth,
            "balanced_at_top": self.balanced_at_top,
            "first_violation": self.first_violation,
            "steps": [
                {"offset": s.offset, "length": s.length, "reducers": list(s.reducers)}
                for s in self.steps
            ],
        }


def verify_swing(w: TreePair, g: Generator, k: int) -> SwingReport:
    """Check the seesaw clauses for ``w`` and ``g`` up to swing ``k``.

    (1) both g and g^-1 shorten w and no other generator does;
    (2) lengths strictly descend by one along w·g^s for s = 1..k, and at
        w·g^s (s = 1..k-1) only g shortens;
    (3) the mirror of (2) along g^-1.

    A failed clause is data, not an error: the report carries the largest
    verified swing and the first violation.
    """
    if k < 0:
        raise ValueError("swing target must be >= 0")
    base_len = length(w)
    steps: dict[int, SwingStep] = {}

    def record(offset: int, elt: TreePair) -> SwingStep:
        red = reducing_generators(elt)
        step = SwingStep(
            offset,
            length(elt),
            tuple(h.token for h in sorted(red)),
        )
        steps[offset] = step
        return step

    record(0, w)

    def descend(direction: Generator, sign: int) -> int:
        """Number of leading offsets with strict unit descent, up to k."""
        elt = w
        depth = 0
        for s in range(1, k + 1):
            elt = right_multiply_generator(elt, direction)
            record(sign * s, elt)
            if steps[sign * s].length != base_len - s:
                break
            depth = s
        return depth

    forward = descend(g, +1)
    backward = descend(g.inverse, -1)

    balanced = set(steps[0].reducers) == {g.token, g.inverse.token}

    def clauses_hold(k2: int) -> str | None:
        if k2 == 0:
            return None
        if not balanced:
            return (
                f"clause 1: shortening generators at w are "
                f"{{{', '.join(steps[0].reducers)}}}, not {{{g.token}, "
                f"{g.inverse.token}}}"
            )
        if forward < k2:
            return f"clause 2: descent along {g.token} stops after {forward} steps"
        if backward < k2:
            return (
                f"clause 3: descent along {g.inverse.token} stops after "
                f"{backward} steps"
            )
        for s in range(1, k2):
            if set(steps[s].reducers) != {g.token}:
                return (
                    f"clause 2: at offset {s} the shortening generators are "
                    f"{{{', '.join(steps[s].reducers)}}}"
                )
            if set(steps[-s].reducers) != {g.inverse.token}:
                return (
                    f"clause 3: at offset {-s} the shortening generators are "
                    f"{{{', '.join(steps[-s].reducers)}}}"
                )
        return None

    first_violation = clauses_hold(k)
    swing = k
    if first_violation is not None:
        swing = 0
        for k2 in range(k, 0, -1):
            if clauses_hold(k2) is None:
                swing = k2
                break

    ordered = tuple(steps[o] for o in sorted(steps))
    return SwingReport(
        element=w.text(),
        generator=g.token,
        requested=k,
        swing=swing,
        forward_depth=forward,
        backward_depth=backward,
        balanced_at_top=balanced,
        steps=ordered,
        first_violation=first_violation,
    )
