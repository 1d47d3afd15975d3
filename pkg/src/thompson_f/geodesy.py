"""Breadth-first Cayley-graph oracle and geodesic machinery.

The oracle enumerates the ball of a given radius in the Cayley graph of F
with respect to {x0^±1, x1^±1} by plain breadth-first search over reduced
tree pair diagrams.  Its distances are correct by construction and serve as
the independent certificate for the Fordham metric: the two must agree on
every element of every ball.

Geodesics are produced greedily: at each step multiply by some generator
that drops the metric by one.  Such a generator always exists away from the
identity (the metric is a geodesic length function), so greedy descent from
w to the identity, reversed and inverted, is a geodesic for w.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import CapacityError
from .fordham import length
from .group_ops import (
    DEFAULT_ORDER,
    Generator,
    generator_pair,
    invert_word,
    multiply,
    right_multiply_generator,
)
from .trees import IDENTITY, TreePair

#: Hard cap on enumerated elements; override with THOMPSON_F_BFS_CAPACITY.
DEFAULT_CAPACITY = 10**8


def _capacity() -> int:
    raw = os.environ.get("THOMPSON_F_BFS_CAPACITY")
    return int(raw) if raw else DEFAULT_CAPACITY


@dataclass(frozen=True)
class Ball:
    """The ball of radius ``radius``: exact distances for every element.

    ``distances`` maps pair text ``"NEG:POS"`` to word length.  ``spheres``
    lists the elements of each sphere in discovery order, so
    ``len(spheres[n])`` is the sphere size and the growth series is exact.
    """

    radius: int
    distances: dict[str, int]
    spheres: tuple[tuple[TreePair, ...], ...]

    @property
    def sphere_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.spheres)

    @property
    def ball_sizes(self) -> tuple[int, ...]:
        out, total = [], 0
        for s in self.spheres:
            total += len(s)
            out.append(total)
        return tuple(out)

    def __contains__(self, pair: TreePair) -> bool:
        return pair.text() in self.distances

    def distance(self, pair: TreePair) -> int:
        """BFS distance of ``pair``; KeyError if outside the ball."""
        return self.distances[pair.text()]


def bfs_ball(radius: int, capacity: int | None = None) -> Ball:
    """Enumerate the ball of the given radius around the identity.

    Raises :class:`CapacityError` before exceeding ``capacity`` elements
    (default :data:`DEFAULT_CAPACITY`, overridable through the environment
    variable ``THOMPSON_F_BFS_CAPACITY``); the radius-10 ball has 88253
    elements and radius 12 is still comfortable, but growth is exponential.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    cap = capacity if capacity is not None else _capacity()
    rm = kernels.right_multiply
    gens = tuple(g.value for g in DEFAULT_ORDER)

    distances: dict[str, int] = {"0:0": 0}
    spheres: list[list[TreePair]] = [[IDENTITY]]
    frontier: deque[tuple[str, str]] = deque([("0", "0")])
    for n in range(1, radius + 1):
        sphere: list[TreePair] = []
        next_frontier: deque[tuple[str, str]] = deque()
        while frontier:
            neg, pos = frontier.popleft()
            for g in gens:
                nneg, npos = rm(neg, pos, g)
                key = nneg + ":" + npos
                if key in distances:
                    continue
                if len(distances) >= cap:
                    raise CapacityError(
                        f"ball of radius {radius} exceeds the capacity of "
                        f"{cap} elements (stopped inside sphere {n})"
                    )
                distances[key] = n
                sphere.append(TreePair(nneg, npos))
                next_frontier.append((nneg, npos))
        spheres.append(sphere)
        frontier = next_frontier
    return Ball(radius, distances, tuple(tuple(s) for s in spheres))


def distance(w: TreePair, v: TreePair) -> int:
    """Word metric d(w, v) = |w^-1 v|, computed with the Fordham length."""
    return length(multiply(TreePair(w.pos_bits, w.neg_bits), v))


@dataclass(frozen=True)
class Path:
    """A geodesic from the identity to ``target`` as a generator word."""

    target: TreePair
    word: tuple[Generator, ...]

    def __len__(self) -> int:
        return len(self.word)

    def elements(self) -> tuple[TreePair, ...]:
        """The len+1 vertices visited, identity first."""
        out = [IDENTITY]
        for g in self.word:
            out.append(right_multiply_generator(out[-1], g))
        return tuple(out)


def greedy_geodesic(
    w: TreePair,
    order: Sequence[Generator] = DEFAULT_ORDER,
    prefer: Callable[[Generator], int] | None = None,
) -> Path:
    """A geodesic for ``w``: descend to the identity, then reverse and invert.

    Ties between shortening generators are broken by ``order``; ``prefer``
    (smaller is better) takes precedence over the order when given, which is
    how a caller steers the path toward or away from a generator.
    """
    descent: list[Generator] = []
    cur = w
    n = length(cur)
    while n > 0:
        candidates = [
            g for g in order
            if length(right_multiply_generator(cur, g)) == n - 1
        ]
        if not candidates:
            raise AssertionError(
                f"no shortening generator at {cur.text()}; the metric or the "
                f"multiplication kernel is broken"
            )
        if prefer is not None:
            candidates.sort(key=prefer)
        g = candidates[0]
        descent.append(g)
        cur = right_multiply_generator(cur, g)
        n -= 1
    return Path(w, invert_word(descent))


def synchronous_distance(p: Path, q: Path) -> int:
    """max_t d(p(t), q(t)) with both paths walked one step per tick and the
    shorter path waiting at its endpoint."""
    pe, qe = p.elements(), q.elements()
    worst = 0
    for t in range(max(len(pe), len(qe))):
        a = pe[min(t, len(pe) - 1)]
        b = qe[min(t, len(qe) - 1)]
        worst = max(worst, distance(a, b))
    return worst


@dataclass(frozen=True)
class FellowTravellerRecord:
    length_w: int
    length_wg: int
    gap: int


def fellow_traveller_demo(
    seesaw_words: Iterable[TreePair],
    g: Generator = Generator.X0,
) -> tuple[FellowTravellerRecord, ...]:
    """Synchronous gap between geodesics of w and w·g for the given words.

    For seesaw words of growing swing the gap grows without bound even
    though the endpoints are adjacent, which is exactly the obstruction to
    the fellow traveller property (and hence to any synchronous or
    asynchronous automatic structure with respect to this metric).

    For a word of swing s the two descents are forced apart: w descends via
    g.inverse through w·g^-s while w·g descends via g through w·g^s, and
    those waypoints, reached at the same tick, are 2s apart.  The steering
    below picks those two descents explicitly rather than relying on
    tie-break luck.
    """
    records = []
    for w in seesaw_words:
        wg = right_multiply_generator(w, g)
        pw = greedy_geodesic(w, prefer=lambda h: 0 if h == g.inverse else 1)
        pwg = greedy_geodesic(wg, prefer=lambda h: 0 if h == g else 1)
        records.append(
            FellowTravellerRecord(
                length_w=length(w),
                length_wg=length(wg),
                gap=synchronous_distance(pw, pwg),
            )
        )
    return tuple(records)
