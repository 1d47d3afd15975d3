"""Reduction: idempotence and confluence (removal order is irrelevant)."""

import random

from thompson_f.kernels import pykernel
from thompson_f.trees import TreePair, reduce

from conftest import random_element


def _insert_common_caret(pair: TreePair, k: int) -> TreePair:
    """Grow an exposed caret at leaf ``k`` of both trees (unreduces the pair)."""

    def ins(bits: str) -> str:
        leaf = -1
        for i, ch in enumerate(bits):
            if ch == "0":
                leaf += 1
                if leaf == k:
                    return bits[:i] + "100" + bits[i + 1:]
        raise AssertionError("leaf index out of range")

    return TreePair(ins(pair.neg_bits), ins(pair.pos_bits))


def _blow_up(pair: TreePair, rng: random.Random, rounds: int) -> TreePair:
    for _ in range(rounds):
        pair = _insert_common_caret(pair, rng.randrange(pair.caret_count + 1))
    return pair


def _reduce_one_random(pair: TreePair, rng: random.Random) -> TreePair:
    """Remove a single random common exposed caret, if any."""
    en = pykernel._exposed(pair.neg_bits)
    common = sorted(set(en) & set(pykernel._exposed(pair.pos_bits)))
    if not common:
        return pair
    n = rng.choice(common)
    i = en[n]
    j = pykernel._exposed(pair.pos_bits)[n]
    return TreePair(
        pair.neg_bits[:i] + "0" + pair.neg_bits[i + 3:],
        pair.pos_bits[:j] + "0" + pair.pos_bits[j + 3:],
    )


def test_reduce_recovers_original_on_random_blowups(rng):
    for _ in range(1000):
        base = random_element(rng, 12)
        grown = _blow_up(base, rng, 1 + rng.randrange(3))
        assert not grown.is_reduced
        assert reduce(grown) == base


def test_confluence_single_steps_reach_same_fixpoint(rng):
    """Any sequence of single removals ends at the kernel's answer."""
    for _ in range(1000):
        base = random_element(rng, 10)
        grown = _blow_up(base, rng, 1 + rng.randrange(4))
        cur = grown
        while True:
            nxt = _reduce_one_random(cur, rng)
            if nxt == cur:
                break
            cur = nxt
        assert cur == reduce(grown) == base


def test_reduce_leaves_reduced_pairs_alone(rng):
    for _ in range(300):
        p = random_element(rng, 15)
        assert p.is_reduced
        assert reduce(p) == p
