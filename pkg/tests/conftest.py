import random

import pytest

from thompson_f.group_ops import GENERATORS, evaluate


def random_element(rng: random.Random, max_word: int = 20):
    """A reduced pair obtained by evaluating a random generator word."""
    n = rng.randrange(max_word + 1)
    return evaluate(rng.choice(GENERATORS) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20260824)
