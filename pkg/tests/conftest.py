import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0)


def random_word(rng, rank, length):
    return tuple(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length))
