import itertools
import random

import pytest


def all_texts(sigma, max_len, min_len=0):
    """Every byte text over symbols 0..sigma-1 with length in range."""
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(range(sigma), repeat=n):
            yield bytes(tup)


def random_text(rng: random.Random, n: int, sigma: int) -> bytes:
    return bytes(rng.randrange(sigma) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
