"""Shared helpers for the test suite.

Plain functions (importable as `from conftest import ...`) build random
words and matrices; randomness always flows through an explicit
random.Random so every test is reproducible from its seed.
"""

import random

import pytest

from rademacher.matrices import UnimodularMatrix
from rademacher.words import reconstruct


def random_word(rng: random.Random, max_len: int = 6, cap: int = 4,
                interior_zeros: bool = False) -> tuple:
    """Random word; interior entries are nonzero unless asked otherwise."""
    k = rng.randint(0, max_len)
    out = []
    for i in range(k):
        if interior_zeros or i == 0 or i == k - 1:
            out.append(rng.randint(-cap, cap))
        else:
            v = 0
            while v == 0:
                v = rng.randint(-cap, cap)
            out.append(v)
    return tuple(out)


def random_matrix(rng: random.Random, max_len: int = 6, cap: int = 4) -> UnimodularMatrix:
    """Random element of SL2(Z), sign included (words only reach PSL2)."""
    m = reconstruct(random_word(rng, max_len=max_len, cap=cap))
    return -m if rng.random() < 0.5 else m


@pytest.fixture
def rng():
    return random.Random(20260819)
