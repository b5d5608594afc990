import random
from fractions import Fraction

import pytest

from tropmod.moduli import ModuliPoint
from tropmod.rationals import POS_INF
from tropmod.trees import enumerate_types


def random_length(rng: random.Random, bound: int = 10**6) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_point(rng: random.Random, n: int, dim=None, infinite_chance: float = 0.0):
    """A random moduli point: random type of the given dimension (facet by
    default), random positive rational lengths, optionally some infinite."""
    dim = n - 3 if dim is None else dim
    ctype = rng.choice(enumerate_types(n, dim))
    lengths = {}
    for s in ctype.splits:
        if infinite_chance and rng.random() < infinite_chance:
            lengths[s] = POS_INF
        else:
            lengths[s] = random_length(rng)
    return ModuliPoint.of(ctype, lengths)


@pytest.fixture
def rng():
    return random.Random(20260810)
