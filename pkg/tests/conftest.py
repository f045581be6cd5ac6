import random
from fractions import Fraction

import pytest

from critlocus import MultiPoly, parse_polynomial


def P(text, names):
    return parse_polynomial(text, list(names))


def random_poly(rng: random.Random, arity: int, max_degree: int = 3, terms: int = 4) -> MultiPoly:
    d = {}
    for _ in range(terms):
        mono = tuple(rng.randint(0, max_degree) for _ in range(arity))
        if sum(mono) <= max_degree:
            d[mono] = Fraction(rng.randint(-4, 4))
    return MultiPoly(d, arity)


@pytest.fixture
def rng():
    return random.Random(20240817)
