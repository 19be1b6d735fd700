import random
from fractions import Fraction

import pytest

from divdiff import SampleSet


def random_rational_poly(rng, degree):
    from divdiff import RationalPoly
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for _ in range(degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(1)
    return RationalPoly(coeffs)


def random_rational_nodes(rng, count, span=12):
    pool = [Fraction(num, den) for den in (1, 2, 3, 4, 5)
            for num in range(-2 * span, 2 * span + 1)]
    return rng.sample(sorted(set(pool)), count)


def random_float_samples(rng, n, lo=0.0, hi=1.0):
    while True:
        nodes = sorted(rng.uniform(lo, hi) for _ in range(n + 1))
        if all(b - a > 1e-6 for a, b in zip(nodes, nodes[1:])):
            break
    values = [rng.uniform(-1.0, 1.0) for _ in nodes]
    return SampleSet(nodes, values)


@pytest.fixture
def rng():
    return random.Random(20240817)
