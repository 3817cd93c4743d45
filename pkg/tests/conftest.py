import random
from fractions import Fraction

import pytest

from setdecomp import (
    Charge,
    CoverageCoefficients,
    GroundSet,
    SetFunction,
    WeightedGraph,
    from_coefficients,
)


def random_fraction(rng: random.Random, lo: int = -4, hi: int = 4, den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_set_function(rng: random.Random, n: int, normalized: bool = True) -> SetFunction:
    ground = GroundSet(n)
    vals = [random_fraction(rng) for _ in range(ground.size)]
    if normalized:
        vals[0] = Fraction(0)
    return SetFunction(ground, tuple(vals))


def random_coverage(rng: random.Random, n: int, density: float = 0.3) -> SetFunction:
    """Random nonnegative combination of the intersection-indicator basis."""
    ground = GroundSet(n)
    alpha = [Fraction(0)] * ground.size
    for mask in range(1, ground.size):
        if rng.random() < density:
            alpha[mask] = Fraction(rng.randint(0, 4), rng.randint(1, 3))
    return from_coefficients(CoverageCoefficients(ground, tuple(alpha)))


def random_nonneg_charge(rng: random.Random, n: int) -> Charge:
    ground = GroundSet(n)
    return Charge(
        ground,
        tuple(Fraction(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(n)),
    )


def random_weakly_alternating(rng: random.Random, n: int) -> SetFunction:
    """Coverage minus a nonnegative charge is weakly infinite-alternating."""
    return random_coverage(rng, n) - random_nonneg_charge(rng, n).as_set_function()


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> WeightedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, Fraction(rng.randint(1, 4), rng.randint(1, 3))))
    return WeightedGraph.build(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260826)
