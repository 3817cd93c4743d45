import random
from fractions import Fraction

import pytest

from setdecomp import (
    GroundSet,
    GroundSetError,
    Partition,
    PartitionError,
    SetFunction,
    format_rational,
    global_submodularity_check,
    is_decreasing,
    is_increasing,
    is_modular,
    is_modular_on_pair,
    is_submodular,
    is_supermodular,
    linear_combine,
    norm_inf,
    quotient,
    symmetrize,
    to_rational,
)
from conftest import random_set_function


def test_ground_set_limits():
    GroundSet(1)
    GroundSet(16)
    with pytest.raises(GroundSetError):
        GroundSet(0)
    with pytest.raises(GroundSetError):
        GroundSet(17)


def test_ground_set_masks():
    g = GroundSet(3)
    assert g.full_mask == 0b111
    assert g.size == 8
    assert list(g.subsets()) == list(range(8))
    with pytest.raises(GroundSetError):
        g.check_mask(0b1000)


def test_set_function_arithmetic():
    g = GroundSet(2)
    f = SetFunction(g, (0, 1, 2, 3))
    h = SetFunction(g, (0, 1, 1, 1))
    assert (f + h).values == (0, 2, 3, 4)
    assert (f - h).values == (0, 0, 1, 2)
    assert (-f).values == (0, -1, -2, -3)
    assert f.scale(Fraction(1, 2)).values == (0, Fraction(1, 2), 1, Fraction(3, 2))
    assert f.shift(1).values == (1, 2, 3, 4)
    assert f.shift(1).normalize_at_empty() == f


def test_cardinality_based():
    g = GroundSet(3)
    f = SetFunction.cardinality_based(g, (0, 2, 3, 3))
    assert f(0b000) == 0
    assert f(0b010) == 2
    assert f(0b110) == 3
    assert f(0b111) == 3


def test_json_round_trip():
    g = GroundSet(2)
    f = SetFunction(g, (0, Fraction(1, 3), -2, Fraction(7, 2)))
    assert SetFunction.from_json_dict(f.to_json_dict()) == f


def test_rational_formatting():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert to_rational("3/6") == Fraction(1, 2)
    with pytest.raises(ValueError):
        to_rational("0.5x")


def test_submodularity_predicates():
    g = GroundSet(3)
    # |X| is modular, min(|X|, 2) is submodular, |X|^2 is supermodular
    card = SetFunction.from_callable(g, lambda m: Fraction(bin(m).count("1")))
    capped = SetFunction.from_callable(g, lambda m: Fraction(min(bin(m).count("1"), 2)))
    squared = SetFunction.from_callable(g, lambda m: Fraction(bin(m).count("1") ** 2))
    assert is_modular(card)[0]
    assert is_submodular(capped)[0]
    assert not is_submodular(squared)[0]
    assert is_supermodular(squared)[0]
    ok, witness = is_submodular(squared)
    assert not ok and witness is not None
    x, u, v = witness
    lhs = squared(x | 1 << u) + squared(x | 1 << v)
    rhs = squared(x | 1 << u | 1 << v) + squared(x)
    assert lhs < rhs


def test_monotonicity_predicates():
    g = GroundSet(3)
    card = SetFunction.from_callable(g, lambda m: Fraction(bin(m).count("1")))
    assert is_increasing(card)[0]
    assert not is_decreasing(card)[0]
    assert is_decreasing(-card)[0]
    ok, witness = is_increasing(-card)
    assert not ok
    x, u = witness
    assert (-card)(x | 1 << u) < (-card)(x)


def test_global_submodularity_agrees_with_local():
    rng = random.Random(5)
    for _ in range(50):
        f = random_set_function(rng, 4)
        assert global_submodularity_check(f)[0] == is_submodular(f)[0]


def test_modular_on_pair():
    g = GroundSet(2)
    f = SetFunction(g, (0, 1, 1, 2))
    assert is_modular_on_pair(f, 0b01, 0b10)
    h = SetFunction(g, (0, 1, 1, 3))
    assert not is_modular_on_pair(h, 0b01, 0b10)


def test_norm_inf():
    g = GroundSet(2)
    f = SetFunction(g, (0, Fraction(-5, 2), 1, 2))
    assert norm_inf(f) == Fraction(5, 2)


def test_linear_combine():
    g = GroundSet(2)
    f = SetFunction(g, (0, 1, 2, 3))
    h = SetFunction(g, (0, 1, 1, 1))
    combo = linear_combine([(2, f), (-1, h)])
    assert combo.values == (0, 1, 3, 5)


def test_partition_validation():
    g = GroundSet(4)
    Partition(g, (0b0011, 0b1100))
    with pytest.raises(PartitionError):
        Partition(g, (0b0011, 0b0110))  # overlap
    with pytest.raises(PartitionError):
        Partition(g, (0b0011,))  # does not cover


def test_quotient_round_trip():
    g = GroundSet(4)
    f = SetFunction.from_callable(g, lambda m: Fraction(bin(m).count("1") ** 2))
    p = Partition(g, (0b0011, 0b0100, 0b1000))
    q = quotient(f, p)
    assert q.ground.n == 3
    # each quotient value is f evaluated at the union of the chosen classes
    for mask in range(8):
        union = 0
        for i, cls in enumerate(p.classes):
            if mask >> i & 1:
                union |= cls
        assert q(mask) == f(union)
    # quotient by singletons is the identity
    assert quotient(f, Partition.singletons(g)).values == f.values


def test_symmetrize():
    g = GroundSet(3)
    f = SetFunction(g, (0, 1, 2, 3, 0, 1, 2, 3))
    s = symmetrize(f)
    for mask in range(8):
        assert s(mask) == f(mask) + f(g.full_mask & ~mask)
    shifted = symmetrize(f, shift=-3)
    assert shifted(0) == f(0) + f(g.full_mask) - 3
