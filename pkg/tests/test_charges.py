import random
from fractions import Fraction

import pytest

from setdecomp import (
    Charge,
    GroundSet,
    PreconditionError,
    SetFunction,
    canonical_dual,
    double_dual,
    is_decreasing,
    is_increasing,
    is_submodular,
    lower_charge,
    upper_charge,
    verify_lower_charge_maximality,
)
from conftest import random_coverage, random_nonneg_charge, random_set_function


def majorizes(charge, f):
    return all(charge(x) >= f(x) for x in f.ground.subsets())


def test_upper_charge_is_singleton_sums(rng):
    f = random_coverage(rng, 4)
    c = upper_charge(f)
    for e in range(4):
        assert c.atoms[e] == f(1 << e)
    assert c(0b1011) == f(1) + f(2) + f(8)


def test_upper_charge_majorizes_submodular(rng):
    for _ in range(20):
        f = random_coverage(rng, 4)
        assert majorizes(upper_charge(f), f)


def test_upper_charge_minimal_among_majorizing(rng):
    # any charge that majorizes a normalized submodular f dominates the
    # upper charge on every set
    for _ in range(30):
        f = random_coverage(rng, 4)
        c = upper_charge(f)
        other = Charge(
            f.ground,
            tuple(c.atoms[e] + Fraction(rng.randint(0, 3), 2) for e in range(4)),
        )
        assert majorizes(other, f)
        for x in f.ground.subsets():
            assert other(x) >= c(x)


def test_canonical_dual_formula(rng):
    for _ in range(20):
        f = random_coverage(rng, 3)
        g = canonical_dual(f)
        c = upper_charge(f)
        full = f.ground.full_mask
        for x in f.ground.subsets():
            assert g(x) == f(full ^ x) + c(x) - f(full)


def test_dual_preserves_increasing_submodular(rng):
    for _ in range(20):
        f = random_coverage(rng, 4)
        g = canonical_dual(f)
        assert g(0) == 0
        assert is_increasing(g)[0]
        assert is_submodular(g)[0]


def test_double_dual_identity(rng):
    # the defect f - f** is exactly the lower charge
    for _ in range(20):
        f = random_coverage(rng, 4)
        assert f - double_dual(f) == lower_charge(f).as_set_function()


def test_lower_charge_atoms(rng):
    for _ in range(20):
        f = random_coverage(rng, 4)
        low = lower_charge(f)
        g = canonical_dual(f)
        for e in range(4):
            assert low.atoms[e] == f(1 << e) - g(1 << e)


def test_lower_charge_below_function(rng):
    for _ in range(20):
        f = random_coverage(rng, 4)
        low = lower_charge(f)
        for x in f.ground.subsets():
            assert low(x) <= f(x)


def test_lower_charge_maximality(rng):
    for _ in range(15):
        f = random_coverage(rng, 4)
        assert verify_lower_charge_maximality(f)


def test_preconditions():
    g = GroundSet(2)
    not_norm = SetFunction(g, (1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        canonical_dual(not_norm)
    # non-submodular normalized function
    bad = SetFunction(g, (Fraction(0), Fraction(0), Fraction(0), Fraction(2)))
    with pytest.raises(PreconditionError):
        lower_charge(bad)


def test_strongly_bounded_split(rng):
    # f = upper charge + (f - upper charge), second part decreasing submodular
    for _ in range(20):
        f = random_coverage(rng, 4)
        c = upper_charge(f).as_set_function()
        rest = f - c
        assert c + rest == f
        assert is_decreasing(rest)[0]
        assert is_submodular(rest)[0]


def test_charge_as_set_function_is_modular(rng):
    c = random_nonneg_charge(rng, 4)
    f = c.as_set_function()
    for x in f.ground.subsets():
        for y in f.ground.subsets():
            assert f(x) + f(y) == f(x | y) + f(x & y)
