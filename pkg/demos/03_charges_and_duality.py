"""Charge envelopes and the canonical dual.

For an increasing submodular function f with f(empty) = 0 the smallest
nonnegative charge above f is the sum of singleton values.  Plugging it
into f*(X) = f(J without X) + charge(X) - f(J) generalizes matroid rank
duality.  The lower charge, the largest charge whose subtraction keeps
f increasing, drops out of the dual in closed form, and an exact LP
confirms its maximality.
"""

from fractions import Fraction

from setdecomp import (
    GroundSet,
    SetFunction,
    canonical_dual,
    double_dual,
    lower_charge,
    upper_charge,
    verify_lower_charge_maximality,
)


def main():
    g = GroundSet(4)
    # rank of the uniform matroid U_{2,4}
    f = SetFunction.from_callable(g, lambda m: Fraction(min(bin(m).count("1"), 2)))

    up = upper_charge(f)
    print("upper charge atoms:", [str(a) for a in up.atoms])

    star = canonical_dual(f)
    print("canonical dual values:", [str(star(m)) for m in g.subsets()])
    # for a matroid rank this is the classical dual rank
    print()

    low = lower_charge(f)
    print("lower charge atoms:", [str(a) for a in low.atoms])
    print("LP confirms maximality:", verify_lower_charge_maximality(f))

    # the double dual differs from f by exactly the lower charge
    gap = f - double_dual(f)
    assert gap == low.as_set_function()
    print("f - f** equals the lower charge:", True)


if __name__ == "__main__":
    main()
