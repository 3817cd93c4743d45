"""Every normalized set function in the intersection-indicator basis.

The functions phi_A(X) = [X meets A] form a basis of the normalized set
functions on a finite ground set.  Expanding in this basis takes one
Möbius transform, and the function is a coverage function exactly when
all coefficients are nonnegative.  Splitting the coefficients by sign
writes any normalized function as a difference of two coverage
functions.
"""

from fractions import Fraction

from setdecomp import GroundSet, SetFunction, from_coefficients, to_coefficients
from setdecomp.coverage import diff_decompose_canonical, diff_decompose_uniform


def show_support(label, coeffs):
    print(label)
    for mask in coeffs.support():
        elements = [i for i in range(coeffs.ground.n) if mask >> i & 1]
        print(f"  alpha{set(elements)} = {coeffs.alpha[mask]}")
    print()


def main():
    g = GroundSet(3)

    # the capped cardinality min(|X|, 2) expands with mixed signs
    f = SetFunction.from_callable(g, lambda m: Fraction(min(bin(m).count("1"), 2)))
    coeffs = to_coefficients(f)
    show_support("coefficients of min(|X|, 2):", coeffs)
    assert from_coefficients(coeffs) == f

    # |X|^2 is not coverage; its negative coefficients say why
    squared = SetFunction.from_callable(g, lambda m: Fraction(bin(m).count("1")) ** 2)
    show_support("coefficients of |X|^2:", to_coefficients(squared))

    f1, f2 = diff_decompose_canonical(squared)
    print("canonical difference of coverage functions for |X|^2:")
    print("  f1 values:", [str(v) for v in f1.values])
    print("  f2 values:", [str(v) for v in f2.values])
    assert f1 - f2 == squared
    print()

    f1u, f2u, m = diff_decompose_uniform(squared)
    print(f"uniform construction (max disjoint alternating sum m = {m}):")
    print("  f1 values:", [str(v) for v in f1u.values])
    print("  f2 values:", [str(v) for v in f2u.values])
    assert f1u - f2u == squared


if __name__ == "__main__":
    main()
