"""Coverage basis and decompositions into differences of coverage functions.

Every set function f with f(empty) = 0 over a finite ground set has a
unique expansion f = sum alpha_A phi_A over nonempty A, where phi_A is
the intersection indicator (1 iff X meets A).  f is a coverage function
exactly when every alpha_A is nonnegative.

The production transform runs in O(n 2^n) through a reflection to the
subset lattice followed by a Moebius inversion; the explicit basis
matrices are kept as an O(4^n) oracle only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .core import (
    GroundSet,
    SetFunction,
    format_rational,
    popcount,
    to_rational,
)
from .alternating import NotNormalizedError, max_disjoint_alt_sum


@dataclass(frozen=True)
class CoverageCoefficients:
    """Expansion coefficients over the intersection-indicator basis.

    alpha is a dense table indexed by mask; the entry at mask 0 is unused
    and always zero.
    """

    ground: GroundSet
    alpha: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.alpha) != self.ground.size:
            raise ValueError("coefficient table has the wrong length")
        if self.alpha[0] != 0:
            raise ValueError("the empty set carries no coefficient")

    def support(self) -> List[int]:
        return [m for m in self.ground.nonempty_subsets() if self.alpha[m] != 0]

    def min_coefficient(self) -> Fraction:
        return min(self.alpha[m] for m in self.ground.nonempty_subsets())

    def to_json_dict(self) -> dict:
        return {
            "n": self.ground.n,
            "alpha": {str(m): format_rational(self.alpha[m]) for m in self.support()},
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "CoverageCoefficients":
        ground = GroundSet(int(d["n"]))
        alpha = [Fraction(0)] * ground.size
        for key, val in d["alpha"].items():
            m = int(key)
            ground.check_mask(m)
            alpha[m] = to_rational(val)
        return cls(ground, tuple(alpha))


def extremal(ground: GroundSet, a_mask: int) -> SetFunction:
    """The intersection indicator phi_A: 1 iff X meets A; requires A nonempty."""
    ground.check_mask(a_mask)
    if a_mask == 0:
        raise ValueError("extremal generator requires a nonempty set")
    return SetFunction(ground, [Fraction(1 if x & a_mask else 0) for x in ground.subsets()])


def _zeta(values: List[Fraction], n: int) -> List[Fraction]:
    """In-place subset sums: out[X] = sum over B subset X of values[B]."""
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                out[m] += out[m ^ bit]
    return out


def _moebius(values: List[Fraction], n: int) -> List[Fraction]:
    """Inverse of the subset-sum transform."""
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                out[m] -= out[m ^ bit]
    return out


def from_coefficients(coeffs: CoverageCoefficients) -> SetFunction:
    """f(X) = sum of alpha_A over A meeting X, via total minus subset sums."""
    ground = coeffs.ground
    subset_sums = _zeta(list(coeffs.alpha), ground.n)
    total = subset_sums[ground.full_mask]
    full = ground.full_mask
    return SetFunction(ground, [total - subset_sums[full ^ x] for x in ground.subsets()])


def to_coefficients(f: SetFunction) -> CoverageCoefficients:
    """Invert the basis expansion; exact, and verified by reconstruction."""
    if f.values[0] != 0:
        raise NotNormalizedError("coefficient extraction requires f(empty) = 0")
    ground = f.ground
    full = ground.full_mask
    f_j = f.values[full]
    reflected = [f_j - f.values[full ^ y] for y in ground.subsets()]
    alpha = _moebius(reflected, ground.n)
    coeffs = CoverageCoefficients(ground, tuple(alpha))
    if from_coefficients(coeffs) != f:
        raise AssertionError("coefficient round-trip failed; this is a bug")
    return coeffs


# -- explicit basis matrices (test oracle, O(4^n)) -----------------------


def basis_matrix_apply(ground: GroundSet, alpha: Tuple[Fraction, ...]) -> SetFunction:
    """Row X of the basis matrix indicates the sets meeting X."""
    values = [Fraction(0)] * ground.size
    for x in ground.nonempty_subsets():
        acc = Fraction(0)
        for a in ground.nonempty_subsets():
            if x & a:
                acc += alpha[a]
        values[x] = acc
    return SetFunction(ground, values)


def inverse_matrix_apply(f: SetFunction) -> CoverageCoefficients:
    """Entry (X, Y) is (-1)^(|X n Y| - 1) when X u Y covers the ground set."""
    ground = f.ground
    full = ground.full_mask
    alpha = [Fraction(0)] * ground.size
    for x in ground.nonempty_subsets():
        acc = Fraction(0)
        for y in ground.nonempty_subsets():
            if x | y == full:
                if popcount(x & y) & 1:
                    acc += f.values[y]
                else:
                    acc -= f.values[y]
        alpha[x] = acc
    return CoverageCoefficients(ground, tuple(alpha))


def support_size_bound_check(coeffs: CoverageCoefficients, k0: int) -> bool:
    """True iff no set of size >= k0 carries a coefficient.

    Only meaningful for coverage functions, so negative coefficients are
    rejected.
    """
    if coeffs.min_coefficient() < 0:
        raise ValueError("support bound check requires nonnegative coefficients")
    return all(
        coeffs.alpha[m] == 0
        for m in coeffs.ground.nonempty_subsets()
        if popcount(m) >= k0
    )


def _split_signs(coeffs: CoverageCoefficients) -> Tuple[CoverageCoefficients, CoverageCoefficients]:
    pos = [a if a > 0 else Fraction(0) for a in coeffs.alpha]
    neg = [-a if a < 0 else Fraction(0) for a in coeffs.alpha]
    return (
        CoverageCoefficients(coeffs.ground, tuple(pos)),
        CoverageCoefficients(coeffs.ground, tuple(neg)),
    )


def diff_decompose_canonical(f: SetFunction) -> Tuple[SetFunction, SetFunction]:
    """Split the coefficient vector by sign: f = f1 - f2 with both parts
    coverage functions of disjoint support."""
    coeffs = to_coefficients(f)
    pos, neg = _split_signs(coeffs)
    return from_coefficients(pos), from_coefficients(neg)


def diff_decompose_uniform(f: SetFunction) -> Tuple[SetFunction, SetFunction, Fraction]:
    """f = f1 - f2 with f2 = m * (sum of all basis indicators), where m is
    the largest alternating sum over disjoint tuples.  When m <= 0 the
    function is already a coverage function and f2 = 0."""
    if f.values[0] != 0:
        raise NotNormalizedError("decomposition requires f(empty) = 0")
    ground = f.ground
    m, _ = max_disjoint_alt_sum(f)
    if m <= 0:
        return f, SetFunction.zero(ground), Fraction(0)
    uniform = [Fraction(0)] + [m] * (ground.size - 1)
    f2 = from_coefficients(CoverageCoefficients(ground, tuple(uniform)))
    f1 = f + f2
    return f1, f2, m
