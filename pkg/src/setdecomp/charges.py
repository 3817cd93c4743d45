"""Charges (modular set functions), envelopes, and duality.

For a normalized nonnegative submodular f, the upper charge is the
smallest nonnegative charge majorizing f; on a finite ground set it is
simply the sum of singleton values.  The canonical dual

    f*(X) = f(J \\ X) + upper(f)(X) - f(J)

generalizes matroid duality, and the lower charge f - f** is the largest
charge whose subtraction keeps f increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .core import (
    GroundSet,
    RationalLike,
    SetFunction,
    format_rational,
    is_increasing,
    is_submodular,
    to_rational,
)


class PreconditionError(ValueError):
    """An envelope/dual operation was fed a function outside its domain."""


@dataclass(frozen=True)
class Charge:
    """A finitely additive set function, determined by its singleton values."""

    ground: GroundSet
    atoms: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.atoms) != self.ground.n:
            raise ValueError(f"expected {self.ground.n} atoms, got {len(self.atoms)}")

    @classmethod
    def of(cls, ground: GroundSet, atoms: Sequence[RationalLike]) -> "Charge":
        return cls(ground, tuple(to_rational(a) for a in atoms))

    def __call__(self, mask: int) -> Fraction:
        self.ground.check_mask(mask)
        total = Fraction(0)
        for i in range(self.ground.n):
            if mask >> i & 1:
                total += self.atoms[i]
        return total

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.atoms)

    def as_set_function(self) -> SetFunction:
        return SetFunction(self.ground, [self(m) for m in self.ground.subsets()])

    def to_json_dict(self) -> dict:
        return {"n": self.ground.n, "atoms": [format_rational(a) for a in self.atoms]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Charge":
        return cls.of(GroundSet(int(d["n"])), d["atoms"])


def _require(f: SetFunction, *, nonneg=False, submodular=False, increasing=False) -> None:
    if f.values[0] != 0:
        raise PreconditionError(f"requires f(empty) = 0, got {f.values[0]}")
    if nonneg:
        for m, v in enumerate(f.values):
            if v < 0:
                raise PreconditionError(f"requires f >= 0; f({m}) = {v}")
    if submodular:
        ok, witness = is_submodular(f)
        if not ok:
            raise PreconditionError(f"requires submodularity; violated at (X,u,v) = {witness}")
    if increasing:
        ok, witness = is_increasing(f)
        if not ok:
            raise PreconditionError(f"requires monotonicity; violated at (X,u) = {witness}")


def upper_charge(f: SetFunction) -> Charge:
    """Smallest nonnegative charge majorizing f: atoms are the singleton values."""
    _require(f, nonneg=True, submodular=True)
    return Charge(f.ground, tuple(f.values[1 << i] for i in range(f.ground.n)))


def dual_wrt(f: SetFunction, eta: Charge) -> SetFunction:
    """Dual with respect to a majorizing charge: f(J\\X) + eta(X) - f(J)."""
    if eta.ground != f.ground:
        raise PreconditionError("charge is for a different ground set")
    _require(f, submodular=True, increasing=True)
    eta_sf = eta.as_set_function()
    for m in f.ground.subsets():
        if f.values[m] > eta_sf.values[m]:
            raise PreconditionError(f"requires f <= eta; violated at mask {m}")
    full = f.ground.full_mask
    f_j = f.values[full]
    return SetFunction(
        f.ground,
        [f.values[full ^ x] + eta_sf.values[x] - f_j for x in f.ground.subsets()],
    )


def canonical_dual(f: SetFunction) -> SetFunction:
    _require(f, nonneg=True, submodular=True, increasing=True)
    return dual_wrt(f, upper_charge(f))


def lower_charge(f: SetFunction) -> Charge:
    """Largest charge whose subtraction keeps f increasing.

    Closed form: atom x gets f(x) - f*(x), which equals the singleton gap
    between the upper charges of f and of its canonical dual.
    """
    _require(f, nonneg=True, submodular=True, increasing=True)
    star = canonical_dual(f)
    atoms = tuple(
        f.values[1 << i] - star.values[1 << i] for i in range(f.ground.n)
    )
    return Charge(f.ground, atoms)


def double_dual(f: SetFunction) -> SetFunction:
    return canonical_dual(canonical_dual(f))


def verify_lower_charge_maximality(f: SetFunction) -> bool:
    """LP oracle for the lower charge.

    Maximizes the total of a charge subject to a(J) - a(X) <= f(J) - f(X)
    for every X (the exact condition for f - a to stay increasing), then
    compares optimum and optimizer against the closed form.
    """
    from .simplex import LinearProgram, solve_lp

    _require(f, nonneg=True, submodular=True, increasing=True)
    n = f.ground.n
    full = f.ground.full_mask
    f_j = f.values[full]
    constraints = []
    for x in f.ground.subsets():
        # a(J) - a(X) = a(J \ X)
        row = [Fraction(1) if not x >> i & 1 else Fraction(0) for i in range(n)]
        constraints.append((row, "<=", f_j - f.values[x]))
    lp = LinearProgram(
        num_vars=n,
        objective=[Fraction(1)] * n,
        maximize=True,
        constraints=constraints,
    )
    sol = solve_lp(lp)
    if sol.status != "optimal":
        return False
    expected = lower_charge(f)
    return sol.value == expected(full) and tuple(sol.assignment) == expected.atoms
