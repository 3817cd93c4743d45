"""Ground sets, subset masks, and exact-rational set functions.

Subsets of a ground set of size n (n <= 16) are encoded as n-bit integers,
and a set function is a dense table of 2**n Fractions indexed by mask.
All arithmetic is exact; nothing in this package ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

RationalLike = Union[Fraction, int, str]

MAX_GROUND = 16


def to_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and canonical "p/q" strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    """Canonical string form: "p" for integers, "p/q" otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GroundSetError(ValueError):
    pass


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class GroundSet:
    """A finite ground set; elements are the indices 0..n-1."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND:
            raise GroundSetError(f"ground set size must be in 1..{MAX_GROUND}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        return 1 << self.n

    def subsets(self) -> Iterator[int]:
        return iter(range(1 << self.n))

    def nonempty_subsets(self) -> Iterator[int]:
        return iter(range(1, 1 << self.n))

    def elements(self, mask: int) -> Iterator[int]:
        for i in range(self.n):
            if mask >> i & 1:
                yield i

    def check_mask(self, mask: int) -> int:
        if not isinstance(mask, int) or mask < 0 or mask > self.full_mask:
            raise GroundSetError(f"invalid subset mask {mask!r} for ground set of size {self.n}")
        return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


class SetFunction:
    """Immutable dense table of exact rational values over all subsets.

    The default constructor is "raw" and accepts arbitrary values; use
    :meth:`normalized` to reject tables with a nonzero value at the
    empty set.
    """

    __slots__ = ("ground", "values")

    def __init__(self, ground: GroundSet, values: Sequence[RationalLike]):
        if len(values) != ground.size:
            raise ValueError(f"expected {ground.size} values, got {len(values)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "values", tuple(to_rational(v) for v in values))

    def __setattr__(self, name, value):
        raise AttributeError("SetFunction is immutable")

    @classmethod
    def normalized(cls, ground: GroundSet, values: Sequence[RationalLike]) -> "SetFunction":
        f = cls(ground, values)
        if f.values[0] != 0:
            raise ValueError(f"normalized constructor requires value 0 on the empty set, got {f.values[0]}")
        return f

    @classmethod
    def zero(cls, ground: GroundSet) -> "SetFunction":
        return cls(ground, [0] * ground.size)

    @classmethod
    def from_callable(cls, ground: GroundSet, fn) -> "SetFunction":
        return cls(ground, [fn(mask) for mask in ground.subsets()])

    @classmethod
    def cardinality_based(cls, ground: GroundSet, g: Sequence[RationalLike]) -> "SetFunction":
        """Build f(X) = g[|X|] from a table of n+1 values."""
        if len(g) != ground.n + 1:
            raise ValueError(f"need {ground.n + 1} cardinality values")
        gr = [to_rational(v) for v in g]
        return cls(ground, [gr[popcount(m)] for m in ground.subsets()])

    # -- evaluation and algebra ------------------------------------------

    def __call__(self, mask: int) -> Fraction:
        self.ground.check_mask(mask)
        return self.values[mask]

    def evaluate(self, mask: int) -> Fraction:
        return self(mask)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFunction)
            and self.ground == other.ground
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.values))

    def __repr__(self) -> str:
        vals = ", ".join(format_rational(v) for v in self.values)
        return f"SetFunction(n={self.ground.n}, [{vals}])"

    def __add__(self, other: "SetFunction") -> "SetFunction":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "SetFunction") -> "SetFunction":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "SetFunction":
        return linear_combine([(-1, self)])

    def scale(self, c: RationalLike) -> "SetFunction":
        return linear_combine([(c, self)])

    def shift(self, c: RationalLike) -> "SetFunction":
        """Add the constant c to every value."""
        c = to_rational(c)
        return SetFunction(self.ground, [v + c for v in self.values])

    def normalize_at_empty(self) -> "SetFunction":
        """Shift so that the empty set gets value 0 (explicit, never implicit)."""
        return self.shift(-self.values[0])

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.ground.n, "values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "SetFunction":
        ground = GroundSet(int(d["n"]))
        return cls(ground, [to_rational(v) for v in d["values"]])


@dataclass(frozen=True)
class Partition:
    """An ordered partition of the ground set into nonempty classes."""

    ground: GroundSet
    classes: Tuple[int, ...]

    def __post_init__(self) -> None:
        union = 0
        for c in self.classes:
            self.ground.check_mask(c)
            if c == 0:
                raise PartitionError("partition classes must be nonempty")
            if union & c:
                raise PartitionError("partition classes must be pairwise disjoint")
            union |= c
        if union != self.ground.full_mask:
            raise PartitionError("partition classes must cover the ground set")

    @property
    def q(self) -> int:
        return len(self.classes)

    @classmethod
    def singletons(cls, ground: GroundSet) -> "Partition":
        return cls(ground, tuple(1 << i for i in range(ground.n)))


def linear_combine(terms: Iterable[Tuple[RationalLike, SetFunction]]) -> SetFunction:
    """Pointwise exact linear combination; all terms must share a ground set."""
    terms = [(to_rational(c), f) for c, f in terms]
    if not terms:
        raise ValueError("empty linear combination")
    ground = terms[0][1].ground
    for _, f in terms:
        if f.ground != ground:
            raise ValueError("mismatched ground sets in linear combination")
    values = [Fraction(0)] * ground.size
    for c, f in terms:
        if c == 0:
            continue
        for m, v in enumerate(f.values):
            values[m] += c * v
    return SetFunction(ground, values)


def norm_inf(f: SetFunction) -> Fraction:
    """sup-norm: the maximum of |f(X)| over all subsets."""
    return max(abs(v) for v in f.values)


def quotient(f: SetFunction, partition: Partition) -> SetFunction:
    """Collapse f along a partition: g(I) = f(union of the classes in I)."""
    if partition.ground != f.ground:
        raise PartitionError("partition is for a different ground set")
    q = partition.q
    small = GroundSet(q)
    values = []
    for idx in small.subsets():
        union = 0
        for i in range(q):
            if idx >> i & 1:
                union |= partition.classes[i]
        values.append(f.values[union])
    return SetFunction(small, values)


def symmetrize(f: SetFunction, shift: RationalLike = 0) -> SetFunction:
    """g(X) = f(X) + f(J \\ X) + shift."""
    shift = to_rational(shift)
    full = f.ground.full_mask
    return SetFunction(f.ground, [f.values[m] + f.values[full ^ m] + shift for m in f.ground.subsets()])


# -- predicates ----------------------------------------------------------
#
# Each predicate returns (verdict, witness); the witness is None on success
# and otherwise the lexicographically first counterexample in mask order.


def is_submodular(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """Local diminishing-returns test; witness is (X, u, v) on failure."""
    n = f.ground.n
    vals = f.values
    for X in f.ground.subsets():
        outside = [u for u in range(n) if not X >> u & 1]
        for a in range(len(outside)):
            u = outside[a]
            for b in range(a + 1, len(outside)):
                v = outside[b]
                if vals[X | 1 << u] + vals[X | 1 << v] - vals[X] - vals[X | 1 << u | 1 << v] < 0:
                    return False, (X, u, v)
    return True, None


def is_supermodular(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    return is_submodular(-f)


def is_increasing(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Monotone on all single-element extensions; witness is (X, u)."""
    n = f.ground.n
    vals = f.values
    for X in f.ground.subsets():
        for u in range(n):
            if not X >> u & 1 and vals[X] > vals[X | 1 << u]:
                return False, (X, u)
    return True, None


def is_decreasing(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int]]]:
    n = f.ground.n
    vals = f.values
    for X in f.ground.subsets():
        for u in range(n):
            if not X >> u & 1 and vals[X] < vals[X | 1 << u]:
                return False, (X, u)
    return True, None


def is_modular(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """Exact equality in the local submodularity form; witness is (X, u, v)."""
    n = f.ground.n
    vals = f.values
    for X in f.ground.subsets():
        outside = [u for u in range(n) if not X >> u & 1]
        for a in range(len(outside)):
            u = outside[a]
            for b in range(a + 1, len(outside)):
                v = outside[b]
                if vals[X | 1 << u] + vals[X | 1 << v] != vals[X] + vals[X | 1 << u | 1 << v]:
                    return False, (X, u, v)
    return True, None


def is_modular_on_pair(f: SetFunction, a: int, b: int) -> bool:
    f.ground.check_mask(a)
    f.ground.check_mask(b)
    return f.values[a] + f.values[b] == f.values[a & b] + f.values[a | b]


def global_submodularity_check(f: SetFunction) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Four-set definition over all pairs; O(4^n) oracle for the local test."""
    vals = f.values
    for X in f.ground.subsets():
        for Y in f.ground.subsets():
            if vals[X] + vals[Y] < vals[X & Y] + vals[X | Y]:
                return False, (X, Y)
    return True, None
