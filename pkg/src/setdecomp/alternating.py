"""Alternating sums and the k-alternating hierarchy.

The alternating sum of a set function f over a pivot set A0 and classes
A1..Ak is

    V_f(A0; A1..Ak) = sum over K subset of {1..k} of (-1)^|K| f(A0 u U_{i in K} Ai).

f is weakly k-alternating when V_f <= 0 on every pairwise-disjoint tuple,
k-alternating when the same holds for arbitrary tuples, and those two
notions are linked: k-alternating is equivalent to weakly l-alternating
for every l <= k.  The decision procedures here use the weak form as the
primitive (disjoint tuples are enumerated as base-(k+2) counters over the
elements), keeping direct enumeration of arbitrary tuples only as a
small-instance oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    Fraction,
    GroundSet,
    Partition,
    SetFunction,
    format_rational,
    linear_combine,
    popcount,
)

# Weak checks enumerate (k+2)^n assignments; refuse anything larger.
ENUMERATION_LIMIT = 10**8

# numpy fast path works on chunks of assignments; 2^k arrays per chunk live
# at once, so keep chunks modest.
_CHUNK = 1 << 16


class EnumerationLimitError(ValueError):
    """Raised when a weak-alternation check would exceed the size cap."""


class NotNormalizedError(ValueError):
    """Raised when an operation requires f(empty) = 0."""


@dataclass(frozen=True)
class AlternatingWitness:
    """A violating tuple: V_f(a0; classes) = value > 0."""

    a0: int
    classes: Tuple[int, ...]
    value: Fraction

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("a witness must have a positive alternating sum")

    def to_json_dict(self) -> dict:
        return {"A0": self.a0, "tuple": list(self.classes), "value": format_rational(self.value)}


def alt_sum(f: SetFunction, a0: int, classes: Sequence[int]) -> Fraction:
    """Exact alternating sum over all 2^k index subsets."""
    k = len(classes)
    if k < 1:
        raise ValueError("alternating sum needs at least one class")
    f.ground.check_mask(a0)
    for c in classes:
        f.ground.check_mask(c)
    vals = f.values
    total = Fraction(0)
    for code in range(1 << k):
        union = a0
        for i in range(k):
            if code >> i & 1:
                union |= classes[i]
        if popcount(code) & 1:
            total -= vals[union]
        else:
            total += vals[union]
    return total


def alt_sum_recursive_check(f: SetFunction, a0: int, classes: Sequence[int]) -> Fraction:
    """Test oracle: V(A0; A1..Ak) as a difference of two (k-1)-sums."""
    k = len(classes)
    if k < 2:
        raise ValueError("recursive form needs at least two classes")
    head = classes[:-1]
    return alt_sum(f, a0, head) - alt_sum(f, a0 | classes[-1], head)


def _require_normalized(f: SetFunction) -> None:
    if f.values[0] != 0:
        raise NotNormalizedError(f"operation requires f(empty) = 0, got {f.values[0]}")


def _int_table(f: SetFunction) -> Tuple[List[int], int]:
    """Scale values to integers: returns (table, denominator)."""
    denom = 1
    for v in f.values:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    return [int(v * denom) for v in f.values], denom


def _check_enum_size(n: int, k: int) -> None:
    if (k + 2) ** n > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"weak {k}-alternation check needs {(k + 2) ** n} assignments "
            f"(limit {ENUMERATION_LIMIT})"
        )


def _decode_assignment(code: int, n: int, k: int) -> Tuple[int, Tuple[int, ...]]:
    """Digit d of element e: 0 -> A0, 1..k -> A1..Ak, k+1 -> unused."""
    a0 = 0
    classes = [0] * k
    for e in range(n):
        d = code % (k + 2)
        code //= k + 2
        if d == 0:
            a0 |= 1 << e
        elif d <= k:
            classes[d - 1] |= 1 << e
    return a0, tuple(classes)


def _scan_chunk_numpy(ivals: np.ndarray, n: int, k: int, start: int, stop: int):
    """V values for assignment codes [start, stop); returns (V, valid)."""
    codes = np.arange(start, stop, dtype=np.int64)
    rest = codes.copy()
    masks = np.zeros((k + 2, stop - start), dtype=np.int64)
    for e in range(n):
        d = rest % (k + 2)
        rest //= k + 2
        for j in range(k + 2):
            masks[j] |= np.where(d == j, 1 << e, 0)
    valid = np.ones(stop - start, dtype=bool)
    for j in range(1, k + 1):
        valid &= masks[j] != 0
    # subset dp over the classes: unions[K] for K in increasing code order
    unions = [masks[0]]
    for i in range(1, k + 1):
        unions.extend(u | masks[i] for u in list(unions))
    v = np.zeros(stop - start, dtype=np.int64)
    for idx, u in enumerate(unions):
        if popcount(idx) & 1:
            v -= ivals[u]
        else:
            v += ivals[u]
    return v, valid


def _numpy_safe(ivals: List[int], k: int) -> bool:
    m = max(abs(x) for x in ivals)
    return m * (1 << k) < (1 << 62)


def _first_weak_violation(f: SetFunction, k: int) -> Optional[Tuple[int, Tuple[int, ...], Fraction]]:
    """First assignment (counter order) of a disjoint tuple with V > 0."""
    n = f.ground.n
    _check_enum_size(n, k)
    total = (k + 2) ** n
    ivals, denom = _int_table(f)
    if _numpy_safe(ivals, k):
        arr = np.array(ivals, dtype=np.int64)
        for start in range(0, total, _CHUNK):
            stop = min(start + _CHUNK, total)
            v, valid = _scan_chunk_numpy(arr, n, k, start, stop)
            bad = valid & (v > 0)
            if bad.any():
                idx = int(np.argmax(bad))
                a0, classes = _decode_assignment(start + idx, n, k)
                return a0, classes, Fraction(int(v[idx]), denom)
        return None
    # exact fallback for huge values
    vals = f.values
    for code in range(total):
        a0, classes = _decode_assignment(code, n, k)
        if any(c == 0 for c in classes):
            continue
        v = alt_sum(f, a0, classes)
        if v > 0:
            return a0, classes, v
    return None


def max_disjoint_alt_sum(
    f: SetFunction, k_max: Optional[int] = None
) -> Tuple[Fraction, Optional[Tuple[int, Tuple[int, ...]]]]:
    """Maximum of V_f over pairwise-disjoint tuples with nonempty classes,
    for 1 <= k <= k_max (default n).  Returns (max, first attaining tuple).
    """
    _require_normalized(f)
    n = f.ground.n
    if k_max is None:
        k_max = n
    ivals, denom = _int_table(f)
    best: Optional[Fraction] = None
    best_tuple = None
    for k in range(1, k_max + 1):
        _check_enum_size(n, k)
        total = (k + 2) ** n
        if _numpy_safe(ivals, k):
            arr = np.array(ivals, dtype=np.int64)
            for start in range(0, total, _CHUNK):
                stop = min(start + _CHUNK, total)
                v, valid = _scan_chunk_numpy(arr, n, k, start, stop)
                if not valid.any():
                    continue
                vv = np.where(valid, v, np.iinfo(np.int64).min)
                idx = int(np.argmax(vv))
                val = Fraction(int(vv[idx]), denom)
                if best is None or val > best:
                    best = val
                    best_tuple = _decode_assignment(start + idx, n, k)
        else:
            for code in range(total):
                a0, classes = _decode_assignment(code, n, k)
                if any(c == 0 for c in classes):
                    continue
                val = alt_sum(f, a0, classes)
                if best is None or val > best:
                    best = val
                    best_tuple = (a0, classes)
    assert best is not None
    return best, best_tuple


def is_weakly_k_alternating(f: SetFunction, k: int) -> Tuple[bool, Optional[AlternatingWitness]]:
    """Check V_f <= 0 on all pairwise-disjoint tuples with k nonempty classes."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_normalized(f)
    hit = _first_weak_violation(f, k)
    if hit is None:
        return True, None
    a0, classes, value = hit
    return False, AlternatingWitness(a0, classes, value)


def is_k_alternating(f: SetFunction, k: int) -> Tuple[bool, Optional[AlternatingWitness]]:
    """Decide k-alternation through the weak checks for l = 1..k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_normalized(f)
    for ell in range(1, k + 1):
        ok, witness = is_weakly_k_alternating(f, ell)
        if not ok:
            return False, witness
    return True, None


def is_k_alternating_bruteforce(f: SetFunction, k: int) -> Tuple[bool, Optional[AlternatingWitness]]:
    """Oracle: enumerate arbitrary (not necessarily disjoint) tuples.

    Exponential in (k+1)*n; restricted to n <= 5, k <= 3.
    """
    n = f.ground.n
    if n > 5 or k > 3:
        raise EnumerationLimitError("brute-force oracle limited to n <= 5, k <= 3")
    _require_normalized(f)
    size = 1 << n
    vals = f.values
    classes = [0] * k

    def rec(depth: int, a0: int) -> Optional[AlternatingWitness]:
        if depth == k:
            v = Fraction(0)
            for code in range(1 << k):
                union = a0
                for i in range(k):
                    if code >> i & 1:
                        union |= classes[i]
                v += -vals[union] if popcount(code) & 1 else vals[union]
            if v > 0:
                return AlternatingWitness(a0, tuple(classes), v)
            return None
        for c in range(size):
            classes[depth] = c
            hit = rec(depth + 1, a0)
            if hit is not None:
                return hit
        return None

    for a0 in range(size):
        hit = rec(0, a0)
        if hit is not None:
            return False, hit
    return True, None


def is_weakly_infinite_alternating(f: SetFunction) -> Tuple[bool, Optional[AlternatingWitness]]:
    """Weak k-alternation for k = 2..n.

    k is capped at n: a disjoint tuple with more than n nonempty classes
    cannot exist, and tuples containing an empty class never violate.
    """
    _require_normalized(f)
    for k in range(2, f.ground.n + 1):
        ok, witness = is_weakly_k_alternating(f, k)
        if not ok:
            return False, witness
    return True, None


def is_infinite_alternating(f: SetFunction) -> bool:
    """Finite-domain test: every coverage coefficient is nonnegative."""
    from .coverage import to_coefficients

    _require_normalized(f)
    coeffs = to_coefficients(f)
    return all(a >= 0 for a in coeffs.alpha)


def make_ell_not_ell_plus_one(ground: GroundSet, ell: int, x_mask: int) -> SetFunction:
    """A function that is ell-alternating but not (ell+1)-alternating.

    Built as (sum of all intersection indicators of sets of size <= ell)
    minus the indicator of the given (ell+1)-element set.
    """
    from .coverage import extremal

    ground.check_mask(x_mask)
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if popcount(x_mask) != ell + 1:
        raise ValueError(f"need |X| = ell + 1 = {ell + 1}, got {popcount(x_mask)}")
    if ground.n <= ell:
        raise ValueError("ground set must have more than ell elements")
    terms = [(Fraction(1), extremal(ground, a)) for a in ground.nonempty_subsets() if popcount(a) <= ell]
    terms.append((Fraction(-1), extremal(ground, x_mask)))
    return linear_combine(terms)


def make_partition_matroid_rank(partition: Partition) -> SetFunction:
    """Rank function r(X) = number of partition classes met by X."""
    ground = partition.ground
    values = []
    for x in ground.subsets():
        values.append(Fraction(sum(1 for c in partition.classes if c & x)))
    return SetFunction(ground, values)
