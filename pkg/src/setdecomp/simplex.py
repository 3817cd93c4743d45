"""Exact rational linear programming.

Two entry points:

* :func:`solve_lp` -- a generic dense two-phase simplex over exact
  rationals with Bland's anti-cycling rule, for arbitrary small LPs
  (free variables allowed).  Returns status, optimum, assignment and a
  certificate (dual vector, Farkas vector, or improving ray).

* :func:`solve_min_nonneg` -- a structured route for the large
  decomposition LPs: min c.x, A x >= b, x >= 0 with c >= 0.  The dual
  (max b.y, A^T y <= c, y >= 0) is solved instead, starting from the
  always-feasible slack basis, which keeps the tableau at
  (#vars) x (#rows) instead of the other way around.  The primal
  solution is read off the reduced costs of the slack columns.

Internally gmpy2 rationals are used when available; they are
arbitrary-precision and exact, and an order of magnitude faster than
Fraction in the pivot loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

from .core import RationalLike, to_rational

Relation = str  # "<=", "=", ">="

# Dantzig pricing until this many iterations, then Bland (guarantees
# termination); both deterministic.
_BLAND_SWITCH = 20000


@dataclass
class LinearProgram:
    """Exact-rational LP.  Variables are free unless nonneg is set."""

    num_vars: int
    objective: Sequence[RationalLike]
    maximize: bool
    constraints: List[Tuple[Sequence[RationalLike], Relation, RationalLike]]
    nonneg: bool = False

    def validate(self) -> None:
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length does not match variable count")
        for row, rel, _ in self.constraints:
            if len(row) != self.num_vars:
                raise ValueError("constraint row length does not match variable count")
            if rel not in ("<=", "=", ">="):
                raise ValueError(f"unknown relation {rel!r}")


@dataclass
class LPSolution:
    """status is one of "optimal", "infeasible", "unbounded".

    For optimal solutions, certificate holds one dual multiplier per
    constraint proving the optimum; for infeasible, a Farkas vector; for
    unbounded, an improving feasible ray.
    """

    status: str
    value: Optional[Fraction] = None
    assignment: List[Fraction] = field(default_factory=list)
    certificate: List[Fraction] = field(default_factory=list)


def _pivot(rows: List[List], objrow: List, basis: List[int], r: int, j: int) -> None:
    prow = rows[r]
    inv = 1 / prow[j]
    if inv != 1:
        rows[r] = prow = [a * inv for a in prow]
    for other in rows:
        if other is prow:
            continue
        f = other[j]
        if f:
            for idx, p in enumerate(prow):
                if p:
                    other[idx] -= f * p
    f = objrow[j]
    if f:
        for idx, p in enumerate(prow):
            if p:
                objrow[idx] -= f * p
    basis[r] = j


def _min_simplex(
    rows: List[List],
    basis: List[int],
    costs: List,
    allowed: Sequence[bool],
) -> Tuple[str, List, Optional[int]]:
    """Minimize costs over the tableau in place.

    rows[r] has width ncols+1 (rhs last); basis columns form an identity.
    Returns (status, objrow, entering-column-if-unbounded); objrow[j] is
    the reduced cost c_j - z_j and objrow[-1] is -objective.
    """
    ncols = len(rows[0]) - 1 if rows else len(costs)
    objrow = list(costs) + [_mpq(0)]
    for r, b in enumerate(basis):
        cb = costs[b]
        if cb:
            for idx, a in enumerate(rows[r]):
                if a:
                    objrow[idx] -= cb * a
    iters = 0
    while True:
        iters += 1
        enter = -1
        if iters < _BLAND_SWITCH:
            best = 0
            for j in range(ncols):
                if allowed[j] and objrow[j] < best:
                    best = objrow[j]
                    enter = j
        else:
            for j in range(ncols):
                if allowed[j] and objrow[j] < 0:
                    enter = j
                    break
        if enter < 0:
            return "optimal", objrow, None
        ratio = None
        leave = -1
        for r, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                t = row[-1] / a
                if ratio is None or t < ratio or (t == ratio and basis[r] < basis[leave]):
                    ratio = t
                    leave = r
        if leave < 0:
            return "unbounded", objrow, enter
        _pivot(rows, objrow, basis, leave, enter)


def solve_lp(lp: LinearProgram) -> LPSolution:
    """Generic exact two-phase simplex."""
    lp.validate()
    n = lp.num_vars
    m = len(lp.constraints)
    # internal minimize; free variables split into positive/negative parts
    split = not lp.nonneg
    width = 2 * n if split else n

    def expand(row):
        out = [_mpq(to_rational(v)) for v in row]
        if split:
            out += [-v for v in out]
        return out

    obj = expand(lp.objective)
    if lp.maximize:
        obj = [-v for v in obj]

    rows: List[List] = []
    signs: List[int] = []  # +1 if the original row was kept, -1 if negated
    rels: List[str] = []
    for coeffs, rel, rhs in lp.constraints:
        row = expand(coeffs)
        b = _mpq(to_rational(rhs))
        if b < 0:
            row = [-v for v in row]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
            signs.append(-1)
        else:
            signs.append(1)
        rels.append(rel)
        rows.append(row + [b])

    # slack / surplus columns, then artificials
    nslack = sum(1 for r in rels if r != "=")
    ncols = width + nslack + m  # one artificial per row (unused ones stay zero)
    slack_col: List[Optional[int]] = []
    art_col: List[int] = []
    col = width
    for rel in rels:
        if rel == "<=":
            slack_col.append(col)
            col += 1
        elif rel == ">=":
            slack_col.append(col)
            col += 1
        else:
            slack_col.append(None)
    for _ in range(m):
        art_col.append(col)
        col += 1

    zero = _mpq(0)
    one = _mpq(1)
    full_rows: List[List] = []
    basis: List[int] = []
    need_art: List[bool] = [False] * m
    for i, row in enumerate(rows):
        ext = row[:-1] + [zero] * (ncols - width) + [row[-1]]
        sc = slack_col[i]
        if rels[i] == "<=":
            ext[sc] = one
            basis.append(sc)
        elif rels[i] == ">=":
            ext[sc] = -one
            ext[art_col[i]] = one
            basis.append(art_col[i])
            need_art[i] = True
        else:
            ext[art_col[i]] = one
            basis.append(art_col[i])
            need_art[i] = True
        full_rows.append(ext)

    row_of_art = {art_col[i]: i for i in range(m)}
    # column that started as the unit vector e_i, used to read B^-1 duals
    ref_col = [art_col[i] if need else slack_col[i]
               for i, need in enumerate([rel != "<=" for rel in rels])]

    if any(need_art):
        costs1 = [zero] * ncols
        for i in range(m):
            if need_art[i]:
                costs1[art_col[i]] = one
        allowed1 = [True] * ncols
        for i in range(m):
            if not need_art[i]:
                allowed1[art_col[i]] = False
        status, objrow1, _ = _min_simplex(full_rows, basis, costs1, allowed1)
        assert status == "optimal"  # phase-1 objective is bounded below by 0
        if -objrow1[-1] > 0:
            # Farkas: y_i = cost(art_i) - reduced(art_i); y.b > 0, y.A <= 0
            farkas = []
            for i in range(m):
                y = (one if need_art[i] else zero) - objrow1[ref_col[i]]
                farkas.append(Fraction(y * signs[i]))
            return LPSolution(status="infeasible", certificate=farkas)
        # drive leftover artificials out of the basis
        for r in range(len(basis) - 1, -1, -1):
            if basis[r] in row_of_art:
                piv = next((j for j in range(width + nslack) if full_rows[r][j] != 0), None)
                if piv is None:
                    del full_rows[r]
                    del basis[r]
                else:
                    dummy = [zero] * (ncols + 1)
                    _pivot(full_rows, dummy, basis, r, piv)

    costs2 = [zero] * ncols
    for j in range(width):
        costs2[j] = obj[j]
    allowed2 = [True] * ncols
    for c in art_col:
        allowed2[c] = False
    status, objrow2, enter = _min_simplex(full_rows, basis, costs2, allowed2)

    if status == "unbounded":
        assert enter is not None
        direction = [zero] * ncols
        direction[enter] = one
        for r, b in enumerate(basis):
            direction[b] = -full_rows[r][enter]
        ray = _assemble(direction, n, split)
        return LPSolution(status="unbounded", certificate=ray)

    xs = [zero] * ncols
    for r, b in enumerate(basis):
        xs[b] = full_rows[r][-1]
    assignment = _assemble(xs, n, split)
    value = Fraction(-objrow2[-1])
    if lp.maximize:
        value = -value
    duals = []
    for i in range(m):
        y = -objrow2[ref_col[i]]
        y = y * signs[i]
        if lp.maximize:
            y = -y
        duals.append(Fraction(y))
    return LPSolution(status="optimal", value=value, assignment=assignment, certificate=duals)


def _assemble(xs: List, n: int, split: bool) -> List[Fraction]:
    if split:
        return [Fraction(xs[j] - xs[n + j]) for j in range(n)]
    return [Fraction(xs[j]) for j in range(n)]


# -- structured route ----------------------------------------------------

# floating-point presolve kicks in above this m*n size; its output is
# only a guess and is certified exactly before being trusted
_PRESOLVE_CELLS = 20000


def _verified_guess(rows, rhs, costs, xf, yf, limit) -> Optional[Tuple]:
    """Round a floating primal/dual pair to rationals and certify it.

    Accepts only if x is feasible, y is dual feasible and the objectives
    agree exactly; weak duality then proves optimality.
    """
    x = [Fraction(v).limit_denominator(limit) for v in xf]
    y = [Fraction(v).limit_denominator(limit) for v in yf]
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        return None
    xq = [_mpq(v) for v in x]
    yq = [_mpq(v) for v in y]
    rowq = [[_mpq(a) for a in row] for row in rows]
    bq = [_mpq(v) for v in rhs]
    cq = [_mpq(v) for v in costs]
    zero = _mpq(0)
    for row, b in zip(rowq, bq):
        if sum((a * v for a, v in zip(row, xq) if a), zero) < b:
            return None
    for j in range(len(cq)):
        z = sum((rowq[i][j] * yq[i] for i in range(len(rowq)) if rowq[i][j]), zero)
        if z > cq[j]:
            return None
    primal = sum((c * v for c, v in zip(cq, xq)), zero)
    dual = sum((b * v for b, v in zip(bq, yq)), zero)
    if primal != dual:
        return None
    return Fraction(primal), x, y


def _float_presolve(rows, rhs, costs) -> Optional[Tuple]:
    try:
        import numpy as _np
        from scipy.optimize import linprog as _linprog
    except ImportError:  # pragma: no cover
        return None
    a_ub = -_np.array(rows, dtype=float)
    b_ub = -_np.array(rhs, dtype=float)
    res = _linprog(
        _np.array(costs, dtype=float),
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=(0, None),
        method="highs",
    )
    if not res.success:
        return None
    yf = [-v for v in res.ineqlin.marginals]
    for limit in (10**6, 10**12):
        got = _verified_guess(rows, rhs, costs, list(res.x), yf, limit)
        if got is not None:
            return got
    return None


def solve_min_nonneg(
    rows: List[List[Fraction]],
    rhs: List[Fraction],
    costs: List[Fraction],
) -> Tuple[str, Optional[Fraction], List[Fraction], List[Fraction]]:
    """min costs.x subject to rows[i].x >= rhs[i], x >= 0, costs >= 0.

    Solved via the dual; returns (status, value, x, y) where status is
    "optimal" or "infeasible".
    """
    n = len(costs)
    m = len(rows)
    c = [_mpq(v) for v in costs]
    if any(v < 0 for v in c):
        raise ValueError("structured route requires nonnegative costs")
    if m * n >= _PRESOLVE_CELLS:
        got = _float_presolve(rows, rhs, costs)
        if got is not None:
            value, x, duals = got
            return "optimal", value, x, duals
    b = [_mpq(v) for v in rhs]

    # dual tableau: n rows (one per primal variable), columns = m dual
    # variables + n slacks + rhs
    zero = _mpq(0)
    one = _mpq(1)
    ncols = m + n
    tab: List[List] = []
    for j in range(n):
        row = [_mpq(rows[i][j]) for i in range(m)]
        row += [one if t == j else zero for t in range(n)]
        row.append(c[j])
        tab.append(row)
    basis = [m + j for j in range(n)]
    # maximize b.y  ==  minimize (-b).y
    costs_min = [-v for v in b] + [zero] * n
    allowed = [True] * ncols
    status, objrow, _ = _min_simplex(tab, basis, costs_min, allowed)
    if status == "unbounded":
        return "infeasible", None, [], []
    value = Fraction(objrow[-1])  # -(-max) = max of the dual = min of the primal
    x = [Fraction(objrow[m + j]) for j in range(n)]
    y = [zero] * ncols
    for r, bv in enumerate(basis):
        y[bv] = tab[r][-1]
    duals = [Fraction(y[i]) for i in range(m)]
    # exactness check: strong duality must close
    assert sum(ci * xi for ci, xi in zip(costs, x)) == value
    return "optimal", value, x, duals
