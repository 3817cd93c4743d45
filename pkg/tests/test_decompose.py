import warnings
from fractions import Fraction
from itertools import combinations

import pytest

from setdecomp import (
    Decomposition,
    DecompositionError,
    GroundSet,
    SetFunction,
    c_bounded_feasible,
    is_decreasing,
    is_increasing,
    is_submodular,
    optimal_diff_decomposition,
    optimal_sum_decomposition,
    verify_seven_bound,
    weakly_alt_canonical_decomposition,
)
from setdecomp.charges import PreconditionError
from setdecomp.coverage import to_coefficients
from setdecomp.graphs import (
    complete,
    counterexample_diff,
    counterexample_sum,
    cut_function,
)
from setdecomp.simplex import LinearProgram, solve_lp
from conftest import random_coverage, random_set_function, random_weakly_alternating

F = Fraction


def random_submodular(rng, n):
    # coverage plus an arbitrary charge stays submodular, with sign freedom
    f = random_coverage(rng, n)
    g = f.ground
    atoms = [F(rng.randint(-2, 2)) for _ in range(n)]
    charge = SetFunction.from_callable(
        g, lambda m: sum(atoms[i] for i in range(n) if m >> i & 1)
    )
    return f + charge


def check_shape(psi, dec):
    assert dec.phi1(0) == 0 and dec.phi2(0) == 0
    assert dec.reconstruct() == psi
    assert is_increasing(dec.phi1)[0]
    assert is_submodular(dec.phi1)[0]
    assert is_submodular(dec.phi2)[0]
    if dec.kind == "sum":
        assert is_decreasing(dec.phi2)[0]
    else:
        assert is_increasing(dec.phi2)[0]
    assert dec.objective == dec.phi1(psi.ground.full_mask)


def test_sum_triangle_cut():
    d = cut_function(complete(3))
    dec = optimal_sum_decomposition(d)
    check_shape(d, dec)
    assert dec.objective == 2


def test_sum_increasing_input(rng):
    f = random_coverage(rng, 4)
    dec = optimal_sum_decomposition(f)
    check_shape(f, dec)
    assert dec.objective == f(f.ground.full_mask)
    assert dec.phi2 == SetFunction.zero(f.ground)


def test_sum_phi1_dominates(rng):
    for _ in range(10):
        psi = random_submodular(rng, 4)
        dec = optimal_sum_decomposition(psi)
        check_shape(psi, dec)
        for x in psi.ground.subsets():
            assert dec.phi1(x) >= psi(x)


def test_sum_rejects_non_submodular():
    g = GroundSet(2)
    psi = SetFunction(g, (F(0), F(0), F(0), F(2)))
    with pytest.raises(DecompositionError):
        optimal_sum_decomposition(psi)


def test_sum_counterexample_family():
    for n in (2, 3):
        psi = counterexample_sum(n)
        dec = optimal_sum_decomposition(psi)
        check_shape(psi, dec)
        assert dec.objective >= n


def test_diff_triangle_and_increasing(rng):
    d = cut_function(complete(3))
    dec = optimal_diff_decomposition(d)
    check_shape(d, dec)
    f = random_coverage(rng, 4)
    dec2 = optimal_diff_decomposition(f)
    assert dec2.objective == f(f.ground.full_mask)
    assert dec2.phi2 == SetFunction.zero(f.ground)


def test_diff_counterexample_family():
    for n in (3, 4):
        psi = counterexample_diff(n)
        dec = optimal_diff_decomposition(psi)
        check_shape(psi, dec)
        assert dec.phi2(psi.ground.full_mask) >= n


def test_diff_warns_on_non_submodular():
    g = GroundSet(2)
    psi = SetFunction(g, (F(0), F(0), F(0), F(2)))
    with pytest.warns(UserWarning):
        optimal_diff_decomposition(psi)


def global_formulation_value(psi):
    """Independent sum-decomposition LP using four-set submodularity rows."""
    g = psi.ground
    n_vars = g.size - 1  # phi1(X) for X != 0

    def var(mask):
        return mask - 1

    constraints = []
    subsets = list(g.subsets())

    def phi1_coeffs(scaled):
        row = [F(0)] * n_vars
        for mask, c in scaled:
            if mask:
                row[var(mask)] += c
        return row

    for x in subsets:
        for y in subsets:
            if x == y:
                continue
            # phi1(x) + phi1(y) >= phi1(x|y) + phi1(x&y)
            row = phi1_coeffs([(x, F(1)), (y, F(1)), (x | y, F(-1)), (x & y, F(-1))])
            constraints.append((row, ">=", F(0)))
            # phi2 = psi - phi1 submodular: phi2(x)+phi2(y)-phi2(x|y)-phi2(x&y) >= 0
            row2 = [-a for a in row]
            rhs2 = -(psi(x) + psi(y) - psi(x | y) - psi(x & y))
            constraints.append((row2, ">=", rhs2))
        # monotone phi1 and antitone phi2 via x vs x|{u}
        for u in range(g.n):
            if x >> u & 1:
                continue
            xu = x | (1 << u)
            row = phi1_coeffs([(xu, F(1)), (x, F(-1))])
            constraints.append((row, ">=", F(0)))
            constraints.append((row, ">=", psi(xu) - psi(x)))
    objective = phi1_coeffs([(g.full_mask, F(1))])
    lp = LinearProgram(n_vars, objective, maximize=False, constraints=constraints, nonneg=True)
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    return sol.value


def test_sum_matches_global_formulation(rng):
    for n in (2, 3):
        for _ in range(5):
            psi = random_submodular(rng, n)
            dec = optimal_sum_decomposition(psi)
            assert dec.objective == global_formulation_value(psi)


def test_plus_norm_monotone_under_increasing_addition(rng):
    for _ in range(10):
        psi = random_submodular(rng, 4)
        g = random_coverage(rng, 4)
        lhs = optimal_sum_decomposition(psi + g).objective
        rhs = optimal_sum_decomposition(psi).objective + g(g.ground.full_mask)
        assert lhs <= rhs


def test_c_bounded_feasibility():
    d = cut_function(complete(4))
    ok, dec = c_bounded_feasible(d, "sum", F(2))
    assert ok and dec.reconstruct() == d
    ok4, dec4 = c_bounded_feasible(d, "diff", F(4))
    assert ok4 and dec4.reconstruct() == d
    psi = counterexample_sum(3)
    ok_cex, _ = c_bounded_feasible(psi, "sum", F(2))
    assert not ok_cex


def test_c_bounded_monotone_in_c(rng):
    for _ in range(5):
        psi = random_submodular(rng, 3)
        feasible = [c_bounded_feasible(psi, "sum", F(c, 2))[0] for c in range(1, 9)]
        # once feasible, stays feasible as c grows
        for a, b in zip(feasible, feasible[1:]):
            assert (not a) or b


def test_size_cap():
    g = GroundSet(11)
    psi = SetFunction.zero(g)
    with pytest.raises(ValueError, match="capped"):
        optimal_sum_decomposition(psi)


def test_canonical_weakly_alt_triangle():
    d = cut_function(complete(3))
    phi, mu = weakly_alt_canonical_decomposition(d)
    assert mu.atoms == (F(2), F(2), F(2))
    coeffs = to_coefficients(phi)
    for u, v in ((0, 1), (0, 2), (1, 2)):
        assert coeffs.alpha[(1 << u) | (1 << v)] == 2
    for a in range(3):
        # complementarity: no singleton weight survives alongside mu
        assert coeffs.alpha[1 << a] * mu.atoms[a] == 0
    assert phi - mu.as_set_function() == d


def test_canonical_weakly_alt_edge_cases(rng):
    # infinite-alternating with no singleton coefficients: mu vanishes
    f = random_coverage(rng, 3, density=0.5)
    coeffs = to_coefficients(f)
    stripped = f
    for a in range(3):
        alpha_a = coeffs.alpha[1 << a]
        if alpha_a:
            from setdecomp.coverage import extremal

            stripped = stripped - extremal(f.ground, 1 << a).scale(alpha_a)
    phi, mu = weakly_alt_canonical_decomposition(stripped)
    assert all(a == 0 for a in mu.atoms)
    assert phi == stripped
    # a negative charge decomposes as 0 minus that charge
    g = GroundSet(3)
    neg = SetFunction.from_callable(
        g, lambda m: -F(sum(1 for i in range(3) if m >> i & 1))
    )
    phi2, mu2 = weakly_alt_canonical_decomposition(neg)
    assert phi2 == SetFunction.zero(g)
    assert mu2.atoms == (F(1), F(1), F(1))


def test_seven_bound_triangle():
    d = cut_function(complete(3))
    report = verify_seven_bound(d)
    assert report.norm_psi == 2
    assert report.phi_full == 6
    assert report.all_hold


def test_seven_bound_random(rng):
    for _ in range(20):
        psi = random_weakly_alternating(rng, 4)
        report = verify_seven_bound(psi)
        assert report.all_hold


def test_decomposition_json_round_trip(rng):
    psi = random_submodular(rng, 3)
    dec = optimal_sum_decomposition(psi)
    again = Decomposition.from_json_dict(dec.to_json_dict())
    assert again.phi1 == dec.phi1
    assert again.phi2 == dec.phi2
    assert again.kind == dec.kind
    assert again.objective == dec.objective
