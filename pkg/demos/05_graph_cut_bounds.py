"""Cut functions of graphs and upper bounds on their plus-norm.

The plus-norm of a weighted cut function is sandwiched between the
maximum cut and two LP-computable upper bounds: a clique-weighting
bound and the total edge weight minus the fractional triangle packing
number.  Triangle-free graphs attain the trivial bound w(E) exactly;
K7 minus an edge separates the plus-norm from the clique bound.
"""

from setdecomp import (
    clique_bound,
    complete,
    complete_minus_edge,
    conjecture_probe,
    cut_function,
    cycle,
    greedy_local_search_cut,
    max_cut,
    nu_star_bound,
    optimal_sum_decomposition,
    triangle_lps,
)


def report(name, g):
    d = cut_function(g)
    plus = optimal_sum_decomposition(d).objective
    tri = triangle_lps(g)
    print(f"{name}:")
    print(f"  total weight        {g.total_weight()}")
    print(f"  max cut             {max_cut(g)[0]}")
    print(f"  greedy cut          {greedy_local_search_cut(g)[0]}")
    print(f"  plus-norm (LP)      {plus}")
    print(f"  clique bound        {clique_bound(g)}")
    print(f"  packing bound       {nu_star_bound(g)}  (nu* = tau* = {tri.nu_star})")
    print()


def main():
    report("C5 (triangle-free)", cycle(5))
    report("K4", complete(4))
    report("K5", complete(5))
    report("K7 minus an edge", complete_minus_edge(7))

    probe = conjecture_probe(complete(4), trials=10, rng_seed=0)
    print(
        "random reweighting probe on K4:",
        f"{probe.trials} trials, violations = {len(probe.violations)},",
        f"min slack = {probe.min_slack}",
    )


if __name__ == "__main__":
    main()
