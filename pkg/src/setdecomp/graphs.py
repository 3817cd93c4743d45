"""Weighted graphs and hypergraphs and their cut-type set functions.

For a hypergraph H with weights w, three set functions are built over
vertex subsets X: the cut function d(X) (weight of hyperedges meeting
both X and its complement), the induced function i(X) (hyperedges inside
X), and the incident function e(X) = i(X) + d(X).  With nonnegative
weights d and e are submodular and i is supermodular.

On top of these sit the max-cut brute force, clique-weight recovery from
a monotonic sum-decomposition, fractional triangle packing/cover LPs,
and the two LP upper bounds on the plus-norm of the cut function.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import (
    GroundSet,
    SetFunction,
    format_rational,
    popcount,
    to_rational,
    MAX_GROUND,
)
from .decompose import Decomposition, optimal_sum_decomposition
from .simplex import LinearProgram, solve_lp, solve_min_nonneg

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedGraph:
    """Simple graph; edges are (u, v, weight) with u < v and weight >= 0."""

    n: int
    edges: Tuple[Tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND:
            raise GraphError(f"vertex count must be between 0 and {MAX_GROUND}")
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not 0 <= u < v < n")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            if w < 0:
                raise GraphError(f"edge ({u}, {v}) has negative weight {w}")
            seen.add((u, v))

    @classmethod
    def build(cls, n: int, edges: Sequence[Tuple[int, int, object]]) -> "WeightedGraph":
        norm = []
        for u, v, w in edges:
            if u > v:
                u, v = v, u
            norm.append((u, v, to_rational(w)))
        return cls(n=n, edges=tuple(norm))

    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), _ZERO)

    def weight_of(self, u: int, v: int) -> Fraction:
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        return _ZERO

    def adjacency(self) -> List[int]:
        adj = [0] * self.n
        for u, v, _ in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def reweighted(self, weights: Sequence[Fraction]) -> "WeightedGraph":
        if len(weights) != len(self.edges):
            raise GraphError("weight vector length does not match edge count")
        return WeightedGraph.build(
            self.n, [(u, v, w) for (u, v, _), w in zip(self.edges, weights)]
        )

    def to_hypergraph(self) -> "WeightedHypergraph":
        return WeightedHypergraph(
            n=self.n,
            hyperedges=tuple((1 << u | 1 << v, w) for u, v, w in self.edges),
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v, format_rational(w)] for u, v, w in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightedGraph":
        return cls.build(data["n"], [(u, v, w) for u, v, w in data["edges"]])

    @classmethod
    def from_csv(cls, text: str) -> "WeightedGraph":
        """Edge list with one `u,v,weight` row per edge."""
        edges = []
        nmax = -1
        for row in csv.reader(io.StringIO(text)):
            row = [c.strip() for c in row if c.strip()]
            if not row:
                continue
            if len(row) != 3:
                raise GraphError(f"CSV row {row!r} is not u,v,weight")
            u, v = int(row[0]), int(row[1])
            edges.append((u, v, to_rational(row[2])))
            nmax = max(nmax, u, v)
        return cls.build(nmax + 1, edges)


@dataclass(frozen=True)
class WeightedHypergraph:
    """Hyperedges are (vertex mask, weight); weights may be negative."""

    n: int
    hyperedges: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND:
            raise GraphError(f"vertex count must be between 0 and {MAX_GROUND}")
        for mask, _ in self.hyperedges:
            if mask == 0:
                raise GraphError("hyperedges must be nonempty")
            if mask >> self.n:
                raise GraphError(f"hyperedge mask {mask} has vertices outside range")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "hyperedges": [
                {
                    "vertices": [i for i in range(self.n) if mask >> i & 1],
                    "weight": format_rational(w),
                }
                for mask, w in self.hyperedges
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightedHypergraph":
        hyperedges = []
        for entry in data["hyperedges"]:
            mask = 0
            for v in entry["vertices"]:
                mask |= 1 << v
            hyperedges.append((mask, to_rational(entry["weight"])))
        return cls(n=data["n"], hyperedges=tuple(hyperedges))


GraphLike = Union[WeightedGraph, WeightedHypergraph]


def _as_hypergraph(g: GraphLike) -> WeightedHypergraph:
    return g.to_hypergraph() if isinstance(g, WeightedGraph) else g


def cut_function(g: GraphLike) -> SetFunction:
    """d(X): total weight of hyperedges meeting both X and its complement."""
    h = _as_hypergraph(g)
    ground = GroundSet(max(h.n, 1))
    full = (1 << h.n) - 1
    vals = [_ZERO] * ground.size
    for x in range(ground.size):
        acc = _ZERO
        for mask, w in h.hyperedges:
            if mask & x and mask & full & ~x:
                acc += w
        vals[x] = acc
    return SetFunction(ground, tuple(vals))


def induced_function(g: GraphLike) -> SetFunction:
    """i(X): total weight of hyperedges contained in X."""
    h = _as_hypergraph(g)
    ground = GroundSet(max(h.n, 1))
    vals = [_ZERO] * ground.size
    for x in range(ground.size):
        acc = _ZERO
        for mask, w in h.hyperedges:
            if mask & ~x == 0:
                acc += w
        vals[x] = acc
    return SetFunction(ground, tuple(vals))


def incident_function(g: GraphLike) -> SetFunction:
    """e(X) = i(X) + d(X): hyperedges meeting X at all."""
    return induced_function(g) + cut_function(g)


def _connecting_weight(h: WeightedHypergraph, x: int, y: int, inside: int) -> Fraction:
    # hyperedges meeting both X\Y and Y\X, restricted to those inside `inside`
    a, b = x & ~y, y & ~x
    acc = _ZERO
    for mask, w in h.hyperedges:
        if mask & a and mask & b and mask & ~inside == 0:
            acc += w
    return acc


def verify_cut_identities(
    g: GraphLike, x: Optional[int] = None, y: Optional[int] = None
) -> bool:
    """Check the three modular-defect identities relating d, i and e.

    With x and y omitted, checks every pair of subsets (n <= 6 only).
    """
    h = _as_hypergraph(g)
    full = (1 << h.n) - 1
    if x is None or y is None:
        if h.n > 6:
            raise GraphError("exhaustive identity check is capped at n <= 6")
        return all(
            verify_cut_identities(h, a, b)
            for a in range(full + 1)
            for b in range(full + 1)
        )
    d = cut_function(h)
    i = induced_function(h)
    e = incident_function(h)
    inter, union = x & y, x | y
    t_union = _connecting_weight(h, x, y, union)
    t_costar = _connecting_weight(h, x, y, full & ~inter)
    ok_d = d(x) + d(y) == d(inter) + d(union) + t_union + t_costar
    ok_i = i(x) + i(y) == i(inter) + i(union) - t_union
    ok_e = e(x) + e(y) == e(inter) + e(union) + t_costar
    return ok_d and ok_i and ok_e


def max_cut(g: WeightedGraph) -> Tuple[Fraction, int]:
    """Exact maximum cut by brute force; ties broken toward the lowest mask."""
    d = cut_function(g)
    best, best_mask = _ZERO, 0
    # fixing the top vertex outside X halves the symmetric search
    half = 1 << max(g.n - 1, 0)
    for x in range(half):
        v = d(x)
        if v > best:
            best, best_mask = v, x
    return best, best_mask


def greedy_local_search_cut(g: WeightedGraph) -> Tuple[Fraction, int]:
    """Local search from the empty side, moving the lowest-index improving
    vertex, until no single move raises the cut.  The local optimum is at
    least half the total edge weight.
    """
    d = cut_function(g)
    x = 0
    current = d(0)
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            cand = d(x ^ 1 << v)
            if cand > current:
                x ^= 1 << v
                current = cand
                improved = True
                break
    return current, x


def enumerate_cliques(g: WeightedGraph) -> List[int]:
    """Vertex sets of all nonempty complete subgraphs, singletons included,
    in lexicographic order of the sorted vertex tuples."""
    adj = g.adjacency()
    out: List[int] = []

    def extend(mask: int, last: int, common: int) -> None:
        out.append(mask)
        v = last + 1
        rest = common >> v << v
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            extend(mask | low, u, common & adj[u])
            rest &= rest - 1

    for v in range(g.n):
        extend(1 << v, v, adj[v])
    return out


@dataclass
class CliqueWeights:
    """Weights on the cliques of a graph; keys are vertex masks."""

    graph: WeightedGraph
    weights: Dict[int, Fraction]

    def induced(self) -> SetFunction:
        ground = GroundSet(max(self.graph.n, 1))
        vals = [_ZERO] * ground.size
        for x in range(ground.size):
            acc = _ZERO
            for mask, w in self.weights.items():
                if mask & ~x == 0:
                    acc += w
            vals[x] = acc
        return SetFunction(ground, tuple(vals))

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "weights": [
                {
                    "vertices": [i for i in range(self.graph.n) if mask >> i & 1],
                    "weight": format_rational(w),
                }
                for mask, w in sorted(self.weights.items())
            ],
        }


def recover_clique_weights(g: WeightedGraph, phi1: SetFunction) -> CliqueWeights:
    """Recover clique weights w' with phi1 = i_{H,w'} from the increasing
    part of a monotonic sum-decomposition of the cut function.

    w'(K) peels phi1(K) minus the contributions of smaller cliques.  The
    result is verified on every subset, along with the closed form
    w'(K) = (-1)^k V(empty; singletons of K); failure means phi1 was not
    a valid decomposition part, reported with a modularity witness.
    """
    if phi1.ground.n != max(g.n, 1):
        raise GraphError("phi1 ground set does not match the graph")
    cliques = sorted(enumerate_cliques(g), key=popcount)
    weights: Dict[int, Fraction] = {}
    for k in cliques:
        acc = phi1(k)
        for kp, w in weights.items():
            if kp != k and kp & ~k == 0:
                acc -= w
        weights[k] = acc
    result = CliqueWeights(graph=g, weights=weights)
    rebuilt = result.induced()
    if rebuilt.values != phi1.values:
        raise GraphError(
            "phi1 is not induced by any clique weighting: "
            + _modularity_witness_message(g, phi1)
        )
    for k in cliques:
        parts = []
        m = k
        while m:
            low = m & -m
            parts.append(low)
            m &= m - 1
        total = _ZERO
        size = len(parts)
        for sub in range(1 << size):
            a0 = 0
            for j in range(size):
                if sub >> j & 1:
                    a0 |= parts[j]
            total += (-1) ** popcount(sub) * phi1(a0)
        # closed form: w'(K) = (-1)^k V(empty; singletons), where V is the
        # alternating sum over unions of the singleton classes
        if weights[k] != (-1) ** size * total:
            raise GraphError(
                f"closed-form clique weight mismatch on mask {k}: "
                + _modularity_witness_message(g, phi1)
            )
    return result


def _modularity_witness_message(g: WeightedGraph, phi1: SetFunction) -> str:
    # a valid phi1 must be modular across every non-adjacent pair
    adj = g.adjacency()
    ground = phi1.ground
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if adj[a] >> b & 1:
                continue
            for x in range(ground.size):
                if x & (1 << a | 1 << b):
                    continue
                lhs = phi1(x | 1 << a | 1 << b) + phi1(x)
                rhs = phi1(x | 1 << a) + phi1(x | 1 << b)
                if lhs != rhs:
                    return (
                        f"non-adjacent pair ({a}, {b}) is not modular "
                        f"at base mask {x}"
                    )
    return "no modularity witness found"


def check_vertex_inequality(g: WeightedGraph, weights: CliqueWeights, v: int) -> bool:
    """Weighted degree of v is at most w'(v) plus the sum of w'(K) over
    cliques containing v."""
    deg = sum((w for a, b, w in g.edges if v in (a, b)), _ZERO)
    bound = weights.weights.get(1 << v, _ZERO)
    for mask, w in weights.weights.items():
        if mask >> v & 1:
            bound += w
    return deg <= bound


def triangles_of(g: WeightedGraph) -> List[Tuple[int, int, int]]:
    adj = g.adjacency()
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b] >> (b + 1) << (b + 1)
            m = common
            while m:
                low = m & -m
                out.append((a, b, low.bit_length() - 1))
                m &= m - 1
    return out


@dataclass
class TriangleLPResult:
    nu_star: Fraction
    tau_star: Fraction
    packing: Dict[Tuple[int, int, int], Fraction]
    cover: Dict[Tuple[int, int], Fraction]

    def to_json_dict(self) -> dict:
        return {
            "nu_star": format_rational(self.nu_star),
            "tau_star": format_rational(self.tau_star),
            "packing": {
                f"{a},{b},{c}": format_rational(x)
                for (a, b, c), x in self.packing.items()
            },
            "cover": {
                f"{u},{v}": format_rational(y) for (u, v), y in self.cover.items()
            },
        }


def triangle_lps(g: WeightedGraph) -> TriangleLPResult:
    """Fractional triangle packing and edge cover; the optima coincide."""
    tris = triangles_of(g)
    if not tris:
        return TriangleLPResult(_ZERO, _ZERO, {}, {})
    edges = [(u, v) for u, v, _ in g.edges]
    eidx = {e: i for i, e in enumerate(edges)}

    def tri_edges(t):
        a, b, c = t
        return [(a, b), (a, c), (b, c)]

    # packing: max sum x(T) subject to edge capacities
    rows = []
    for u, v, w in g.edges:
        row = [_ZERO] * len(tris)
        for j, t in enumerate(tris):
            if (u, v) in tri_edges(t):
                row[j] = _ONE
        rows.append((row, "<=", w))
    sol = solve_lp(
        LinearProgram(
            num_vars=len(tris),
            objective=[_ONE] * len(tris),
            maximize=True,
            constraints=rows,
            nonneg=True,
        )
    )
    assert sol.status == "optimal"
    nu = sol.value
    packing = {t: sol.assignment[j] for j, t in enumerate(tris)}

    # cover: min sum w(e) y(e) subject to hitting every triangle
    crows = []
    rhs = []
    for t in tris:
        row = [_ZERO] * len(edges)
        for e in tri_edges(t):
            row[eidx[e]] = _ONE
        crows.append(row)
        rhs.append(_ONE)
    status, tau, y, _ = solve_min_nonneg(crows, rhs, [w for _, _, w in g.edges])
    assert status == "optimal" and tau is not None
    assert nu == tau  # LP duality ties packing and cover optima
    cover = {e: y[i] for i, e in enumerate(edges)}
    return TriangleLPResult(nu_star=nu, tau_star=tau, packing=packing, cover=cover)


def clique_bound(g: WeightedGraph) -> Fraction:
    """LP upper bound on the plus-norm of the cut function: spread each
    edge weight over cliques z(K) and pay ceil(k/2)*floor(k/2) per clique."""
    cliques = enumerate_cliques(g)
    costs = []
    for k in cliques:
        size = popcount(k)
        costs.append(Fraction((size + 1) // 2 * (size // 2)))
    rows = []
    rhs = []
    for u, v, w in g.edges:
        emask = 1 << u | 1 << v
        row = [_ONE if emask & ~k == 0 else _ZERO for k in cliques]
        rows.append(row)
        rhs.append(w)
        rows.append([-c for c in row])
        rhs.append(-w)
    status, value, _, _ = solve_min_nonneg(rows, rhs, costs)
    assert status == "optimal" and value is not None  # z on edges is feasible
    return value


def nu_star_bound(g: WeightedGraph) -> Fraction:
    """Upper bound w(E) - nu* on the plus-norm of the cut function."""
    return g.total_weight() - triangle_lps(g).nu_star


def complete_graph_decomposition(n: int) -> Decomposition:
    """1-bounded sum-decomposition of the complete graph's cut function,
    splitting the concave profile h(k) = k(n - k) at its smaller argmax."""
    if n < 1:
        raise GraphError("n must be at least 1")
    ground = GroundSet(n)

    def h(k: int) -> Fraction:
        return Fraction(k * (n - k))

    k0 = n // 2
    vals1, vals2 = [], []
    for x in range(ground.size):
        k = popcount(x)
        vals1.append(h(min(k, k0)))
        vals2.append(_ZERO if k <= k0 else h(k) - h(k0))
    phi1 = SetFunction(ground, tuple(vals1))
    phi2 = SetFunction(ground, tuple(vals2))
    d = phi1 + phi2
    from .core import norm_inf

    assert max(norm_inf(phi1), norm_inf(phi2)) == norm_inf(d)
    return Decomposition(phi1=phi1, phi2=phi2, kind="sum", objective=phi1(ground.full_mask))


# -- generators ----------------------------------------------------------


def complete(n: int) -> WeightedGraph:
    return WeightedGraph.build(
        n, [(u, v, _ONE) for u in range(n) for v in range(u + 1, n)]
    )


def complete_minus_edge(n: int) -> WeightedGraph:
    if n < 2:
        raise GraphError("need at least 2 vertices to drop an edge")
    return WeightedGraph.build(
        n,
        [
            (u, v, _ONE)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) != (0, 1)
        ],
    )


def cycle(n: int) -> WeightedGraph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return WeightedGraph.build(n, [(v, (v + 1) % n, _ONE) for v in range(n)])


def path(n: int) -> WeightedGraph:
    if n < 2:
        raise GraphError("paths need at least 2 vertices")
    return WeightedGraph.build(n, [(v, v + 1, _ONE) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> WeightedGraph:
    return WeightedGraph.build(
        a + b, [(u, a + v, _ONE) for u in range(a) for v in range(b)]
    )


def wheel(n: int) -> WeightedGraph:
    """Hub vertex 0 joined to a rim cycle on the other n - 1 vertices."""
    if n < 4:
        raise GraphError("wheels need at least 4 vertices")
    edges = [(0, v, _ONE) for v in range(1, n)]
    rim = list(range(1, n))
    for i, v in enumerate(rim):
        u = rim[(i + 1) % len(rim)]
        edges.append((min(u, v), max(u, v), _ONE))
    return WeightedGraph.build(n, edges)


def hyperedge(k: int) -> WeightedHypergraph:
    """A single unit hyperedge spanning k vertices."""
    if k < 1:
        raise GraphError("hyperedges must be nonempty")
    return WeightedHypergraph(n=k, hyperedges=(((1 << k) - 1, _ONE),))


def counterexample_sum(n: int) -> SetFunction:
    """On 2n elements with A the first n: 0 when X is nested with A,
    1 otherwise.  Submodular, sup-norm 1, but its optimal increasing part
    must reach at least n at the full set."""
    if n < 1:
        raise GraphError("n must be at least 1")
    ground = GroundSet(2 * n)
    a = (1 << n) - 1
    vals = tuple(
        _ZERO if x & ~a == 0 or a & ~x == 0 else _ONE for x in range(ground.size)
    )
    return SetFunction(ground, vals)


def counterexample_diff(n: int) -> SetFunction:
    """-1 at the full set, 0 elsewhere; submodular, and every
    diff-decomposition needs a decreasing part of size at least n."""
    if n < 1:
        raise GraphError("n must be at least 1")
    ground = GroundSet(n)
    vals = tuple(
        Fraction(-1) if x == ground.full_mask else _ZERO for x in range(ground.size)
    )
    return SetFunction(ground, vals)


# -- conjecture probe ----------------------------------------------------


@dataclass
class ProbeReport:
    trials: int
    violations: List[dict] = field(default_factory=list)
    min_slack: Optional[Fraction] = None

    @property
    def conjecture_holds(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "conjecture_holds": self.conjecture_holds,
            "min_slack": None if self.min_slack is None else format_rational(self.min_slack),
            "violations": self.violations,
        }


def conjecture_probe(g: WeightedGraph, trials: int, rng_seed: int) -> ProbeReport:
    """Search for a counterexample to monotonicity of the cut function's
    plus-norm under componentwise weight decrease.

    Each trial draws random weights w (numerators 0..8, denominators
    1..4), scales each down to w' <= w, and compares the two optimal
    sum-decomposition objectives exactly.  A violation would refute the
    conjecture; otherwise the minimum slack over all trials is reported.
    """
    if g.n > 8:
        raise GraphError("conjecture probe is capped at n <= 8")
    rng = random.Random(rng_seed)
    report = ProbeReport(trials=trials)
    for t in range(trials):
        w = [
            Fraction(rng.randint(0, 8), rng.randint(1, 4)) for _ in g.edges
        ]
        wp = [wi * Fraction(rng.randint(0, 4), 4) for wi in w]
        big = optimal_sum_decomposition(cut_function(g.reweighted(w))).objective
        small = optimal_sum_decomposition(cut_function(g.reweighted(wp))).objective
        slack = big - small
        if report.min_slack is None or slack < report.min_slack:
            report.min_slack = slack
        if slack < 0:
            report.violations.append(
                {
                    "trial": t,
                    "w": [format_rational(x) for x in w],
                    "w_prime": [format_rational(x) for x in wp],
                    "norm_w": format_rational(big),
                    "norm_w_prime": format_rational(small),
                }
            )
    return report
