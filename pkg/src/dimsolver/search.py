"""Branch-and-reduce search for minimum-weight DIMs and DIM counts."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from scipy.optimize import brentq

from .coloring import (
    BLACK,
    INVALID,
    TOTAL,
    UNCOLORED,
    WHITE,
    Coloring,
    extract_dim,
    propagate,
)
from .graph import (
    Graph,
    PatternIndex,
    build_pattern_index,
    connected_components,
    contains_k4,
    normalize_weights,
    unshift_weight,
)
from .oracle import brute_force_solve

FOUND = "found"
NO_DIM = "noDim"

BRANCH_RULES = ("B1", "B2", "B3a", "B3b-i", "B3b-ii", "B3b-iii", "B3b-fallback")


@dataclass
class FrontierSets:
    S: list[int]
    U: list[int]
    T: set[int]


@dataclass
class BranchPlan:
    rule: str
    children: list[tuple[int, int, int]]  # (vertex, color, count multiplier)


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    max_stack: int = 0
    rule_firings: Counter = field(default_factory=Counter)

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_stack = max(self.max_stack, other.max_stack)
        self.rule_firings.update(other.rule_firings)


@dataclass
class Solution:
    status: str
    weight: Optional[float]
    edges: list[tuple[int, int]]
    count: int
    stats: SearchStats = field(default_factory=SearchStats)
    k4: Optional[tuple[int, int, int, int]] = None


def frontier(c: Coloring) -> FrontierSets:
    S = sorted(c.singles)
    U = [v for v in range(c.g.n) if c.color[v] == UNCOLORED]
    covered: set[int] = set()
    for s in S:
        covered.update(c.uncolored_neighbors(s))
    return FrontierSets(S, U, set(U) - covered)


def _split(v: int) -> list[tuple[int, int, int]]:
    return [(v, BLACK, 1), (v, WHITE, 1)]


def _b1_pivot(c: Coloring) -> int:
    g = c.g
    return min((v for v in range(g.n) if c.color[v] == UNCOLORED), key=lambda v: (-g.degree(v), v))


def _b3_triples(c: Coloring, f: FrontierSets):
    g = c.g
    for s in f.S:
        nu = c.uncolored_neighbors(s)
        for v in nu:
            nt = [w for w in g.adj[v] if w in f.T]
            for w in nt:
                yield s, nu, v, nt, w


def _classify_b3b(c: Coloring, f: FrontierSets, s: int, nu: list[int], v: int, w: int) -> BranchPlan:
    g = c.g
    p, q = (x for x in nu if x != v)
    if not c.uncolored_neighbors(p) and not c.uncolored_neighbors(q):
        return BranchPlan("B3b-i", _split(v))
    v1, v2 = (p, q) if c.uncolored_neighbors(p) else (q, p)
    cand = [x for x in g.adj[v1] if x in f.T and x != w]
    if not cand:
        return BranchPlan("B3b-fallback", _split(v))
    w1 = cand[0]
    nw, nw1 = g.nbr_sets[w], g.nbr_sets[w1]
    if len(nw | nw1) > 5 or not g.has_edge(w, w1):
        return BranchPlan("B3b-ii", _split(v))
    common = sorted(nw & nw1)
    if not common:
        return BranchPlan("B3b-fallback", _split(v))
    z = common[0]
    # The doubled branch is only exact for this symmetric gadget.
    if (
        g.nbr_sets[v] != {s, w}
        or g.nbr_sets[v1] != {s, w1}
        or nw != {v, w1, z}
        or nw1 != {v1, w, z}
    ):
        return BranchPlan("B3b-fallback", _split(v))
    if g.weight(s, v) + g.weight(w1, z) <= g.weight(s, v1) + g.weight(w, z):
        second = v
    else:
        second = v1
    return BranchPlan("B3b-iii", [(v2, BLACK, 1), (second, BLACK, 2)])


def select_bifurcation(c: Coloring, f: Optional[FrontierSets] = None) -> BranchPlan:
    """Pick the first applicable branching rule for a stable, non-total coloring."""
    g = c.g
    if f is None:
        f = frontier(c)
    if c.is_empty():
        return BranchPlan("B1", _split(_b1_pivot(c)))

    single = c.singles
    for s in f.S:
        for v in c.uncolored_neighbors(s):
            for w in g.adj[v]:
                if c.color[w] == UNCOLORED and any(x in single and x != s for x in g.adj[w]):
                    return BranchPlan("B2", _split(v))

    triples = list(_b3_triples(c, f))
    for s, nu, v, nt, w in triples:
        if len(nu) != 3 or g.degree(w) != 3 or len(nt) >= 2:
            return BranchPlan("B3a", _split(v))

    plans = [_classify_b3b(c, f, s, nu, v, w) for s, nu, v, nt, w in triples]
    for rule in ("B3b-i", "B3b-ii", "B3b-iii", "B3b-fallback"):
        for plan in plans:
            if plan.rule == rule:
                return plan
    raise AssertionError(f"no branching rule applies to stable coloring {c!r}")


def solve_connected(
    g: Graph, idx: Optional[PatternIndex] = None, track_weight: bool = True
) -> Solution:
    """Depth-first branch and reduce over one K4-free graph with weights >= 0.

    The pending-branch stack holds ``(trail mark, vertex, color, multiplier)``
    records; each branch restores the shared coloring to its mark and seeds
    one color before propagating.
    """
    if idx is None:
        idx = build_pattern_index(g)
    c = Coloring(g, idx)
    stats = SearchStats()
    best = math.inf
    witness: list[tuple[int, int]] = []
    count = 0
    stack: list[tuple[int, Optional[int], int, int]] = [(0, None, UNCOLORED, 1)]
    while stack:
        stats.max_stack = max(stats.max_stack, len(stack))
        mark, v, col, factor = stack.pop()
        c.restore_to_mark(mark)
        stats.nodes += 1
        if v is not None and c.assign_color(v, col, factor):
            stats.leaves += 1
            continue
        out = propagate(c)
        if out.status == INVALID:
            stats.leaves += 1
        elif out.status == TOTAL:
            stats.leaves += 1
            count += c.multiplier
            if track_weight:
                edges, wt = extract_dim(c)
                if wt < best:
                    best, witness = wt, edges
            elif not witness:
                witness = extract_dim(c)[0]
        else:
            plan = select_bifurcation(c)
            stats.rule_firings[plan.rule] += 1
            here = len(c.trail)
            for cv, ccol, mult in reversed(plan.children):
                stack.append((here, cv, ccol, mult))
    c.restore_to_mark(0)
    stats.rule_firings.update(c.firings)
    if count == 0:
        return Solution(NO_DIM, None, [], 0, stats)
    return Solution(FOUND, best if track_weight else None, witness, count, stats)


def solve(g: Graph, small_cutoff: int = 4, track_weight: bool = True) -> Solution:
    """Minimum-weight DIM and DIM count of an arbitrary weighted graph.

    Components with at most ``small_cutoff`` vertices go to the brute-force
    solver. Returned weights are on the caller's (unshifted) scale.
    """
    k4 = contains_k4(g)
    if k4 is not None:
        return Solution(NO_DIM, None, [], 0, SearchStats(), k4=k4)
    gn, shift = normalize_weights(g)
    stats = SearchStats()
    total = 0.0
    count = 1
    edges: list[tuple[int, int]] = []
    for sub, labels in connected_components(gn):
        if sub.n <= small_cutoff:
            res = brute_force_solve(sub)
            part = Solution(res.status, res.weight, res.witness, res.count)
        else:
            part = solve_connected(sub, track_weight=track_weight)
        stats.merge(part.stats)
        if part.status == NO_DIM:
            return Solution(NO_DIM, None, [], 0, stats)
        count *= part.count
        if part.weight is not None:
            total += part.weight
        edges.extend(sorted((labels[a], labels[b]) for a, b in part.edges))
    edges.sort()
    weight = unshift_weight(total, len(edges), shift) if track_weight else None
    return Solution(FOUND, weight, edges, count, stats)


def branching_factor(t: Sequence[int]) -> float:
    """Unique root x > 1 of ``sum(x ** -ti) == 1``, rounded to 6 decimals."""
    t = list(t)
    if len(t) < 2:
        raise ValueError("branching vector needs at least two entries")
    if any(int(ti) != ti or ti < 1 for ti in t):
        raise ValueError("branching vector entries must be positive integers")
    f = lambda x: sum(x ** -ti for ti in t) - 1.0  # noqa: E731
    hi = float(len(t))
    if f(hi) == 0.0:
        return round(hi, 6)
    return round(brentq(f, 1.0, hi, xtol=1e-14), 6)
