"""Empirical check of the search-tree leaf bound ``8 * 1.1939**n``."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .generate import (
    cycle_graph,
    generate_random_graph,
    grid_like_graph,
    path_graph,
    random_weights,
)
from .graph import Graph
from .search import solve

GROWTH = 1.1939
LEAF_CONSTANT = 8
FAMILIES = ("gnp", "path", "cycle", "grid-like")


def leaf_bound(n: int) -> float:
    return LEAF_CONSTANT * GROWTH**n


@dataclass
class BenchRow:
    family: str
    n: int
    seed: int
    status: str
    leaves: int
    bound: float
    ratio: float
    max_stack: int
    wall_ms: float
    ok: bool


def make_instance(family: str, n: int, seed: int, p: float = 0.2) -> Graph:
    if family == "gnp":
        return generate_random_graph(n, p, seed, 1, 10, integer=True)[0]
    if family == "path":
        base = path_graph(n)
    elif family == "cycle":
        base = cycle_graph(n)
    elif family == "grid-like":
        base = grid_like_graph(n)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return base.with_weights(random_weights(base.m, seed))


def run_instance(family: str, n: int, seed: int, p: float = 0.2) -> BenchRow:
    g = make_instance(family, n, seed, p)
    t0 = time.perf_counter()
    sol = solve(g)
    wall = (time.perf_counter() - t0) * 1e3
    bound = leaf_bound(n)
    leaves = sol.stats.leaves
    ok = leaves <= bound and sol.stats.max_stack <= n + 1
    return BenchRow(family, n, seed, sol.status, leaves, bound, leaves / bound, sol.stats.max_stack, wall, ok)


def bench(
    family: str, nmin: int, nmax: int, p: float = 0.2, seeds: int = 1, jobs: int = 1
) -> list[BenchRow]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "cycle":
        nmin = max(nmin, 3)
    tasks = [(family, n, s, p) for n in range(nmin, nmax + 1) for s in range(seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_instance, *zip(*tasks)))
    return [run_instance(*t) for t in tasks]


def format_rows(rows: list[BenchRow]) -> str:
    head = f"{'family':>9} {'n':>4} {'seed':>4} {'status':>6} {'leaves':>8} {'bound':>12} {'ratio':>10} {'ms':>9}  ok"
    out = [head]
    for r in rows:
        out.append(
            f"{r.family:>9} {r.n:>4} {r.seed:>4} {r.status:>6} {r.leaves:>8} "
            f"{r.bound:>12.1f} {r.ratio:>10.2e} {r.wall_ms:>9.2f}  {'pass' if r.ok else 'FAIL'}"
        )
    return "\n".join(out)


def rows_as_dicts(rows: list[BenchRow]) -> list[dict]:
    return [asdict(r) for r in rows]
