"""Reproducible random instances.

All randomness comes from numpy's PCG64 bit generator seeded with the given
integer, so a (parameters, seed) pair always yields the same file.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, format_graph


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def generate_random_graph(
    n: int,
    p: float,
    seed: int,
    wmin: float = 1.0,
    wmax: float = 1.0,
    integer: bool = False,
) -> tuple[Graph, str]:
    """Erdős–Rényi G(n, p) with uniform weights in ``[wmin, wmax]``.

    Vertex pairs are visited in lexicographic order; each draws one uniform
    for inclusion and, if included, one weight draw.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if wmin > wmax:
        raise ValueError("wmin must not exceed wmax")
    if integer and (wmin != math.floor(wmin) or wmax != math.floor(wmax)):
        raise ValueError("integer weights need integral bounds")
    rng = _rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                if integer:
                    w = float(rng.integers(int(wmin), int(wmax), endpoint=True))
                else:
                    w = float(wmin + (wmax - wmin) * rng.random())
                edges.append((u, v, w))
    g = Graph(n, edges)
    comment = f"gnp n={n} p={p!r} seed={seed} wmin={wmin!r} wmax={wmax!r}"
    if integer:
        comment += " integer"
    return g, format_graph(g, comment)


def path_graph(n: int, weights=None) -> Graph:
    ws = list(weights) if weights is not None else [1.0] * max(n - 1, 0)
    return Graph(n, [(i, i + 1, ws[i]) for i in range(n - 1)])


def cycle_graph(n: int, weights=None) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    ws = list(weights) if weights is not None else [1.0] * n
    return Graph(n, [(i, (i + 1) % n, ws[i]) for i in range(n)])


def grid_like_graph(n: int, weights=None) -> Graph:
    """First ``n`` cells, row-major, of a grid with ``floor(sqrt(n))`` columns."""
    cols = max(1, math.isqrt(n))
    pairs = []
    for i in range(n):
        r, c = divmod(i, cols)
        if c + 1 < cols and i + 1 < n:
            pairs.append((i, i + 1))
        if i + cols < n:
            pairs.append((i, i + cols))
    ws = list(weights) if weights is not None else [1.0] * len(pairs)
    return Graph(n, [(u, v, w) for (u, v), w in zip(pairs, ws)])


def random_weights(m: int, seed: int, wmin: float = 1.0, wmax: float = 10.0) -> list[float]:
    rng = _rng(seed)
    return [float(x) for x in rng.integers(int(wmin), int(wmax), size=m, endpoint=True)]


def planted_dim_graph(n: int, p: float, seed: int, wmin: int = 1, wmax: int = 10) -> Graph:
    """Random graph built around a hidden DIM, so at least one DIM exists.

    A random matching supplies the black pairs; every other vertex is white
    and may only join black vertices.
    """
    rng = _rng(seed)
    order = [int(x) for x in rng.permutation(n)]
    k = int(rng.integers(1, max(1, n // 2), endpoint=True)) if n >= 2 else 0
    blacks, whites = order[: 2 * k], order[2 * k :]
    pairs = {tuple(sorted((blacks[2 * i], blacks[2 * i + 1]))) for i in range(k)}
    for a in whites:
        for b in blacks:
            if rng.random() < p:
                pairs.add(tuple(sorted((a, b))))
    pairs_sorted = sorted(pairs)
    ws = rng.integers(wmin, wmax, size=len(pairs_sorted), endpoint=True)
    return Graph(n, [(u, v, float(w)) for (u, v), w in zip(pairs_sorted, ws)])
