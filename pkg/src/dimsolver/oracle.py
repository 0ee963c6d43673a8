"""Brute-force reference solver.

Every subset of vertices is tried as the black set. A subset qualifies when
each black vertex has exactly one black neighbour and each white vertex has
only black neighbours. Nothing here touches the propagation or branching code.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph

MAX_ORACLE_N = 25
MAX_ENUM_N = 20
_CHUNK = 1 << 18


class OracleSizeError(ValueError):
    pass


@dataclass
class OracleResult:
    status: str
    weight: Optional[float]
    count: int
    witness: list[tuple[int, int]] = field(default_factory=list)
    dims: Optional[list[list[tuple[int, int]]]] = None


def _valid_black_sets(g: Graph):
    """Yield arrays of black-set bitmasks that form total valid colorings."""
    n = g.n
    nbr_mask = [sum(1 << y for y in g.adj[v]) for v in range(n)]
    deg = [len(a) for a in g.adj]
    total = 1 << n
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            black = ((masks >> v) & 1).astype(bool)
            k = np.bitwise_count(masks & nbr_mask[v])
            ok &= np.where(black, k == 1, k == deg[v])
        yield masks[ok]


def _edges_of(g: Graph, mask: int) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges if (mask >> u) & 1 and (mask >> v) & 1]


def brute_force_solve(g: Graph, keep_dims: bool = False) -> OracleResult:
    if g.n > MAX_ORACLE_N:
        raise OracleSizeError(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
    if g.n > 20:
        warnings.warn(f"brute force over 2^{g.n} colorings will be slow", stacklevel=2)
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    w = np.array(g.weights, dtype=np.float64)
    count = 0
    best = math.inf
    best_mask = -1
    dims: list[list[tuple[int, int]]] = []
    for masks in _valid_black_sets(g):
        if masks.size == 0:
            continue
        count += int(masks.size)
        if g.m:
            both = ((masks[:, None] >> eu) & 1) & ((masks[:, None] >> ev) & 1)
            # Exact for the integer and dyadic weights used in tests.
            totals = [math.fsum(w[row.astype(bool)]) for row in both]
        else:
            totals = [0.0] * masks.size
        for mask, t in zip(masks.tolist(), totals):
            if t < best:
                best, best_mask = t, mask
            if keep_dims:
                dims.append(_edges_of(g, mask))
    if count == 0:
        return OracleResult("noDim", None, 0, [], dims if keep_dims else None)
    return OracleResult("found", best, count, _edges_of(g, best_mask), dims if keep_dims else None)


def enumerate_dims(g: Graph, cap: int = 10_000) -> tuple[list[list[tuple[int, int]]], bool]:
    """All DIMs of ``g`` as edge lists, at most ``cap`` of them.

    Returns ``(dims, truncated)``.
    """
    if g.n > MAX_ENUM_N:
        raise OracleSizeError(f"enumeration limited to n <= {MAX_ENUM_N}, got {g.n}")
    dims: list[list[tuple[int, int]]] = []
    for masks in _valid_black_sets(g):
        for mask in masks.tolist():
            if len(dims) >= cap:
                return dims, True
            dims.append(_edges_of(g, mask))
    return dims, False
