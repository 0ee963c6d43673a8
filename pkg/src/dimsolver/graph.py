"""Weighted simple graphs, the ``p dim`` file format, and structural patterns.

Vertices are 0-based internally and 1-based in files.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, TextIO


class GraphFormatError(ValueError):
    """Raised for malformed graph text; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with one float weight per edge."""

    __slots__ = ("n", "edges", "weights", "adj", "nbr_sets", "_edge_id")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        nbrs: list[set[int]] = [set() for _ in range(n)]
        edge_list: list[tuple[int, int]] = []
        weights: list[float] = []
        edge_id: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            k = _key(u, v)
            if k in edge_id:
                raise ValueError(f"duplicate edge {k}")
            edge_id[k] = len(edge_list)
            edge_list.append(k)
            weights.append(float(w))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.edges: tuple[tuple[int, int], ...] = tuple(edge_list)
        self.weights: tuple[float, ...] = tuple(weights)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.nbr_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._edge_id = edge_id

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._edge_id

    def edge_id(self, u: int, v: int) -> int:
        return self._edge_id[_key(u, v)]

    def weight(self, u: int, v: int) -> float:
        return self.weights[self._edge_id[_key(u, v)]]

    def weighted_edges(self) -> list[tuple[int, int, float]]:
        return [(u, v, w) for (u, v), w in zip(self.edges, self.weights)]

    def with_weights(self, weights: Iterable[float]) -> "Graph":
        ws = list(weights)
        if len(ws) != self.m:
            raise ValueError("weight vector length must equal the edge count")
        return Graph(self.n, [(u, v, w) for (u, v), w in zip(self.edges, ws)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and sorted(self.weighted_edges()) == sorted(other.weighted_edges())
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.weighted_edges()))))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- file format -------------------------------------------------------------


def parse_graph(text: str | TextIO) -> Graph:
    """Parse ``p dim <n> <m>`` / ``e <u> <v> <w>`` text into a :class:`Graph`.

    Weights are kept as written, negative values included.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    n: Optional[int] = None
    declared_m = 0
    seen: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "dim":
                raise GraphFormatError("expected 'p dim <n> <m>'", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer vertex or edge count", lineno) from None
            if n < 0 or declared_m < 0:
                raise GraphFormatError("negative vertex or edge count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) != 4:
                raise GraphFormatError("expected 'e <u> <v> <w>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                w = float(parts[3])
            except ValueError:
                raise GraphFormatError("malformed edge line", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            k = _key(u - 1, v - 1)
            if k in seen:
                raise GraphFormatError(
                    f"duplicate edge {u}-{v} (first on line {seen[k]})", lineno
                )
            seen[k] = lineno
            edges.append((k[0], k[1], w))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p dim <n> <m>' line")
    if len(edges) != declared_m:
        raise GraphFormatError(f"declared {declared_m} edges, found {len(edges)}")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def format_graph(g: Graph, comment: Optional[str] = None) -> str:
    """Serialize ``g``; weights use ``repr`` so floats round-trip exactly."""
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p dim {g.n} {g.m}")
    for (u, v), w in zip(g.edges, g.weights):
        lines.append(f"e {u + 1} {v + 1} {w!r}")
    return "\n".join(lines) + "\n"


# -- weights -----------------------------------------------------------------


@dataclass(frozen=True)
class WeightShift:
    M: float = 0.0
    applied: bool = False


def normalize_weights(g: Graph) -> tuple[Graph, WeightShift]:
    """Shift all weights by ``M = max(0, -min weight)`` so none is negative."""
    if not g.weights or min(g.weights) >= 0:
        return g, WeightShift(0.0, False)
    M = -min(g.weights)
    return g.with_weights(w + M for w in g.weights), WeightShift(M, True)


def unshift_weight(shifted_opt: float, k: int, shift: WeightShift) -> float:
    # Every DIM of a graph has the same edge count, so the shift is a constant.
    return shifted_opt - shift.M * k


# -- components ----------------------------------------------------------------


def connected_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Split ``g`` into components.

    Each entry is ``(subgraph, labels)`` where ``labels[i]`` is the original id
    of the subgraph's vertex ``i``. Components are ordered by smallest vertex.
    """
    comp = [-1] * g.n
    groups: list[list[int]] = []
    for root in range(g.n):
        if comp[root] != -1:
            continue
        cid = len(groups)
        comp[root] = cid
        members = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    members.append(w)
                    stack.append(w)
        groups.append(sorted(members))
    edge_groups: list[list[tuple[int, int, float]]] = [[] for _ in groups]
    local = [0] * g.n
    for members in groups:
        for i, v in enumerate(members):
            local[v] = i
    for (u, v), w in zip(g.edges, g.weights):
        edge_groups[comp[u]].append((local[u], local[v], w))
    return [(Graph(len(mem), eg), mem) for mem, eg in zip(groups, edge_groups)]


# -- structure -----------------------------------------------------------------


def contains_k4(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return the lexicographically first K4 as a sorted quadruple, or None."""
    nb = g.nbr_sets
    for a, b in g.edges:
        common = sorted(nb[a] & nb[b])
        for i, c in enumerate(common):
            for d in common[i + 1 :]:
                if d in nb[c]:
                    return tuple(sorted((a, b, c, d)))  # type: ignore[return-value]
    return None


@dataclass(frozen=True)
class Diamond:
    hubs: tuple[int, int]  # the shared edge, degree 3 inside the pattern
    tips: tuple[int, int]  # degree 2 inside the pattern


@dataclass(frozen=True)
class Paw:
    triangle: tuple[int, int, int]
    pendant: int
    odd: tuple[int, int]  # (triangle vertex carrying the pendant, pendant)


@dataclass
class PatternIndex:
    diamonds: list[Diamond] = field(default_factory=list)
    paws: list[Paw] = field(default_factory=list)
    c4s: list[tuple[int, int, int, int]] = field(default_factory=list)
    # Per-vertex partners that must take the opposite color.
    paw_partners: list[tuple[int, ...]] = field(default_factory=list)
    c4_partners: list[tuple[int, ...]] = field(default_factory=list)
    diamonds_of: list[tuple[int, ...]] = field(default_factory=list)
    paws_of: list[tuple[int, ...]] = field(default_factory=list)
    c4s_of: list[tuple[int, ...]] = field(default_factory=list)


def build_pattern_index(g: Graph) -> PatternIndex:
    """Enumerate every induced diamond, paw and C4 of a K4-free graph."""
    nb = g.nbr_sets
    n = g.n
    idx = PatternIndex()

    for a, b in g.edges:
        common = sorted(nb[a] & nb[b])
        for i, c in enumerate(common):
            for d in common[i + 1 :]:
                if d not in nb[c]:
                    idx.diamonds.append(Diamond((a, b), (c, d)))

    for a, b in g.edges:
        for c in sorted(nb[a] & nb[b]):
            if c <= b:
                continue
            tri = (a, b, c)
            for hub in tri:
                x, y = (t for t in tri if t != hub)
                for d in g.adj[hub]:
                    if d in tri or d in nb[x] or d in nb[y]:
                        continue
                    idx.paws.append(Paw(tri, d, (hub, d)))

    # Anchor each C4 at its smallest vertex a; c is the vertex opposite a.
    for a in range(n):
        seen_c: set[int] = set()
        for b in g.adj[a]:
            if b < a:
                continue
            for c in g.adj[b]:
                if c <= a or c in seen_c or c in nb[a]:
                    continue
                seen_c.add(c)
                mids = sorted(x for x in nb[a] & nb[c] if x > a)
                for i, p in enumerate(mids):
                    for q in mids[i + 1 :]:
                        if q not in nb[p]:
                            idx.c4s.append((a, p, c, q))

    dia_of: list[list[int]] = [[] for _ in range(n)]
    paw_of: list[list[int]] = [[] for _ in range(n)]
    cyc_of: list[list[int]] = [[] for _ in range(n)]
    paw_p: list[set[int]] = [set() for _ in range(n)]
    c4_p: list[set[int]] = [set() for _ in range(n)]
    for i, dm in enumerate(idx.diamonds):
        for v in dm.hubs + dm.tips:
            dia_of[v].append(i)
    for i, pw in enumerate(idx.paws):
        for v in pw.triangle + (pw.pendant,):
            paw_of[v].append(i)
        h, d = pw.odd
        paw_p[h].add(d)
        paw_p[d].add(h)
    for i, cyc in enumerate(idx.c4s):
        for j, v in enumerate(cyc):
            cyc_of[v].append(i)
            c4_p[v].add(cyc[j - 1])
            c4_p[v].add(cyc[(j + 1) % 4])
    idx.diamonds_of = [tuple(x) for x in dia_of]
    idx.paws_of = [tuple(x) for x in paw_of]
    idx.c4s_of = [tuple(x) for x in cyc_of]
    idx.paw_partners = [tuple(sorted(s)) for s in paw_p]
    idx.c4_partners = [tuple(sorted(s)) for s in c4_p]
    return idx


def classify_quadruple(g: Graph, quad: Iterable[int]) -> str:
    """Name the induced subgraph on four vertices (brute force, for checking)."""
    q = list(quad)
    inner = [(x, y) for x, y in combinations(q, 2) if g.has_edge(x, y)]
    degs = sorted(sum(1 for e in inner if v in e) for v in q)
    shapes = {
        (3, 3, 3, 3): "K4",
        (2, 2, 3, 3): "diamond",
        (2, 2, 2, 2): "C4",
        (1, 2, 2, 3): "paw",
    }
    return shapes.get(tuple(degs), "other")


# -- DIM predicate ---------------------------------------------------------------


def is_dim(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff every edge of ``g`` is dominated by exactly one edge of ``edges``."""
    chosen = [_key(u, v) for u, v in edges]
    for u, v in chosen:
        if not g.has_edge(u, v):
            return False
    for u, v in g.edges:
        dominators = sum(
            1 for a, b in chosen if a == u or a == v or b == u or b == v
        )
        if dominators != 1:
            return False
    return True


def edge_weight_sum(g: Graph, edges: Iterable[tuple[int, int]]) -> float:
    return sum(g.weight(u, v) for u, v in edges)
