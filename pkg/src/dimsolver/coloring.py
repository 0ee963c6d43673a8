"""Partial black/white colorings with forced-color propagation and undo.

A total coloring is valid when the white vertices are independent and every
black vertex has exactly one black neighbour; the black pairs are then a
dominating induced matching.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graph import Graph, PatternIndex, build_pattern_index

WHITE = 0
BLACK = 1
UNCOLORED = -1

_NAMES = {WHITE: "white", BLACK: "black", UNCOLORED: "uncolored"}

INVALID = "invalid"
TOTAL = "total"
STABLE = "stable"


def opposite(col: int) -> int:
    return BLACK if col == WHITE else WHITE


class TrailEntry(NamedTuple):
    vertex: int
    color: int
    factor: int = 1


class Coloring:
    """Mutable coloring of one graph.

    Neighbour counters, the single/paired bookkeeping and the counting
    multiplier are all kept in step with the trail, so ``restore_to_mark``
    can roll back to any earlier trail length.
    """

    def __init__(self, g: Graph, idx: Optional[PatternIndex] = None):
        self.g = g
        self.idx = idx if idx is not None else build_pattern_index(g)
        n = g.n
        self.color = [UNCOLORED] * n
        self.black_nbrs = [0] * n
        self.white_nbrs = [0] * n
        self.uncolored_nbrs = [len(a) for a in g.adj]
        self.pair = [-1] * n
        self.singles: set[int] = set()
        self.uncolored_count = n
        self.trail: list[TrailEntry] = []
        self.multiplier = 1
        # Diagnostics only; not rolled back.
        self.firings: Counter[str] = Counter()
        self._pending: deque[int] = deque()
        self._queued = [False] * n

    # -- bookkeeping ------------------------------------------------------

    def _refresh(self, x: int) -> None:
        if self.color[x] != BLACK:
            self.singles.discard(x)
            self.pair[x] = -1
            return
        b = self.black_nbrs[x]
        if b == 0:
            self.singles.add(x)
            self.pair[x] = -1
        elif b == 1:
            self.singles.discard(x)
            self.pair[x] = next(y for y in self.g.adj[x] if self.color[y] == BLACK)
        else:
            self.singles.discard(x)
            self.pair[x] = -1

    def _touch(self, v: int) -> None:
        if not self._queued[v]:
            self._queued[v] = True
            self._pending.append(v)

    def _clear_pending(self) -> None:
        for v in self._pending:
            self._queued[v] = False
        self._pending.clear()

    def assign_color(self, v: int, col: int, factor: int = 1) -> bool:
        """Color ``v``; return True if this creates an immediate conflict."""
        if self.color[v] != UNCOLORED:
            raise ValueError(f"vertex {v} is already {_NAMES[self.color[v]]}")
        if col not in (WHITE, BLACK):
            raise ValueError(f"bad color {col!r}")
        adj = self.g.adj[v]
        self.color[v] = col
        self.uncolored_count -= 1
        self.trail.append(TrailEntry(v, col, factor))
        self.multiplier *= factor
        counter = self.black_nbrs if col == BLACK else self.white_nbrs
        for y in adj:
            self.uncolored_nbrs[y] -= 1
            counter[y] += 1
        self._touch(v)
        for y in adj:
            self._touch(y)
        if col == WHITE:
            self._refresh(v)
            return self.white_nbrs[v] > 0
        self._refresh(v)
        conflict = self.black_nbrs[v] >= 2
        for y in adj:
            if self.color[y] == BLACK:
                self._refresh(y)
                if self.black_nbrs[y] >= 2:
                    conflict = True
        return conflict

    def _unassign(self) -> None:
        v, col, factor = self.trail.pop()
        adj = self.g.adj[v]
        self.color[v] = UNCOLORED
        self.uncolored_count += 1
        self.multiplier //= factor
        counter = self.black_nbrs if col == BLACK else self.white_nbrs
        for y in adj:
            self.uncolored_nbrs[y] += 1
            counter[y] -= 1
        self._refresh(v)
        if col == BLACK:
            for y in adj:
                if self.color[y] == BLACK:
                    self._refresh(y)

    def restore_to_mark(self, mark: int) -> None:
        if mark > len(self.trail) or mark < 0:
            raise ValueError(f"mark {mark} outside trail of length {len(self.trail)}")
        while len(self.trail) > mark:
            self._unassign()
        self._clear_pending()

    # -- views --------------------------------------------------------------

    def uncolored_neighbors(self, v: int) -> list[int]:
        return [y for y in self.g.adj[v] if self.color[y] == UNCOLORED]

    def is_empty(self) -> bool:
        return not self.trail

    def snapshot(self) -> tuple:
        """Hashable copy of the rolled-back state (for equality checks)."""
        return (
            tuple(self.color),
            tuple(self.black_nbrs),
            tuple(self.white_nbrs),
            tuple(self.uncolored_nbrs),
            tuple(self.pair),
            frozenset(self.singles),
            self.uncolored_count,
            tuple(self.trail),
            self.multiplier,
        )

    def __repr__(self) -> str:
        marks = "".join({WHITE: "W", BLACK: "B", UNCOLORED: "."}[c] for c in self.color)
        return f"Coloring({marks}, x{self.multiplier})"


def new_coloring(g: Graph, idx: Optional[PatternIndex] = None) -> Coloring:
    return Coloring(g, idx)


# -- propagation ----------------------------------------------------------


@dataclass
class PropagationOutcome:
    status: str
    coloring: Coloring

    def dim(self) -> tuple[list[tuple[int, int]], float]:
        if self.status != TOTAL:
            raise ValueError(f"no DIM for a {self.status} coloring")
        return extract_dim(self.coloring)


class _Conflict(Exception):
    pass


def _force(c: Coloring, v: int, col: int, rule: str, factor: int = 1) -> None:
    cur = c.color[v]
    if cur == col:
        return
    if cur != UNCOLORED:
        raise _Conflict
    c.firings[rule] += 1
    if c.assign_color(v, col, factor):
        raise _Conflict


def _apply_structural(c: Coloring) -> None:
    g = c.g
    for dm in c.idx.diamonds:
        for h in dm.hubs:
            _force(c, h, BLACK, "P1")
        for t in dm.tips:
            _force(c, t, WHITE, "P1")
    for p in range(g.n):
        if len(g.adj[p]) == 1:
            _force(c, g.adj[p][0], BLACK, "P2")


def _check(c: Coloring, y: int) -> None:
    g = c.g
    col = c.color[y]
    if col == WHITE:
        if c.white_nbrs[y]:
            raise _Conflict
        for x in g.adj[y]:
            if c.color[x] == UNCOLORED:
                _force(c, x, BLACK, "P3")
    elif col == BLACK:
        b = c.black_nbrs[y]
        if b >= 2:
            raise _Conflict
        if b == 1:
            for x in g.adj[y]:
                if c.color[x] == UNCOLORED:
                    _force(c, x, WHITE, "P4")
        else:
            u = c.uncolored_nbrs[y]
            if u == 0:
                raise _Conflict
            if u == 1:
                x = next(x for x in g.adj[y] if c.color[x] == UNCOLORED)
                _force(c, x, BLACK, "P6")
    else:
        if c.white_nbrs[y]:
            _force(c, y, BLACK, "P3")
        elif c.black_nbrs[y] >= 2:
            _force(c, y, WHITE, "P5")
        return
    col = c.color[y]
    for p in c.idx.paw_partners[y]:
        _force(c, p, opposite(col), "P7")
    for p in c.idx.c4_partners[y]:
        _force(c, p, opposite(col), "P8")


def _try_p9(c: Coloring) -> bool:
    g = c.g
    for s in sorted(c.singles):
        closed = g.nbr_sets[s] | {s}
        free = c.uncolored_neighbors(s)
        if not free:
            continue
        if all(g.nbr_sets[v] <= closed for v in free):
            v = min(free, key=lambda x: (g.weight(s, x), x))
            _force(c, v, BLACK, "P9", factor=len(free))
            return True
    return False


def propagate(c: Coloring) -> PropagationOutcome:
    """Apply the forcing rules to a fixpoint and classify the result.

    Diamond and pendant forcing is structural and runs only on an empty
    coloring. The min-weight pairing rule runs only when nothing else applies.
    """
    try:
        if c.is_empty():
            for v in range(c.g.n):
                c._touch(v)
            _apply_structural(c)
        while True:
            while c._pending:
                y = c._pending.popleft()
                c._queued[y] = False
                _check(c, y)
            if c.uncolored_count == 0 or not _try_p9(c):
                break
    except _Conflict:
        c._clear_pending()
        return PropagationOutcome(INVALID, c)
    if c.uncolored_count == 0:
        return PropagationOutcome(TOTAL if validate_total(c) else INVALID, c)
    return PropagationOutcome(STABLE, c)


def validate_total(c: Coloring) -> bool:
    """Check a total coloring from scratch: whites independent, blacks paired."""
    g = c.g
    color = c.color
    if UNCOLORED in color:
        raise ValueError("coloring is not total")
    for u, v in g.edges:
        if color[u] == WHITE and color[v] == WHITE:
            return False
    for v in range(g.n):
        if color[v] == BLACK:
            if sum(1 for y in g.adj[v] if color[y] == BLACK) != 1:
                return False
    return True


def extract_dim(c: Coloring) -> tuple[list[tuple[int, int]], float]:
    edges = [(v, c.pair[v]) for v in range(c.g.n) if c.color[v] == BLACK and v < c.pair[v]]
    return edges, sum(c.g.weight(u, v) for u, v in edges)


# -- debug validators ---------------------------------------------------------


def counter_errors(c: Coloring) -> list[str]:
    """Recompute every incremental field and list the mismatches."""
    g = c.g
    errs = []
    for v in range(g.n):
        cols = [c.color[y] for y in g.adj[v]]
        exp = (cols.count(BLACK), cols.count(WHITE), cols.count(UNCOLORED))
        got = (c.black_nbrs[v], c.white_nbrs[v], c.uncolored_nbrs[v])
        if exp != got:
            errs.append(f"counters of {v}: {got} != {exp}")
        is_single = c.color[v] == BLACK and exp[0] == 0
        if is_single != (v in c.singles):
            errs.append(f"singles membership of {v}")
        if c.color[v] == BLACK and exp[0] == 1:
            partner = next(y for y in g.adj[v] if c.color[y] == BLACK)
            if c.pair[v] != partner:
                errs.append(f"pair of {v}")
        elif c.pair[v] != -1:
            errs.append(f"stale pair of {v}")
    if c.uncolored_count != c.color.count(UNCOLORED):
        errs.append("uncolored_count")
    if len(c.trail) != g.n - c.color.count(UNCOLORED):
        errs.append("trail length")
    prod = 1
    for e in c.trail:
        prod *= e.factor
    if prod != c.multiplier:
        errs.append("multiplier")
    return errs


def applicable_rules(c: Coloring) -> list[tuple[str, int]]:
    """Exhaustively list forcing-rule instances that would still change ``c``.

    Empty on a stable coloring. Diamond forcing is reported too, even though
    propagation applies it only at the root.
    """
    g, idx, color = c.g, c.idx, c.color
    found: list[tuple[str, int]] = []
    for dm in idx.diamonds:
        for h in dm.hubs:
            if color[h] != BLACK:
                found.append(("P1", h))
        for t in dm.tips:
            if color[t] != WHITE:
                found.append(("P1", t))
    for v in range(g.n):
        if len(g.adj[v]) == 1 and color[g.adj[v][0]] != BLACK:
            found.append(("P2", g.adj[v][0]))
        if color[v] == UNCOLORED:
            nb = [color[y] for y in g.adj[v]]
            if WHITE in nb:
                found.append(("P3", v))
            if any(color[y] == BLACK and c.black_nbrs[y] == 1 for y in g.adj[v]):
                found.append(("P4", v))
            if nb.count(BLACK) >= 2:
                found.append(("P5", v))
        elif color[v] == BLACK and c.black_nbrs[v] == 0 and c.uncolored_nbrs[v] == 1:
            found.append(("P6", v))
        if color[v] != UNCOLORED:
            for p in idx.paw_partners[v]:
                if color[p] == UNCOLORED:
                    found.append(("P7", p))
            for p in idx.c4_partners[v]:
                if color[p] == UNCOLORED:
                    found.append(("P8", p))
    for s in c.singles:
        free = c.uncolored_neighbors(s)
        closed = g.nbr_sets[s] | {s}
        if free and all(g.nbr_sets[v] <= closed for v in free):
            found.append(("P9", s))
    return found
