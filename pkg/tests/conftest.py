import itertools

import pytest
from hypothesis import strategies as st

from dimsolver.graph import Graph

_ACCEPTANCE: list[str] = []


@pytest.fixture
def accept():
    """Record one acceptance line, shown in the terminal summary."""

    def record(criterion: int, ok: bool, detail: str) -> bool:
        _ACCEPTANCE.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def unit(n, pairs):
    return Graph(n, [(u, v, 1.0) for u, v in pairs])


# Named fixtures; vertex letters a, b, c, ... map to 0, 1, 2, ...
K2 = unit(2, [(0, 1)])
K3 = unit(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph(3, [(0, 1, 1.0), (1, 2, 2.0)])
P4 = unit(4, [(0, 1), (1, 2), (2, 3)])
C4 = unit(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K4 = unit(4, list(itertools.combinations(range(4), 2)))
K5 = unit(5, list(itertools.combinations(range(5), 2)))
STAR3 = unit(4, [(0, 1), (0, 2), (0, 3)])
# hubs a, b; tips c, d
DIAMOND = unit(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
# triangle abc, pendant d on a
PAW = unit(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
# s=0, v=1, v'=2, v''=3, w=4, w'=5, z=6
B3B_GADGET = Graph(
    7,
    [(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0), (1, 4, 1.0), (2, 5, 1.0), (4, 5, 1.0), (4, 6, 5.0), (5, 6, 1.0)],
)


@st.composite
def weighted_graphs(draw, min_n=0, max_n=9, wmin=-5, wmax=20):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    chosen = [p for p, keep in zip(pairs, mask) if keep]
    ws = draw(st.lists(st.integers(wmin, wmax), min_size=len(chosen), max_size=len(chosen)))
    return Graph(n, [(u, v, float(w)) for (u, v), w in zip(chosen, ws)])


def black_set(edges):
    return frozenset(x for e in edges for x in e)


def dims_by_edge_subsets(g):
    """Second oracle: test every edge subset directly against the definition."""
    out = []
    for r in range(g.m + 1):
        for sub in itertools.combinations(g.edges, r):
            ok = True
            for u, v in g.edges:
                hits = sum(1 for a, b in sub if {a, b} & {u, v})
                if hits != 1:
                    ok = False
                    break
            if ok:
                out.append(sorted(sub))
    return out
