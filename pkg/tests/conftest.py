"""Shared helpers: independent reference checks and random graph strategies."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from edgepack.graph import Graph, build_graph

# PASS/FAIL lines collected by the acceptance tests, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def report(label: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def conflicts_by_definition(g: Graph, e1, e2) -> bool:
    """Scan every edge of g for one joining an endpoint of e1 to an endpoint of e2."""
    for e in g.edges:
        if e == tuple(sorted(e1)) or e == tuple(sorted(e2)):
            continue
        a, b = e
        if (a in e1 and b in e2) or (b in e1 and a in e2):
            return True
    return False


def eop_by_definition(g: Graph, d) -> bool:
    return not any(conflicts_by_definition(g, a, b) for a, b in itertools.combinations(d, 2))


def rho_by_enumeration(g: Graph) -> int:
    """Largest EOP set over all edge subsets, largest size first."""
    for r in range(g.m, -1, -1):
        for d in itertools.combinations(g.edges, r):
            if eop_by_definition(g, d):
                return r
    return 0


def optimal_sets_by_enumeration(g: Graph) -> list[tuple]:
    rho = rho_by_enumeration(g)
    return [d for d in itertools.combinations(g.edges, rho) if eop_by_definition(g, d)]


def bowtie() -> Graph:
    # v=0 shared by triangles {0,1,2} and {0,3,4}
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def claw() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


@st.composite
def graphs(draw, max_n: int = 7, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(12345)
