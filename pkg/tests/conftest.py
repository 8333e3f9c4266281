"""Fixtures and brute-force references shared by the test modules.

The references here deliberately avoid the package's own algorithms: cores
come from repeated naive peeling and collapse checks from full recomputation.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from kcollapse.graph import Graph


def naive_cores(n: int, edges) -> list[int]:
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    core = [0] * n
    k = 1
    alive = set(range(n))
    while alive:
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if len(adj[v] & alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            core[v] = k
        k += 1
    return core


def graph_cores(g: Graph, removed=()) -> list[int]:
    gone = {tuple(sorted(e)) for e in removed}
    return naive_cores(g.node_count, [e for e in g.edges() if e not in gone])


def naive_cs(g: Graph, core: list[int], i: int, removed=()) -> int:
    gone = {tuple(sorted(e)) for e in removed}
    sn = [j for j in g.adjacency[i] if core[j] >= core[i] and tuple(sorted((i, j))) not in gone]
    return len(sn) - core[i] + 1


def brute_nr(g: Graph, target: int) -> int:
    """Minimum number of edges (searched over all of E) whose removal drops the target's core."""
    k = graph_cores(g)[target]
    edges = g.edges()
    for m in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, m):
            if graph_cores(g, sub)[target] < k:
                return m
    raise AssertionError("unreachable: removing every edge isolates the target")


def make(n: int, edges) -> Graph:
    return Graph.from_int_edges(n, edges)


def complete(n: int):
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def cycle(n: int):
    return [(i, (i + 1) % n) for i in range(n)]


def er_edges(n: int, p: float, seed: int):
    rng = random.Random(seed)
    return [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]


@pytest.fixture
def triangle() -> Graph:
    return make(3, cycle(3))


@pytest.fixture
def k4() -> Graph:
    return make(4, complete(4))


@pytest.fixture
def k4_pendant() -> Graph:
    return make(5, complete(4) + [(0, 4)])


@pytest.fixture
def c5() -> Graph:
    return make(5, cycle(5))


@pytest.fixture
def star3() -> Graph:
    return make(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def two_triangles() -> Graph:
    return make(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def wheel5() -> Graph:
    """Hub 0 joined to every node of the rim cycle 1-2-3-4-5."""
    rim = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    return make(6, rim + [(0, i) for i in range(1, 6)])


@st.composite
def small_graphs(draw, min_n: int = 2, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = complete(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs)))
    return make(n, chosen)


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome:7s} {name}")
