from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from domcrit.graph import Graph, from_edge_list, is_connected


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def oracle_value(g: Graph, variant: str) -> float:
    """Smallest valid set by plain enumeration, checked through networkx."""
    h = to_nx(g)
    if g.n == 0:
        return float("inf") if variant == "connected" else 0
    for size in range(1, g.n + 1):
        for s in combinations(range(g.n), size):
            s = set(s)
            if variant == "total":
                ok = all(any(u in s for u in h[v]) for v in h)
            else:
                ok = nx.is_dominating_set(h, s)
                if ok and variant == "independent":
                    ok = not any(h.has_edge(u, v) for u, v in combinations(s, 2))
                if ok and variant == "connected":
                    ok = nx.is_connected(h.subgraph(s))
            if ok:
                return size
    return float("inf")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    g = from_edge_list(n, edges)
    if connected and not is_connected(g):
        # a spanning path keeps the draw cheap instead of filtering
        g = from_edge_list(n, edges + [(i, i + 1) for i in range(n - 1)])
    return g


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
