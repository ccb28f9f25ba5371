import math
import random

import pytest
from conftest import graphs, oracle_value, random_connected
from hypothesis import given, settings

from domcrit.constructions import build_H_example, build_Q, build_R
from domcrit.graph import (
    INFINITE,
    GraphError,
    add_edge,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    star_graph,
)
from domcrit.solvers import (
    Variant,
    brute_force_solve,
    domination_value,
    greedy_upper_bound,
    is_valid_set,
    solve,
)

VARIANTS = list(Variant)
C6 = cycle_graph(6)
TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])


def test_is_valid_set_examples():
    assert is_valid_set(C6, {0, 1, 3, 4}, "total")
    assert not is_valid_set(complete_graph(4), {0}, "total")
    assert is_valid_set(cycle_graph(5), {0, 2}, "independent")
    assert not is_valid_set(cycle_graph(5), {0, 1, 3}, "independent")
    assert not is_valid_set(C6, {0, 3}, "connected")


def test_solve_examples():
    assert solve(C6, "total").value == 4
    assert solve(build_R(2).graph, "total").value == 3
    assert solve(build_Q(build_H_example(4)).graph, "total").value == 4
    for n in range(1, 8):
        assert solve(complete_graph(n), "independent").value == 1
    assert solve(C6, "connected").value == 4
    res = solve(TWO_K2, "connected")
    assert res.value == INFINITE and not res.feasible and res.certificate is None


def test_brute_force_examples():
    assert brute_force_solve(path_graph(4), "plain").value == 2
    assert brute_force_solve(from_edge_list(1, []), "plain").value == 1
    with pytest.raises(GraphError):
        brute_force_solve(path_graph(25), "plain")


def test_empty_graph_values():
    empty = from_edge_list(0, [])
    assert solve(empty, "plain").value == 0
    assert solve(empty, "independent").value == 0
    assert solve(empty, "total").value == 0
    assert solve(empty, "connected").value == INFINITE


def test_greedy_examples():
    assert greedy_upper_bound(complete_graph(6), "plain") == 1
    assert greedy_upper_bound(C6, "total") >= 4
    assert greedy_upper_bound(star_graph(5), "total") == 2
    assert greedy_upper_bound(TWO_K2, "connected") == INFINITE


def test_forced_vertices_are_kept():
    g = build_R(2).graph
    for v in range(g.n):
        res = solve(g, "total", forced=1 << v)
        assert v in res.certificate
        assert res.value >= solve(g, "total").value
    # two adjacent forced vertices cannot be independent
    assert solve(path_graph(3), "independent", forced=0b011).value == INFINITE


def test_oracle_equivalence_seeded():
    rng = random.Random(7)
    for _ in range(120):
        g = random_connected(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        for variant in VARIANTS:
            assert solve(g, variant).value == oracle_value(g, variant.value), (g.edges(), variant)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_matches_oracle_on_arbitrary_graphs(g):
    for variant in VARIANTS:
        res = solve(g, variant)
        assert res.value == oracle_value(g, variant.value)
        assert brute_force_solve(g, variant).value == res.value
        if res.feasible:
            assert len(res.certificate) == res.value
            assert is_valid_set(g, res.certificate, variant)
        if variant is Variant.TOTAL:
            has_isolated = any(g.degree(v) == 0 for v in range(g.n))
            assert res.feasible != has_isolated


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=11, connected=True))
def test_order_relations(g):
    gamma = domination_value(g, "plain")
    gt = domination_value(g, "total")
    assert gamma <= gt <= 2 * gamma
    assert gamma <= domination_value(g, "independent")
    assert gamma <= domination_value(g, "connected")


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=10, connected=True))
def test_adding_an_edge_never_raises_plain_or_total(g):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = missing[len(missing) // 2]
    h = add_edge(g, u, v)
    for variant in ("plain", "total", "connected"):
        assert domination_value(h, variant) <= domination_value(g, variant)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=11))
def test_greedy_is_an_upper_bound(g):
    for variant in VARIANTS:
        value = solve(g, variant).value
        bound = greedy_upper_bound(g, variant)
        assert bound >= value
        assert math.isinf(bound) == math.isinf(value)


def test_connected_cycles():
    for n in range(3, 14):
        assert solve(cycle_graph(n), "connected").value == n - 2


def test_solve_stats_recorded():
    res = solve(build_R(3).graph, "total")
    assert res.stats.nodes_explored >= 1 and res.stats.elapsed >= 0
