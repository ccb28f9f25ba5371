import math

import networkx as nx
import pytest
from conftest import graphs, to_nx
from hypothesis import given, settings

from domcrit.constructions import build_R, corona
from domcrit.graph import (
    INFINITE,
    Graph,
    GraphError,
    PointedGraph,
    bfs_layers,
    complement,
    complete_graph,
    cut_vertices,
    cycle_graph,
    delete_closed_neighborhood,
    delete_vertex,
    diameter,
    disjoint_union,
    distance,
    from_edge_list,
    induced_subgraph,
    is_connected,
    iter_bits,
    path_graph,
    structure_flags,
    to_mask,
)

C6 = cycle_graph(6)
K4 = complete_graph(4)
TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])


def test_from_edge_list_examples():
    k1 = from_edge_list(1, [])
    assert k1.n == 1 and k1.num_edges == 0
    assert C6.degrees() == [2] * 6
    g = from_edge_list(4, [(0, 1), (0, 1), (1, 2)])
    assert g.num_edges == 2


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 3)]), (3, [(1, 1)]), (-1, []), (129, [])],
)
def test_from_edge_list_rejects(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_complement_examples():
    assert complement(K4) == from_edge_list(4, [])
    assert complement(complement(cycle_graph(5))) == cycle_graph(5)
    assert complement(TWO_K2) == from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert nx.is_isomorphic(to_nx(complement(TWO_K2)), nx.cycle_graph(4))


def test_induced_subgraph_examples():
    assert induced_subgraph(C6, {0, 1, 2}) == path_graph(3)
    assert induced_subgraph(C6, range(6)) == C6
    assert induced_subgraph(C6, {0, 2, 4}).num_edges == 0
    sub = induced_subgraph(C6, {3, 4, 5})
    assert [sub.label(v) for v in range(3)] == ["3", "4", "5"]


def test_delete_examples():
    assert delete_vertex(C6, 0) == path_graph(5)
    assert delete_vertex(from_edge_list(1, []), 0).n == 0
    assert delete_vertex(K4, 2) == complete_graph(3)
    rest = delete_closed_neighborhood(C6, 0)
    assert rest == path_graph(3)
    assert [rest.label(v) for v in range(3)] == ["2", "3", "4"]
    assert delete_closed_neighborhood(K4, 0).n == 0
    assert delete_closed_neighborhood(path_graph(3), 1).n == 0


def test_bfs_layers_examples():
    assert bfs_layers(C6, 0).sizes() == [1, 2, 2, 1]
    assert bfs_layers(K4, 0).sizes() == [1, 3]
    assert bin(bfs_layers(TWO_K2, 0).unreachable).count("1") == 2


def test_diameter_examples():
    assert diameter(C6) == 3
    assert diameter(TWO_K2) == INFINITE and math.isinf(diameter(TWO_K2))
    assert diameter(build_R(2).graph) == 3
    assert distance(TWO_K2, 0, 2) == INFINITE


def test_structure_flags_examples():
    f = structure_flags(C6)
    assert f.connected and f.two_connected and not f.leaves
    f = structure_flags(path_graph(3))
    assert f.connected and not f.two_connected
    assert f.leaves == {0, 2} and f.support_vertices == {1}
    f = structure_flags(corona(cycle_graph(3)))
    assert f.connected and not f.two_connected
    assert len(f.leaves) == 3 and len(f.support_vertices) == 3


def test_graph_is_immutable_and_hashable():
    g = cycle_graph(5)
    with pytest.raises(AttributeError):
        g.n = 3
    assert hash(g) == hash(cycle_graph(5))
    assert g.with_labels([str(i) for i in "abcde"]) == g


def test_pointed_graph_requires_diametrical_pair():
    PointedGraph(path_graph(4), 0, 3)
    with pytest.raises(GraphError):
        PointedGraph(path_graph(4), 0, 2)
    with pytest.raises(GraphError):
        PointedGraph(TWO_K2, 0, 2)


def _symmetric(g: Graph) -> bool:
    return all(not (g.adj[v] >> v) & 1 for v in range(g.n)) and all(
        (g.adj[u] >> v) & 1 for v in range(g.n) for u in iter_bits(g.adj[v])
    )


@given(graphs(max_n=14))
def test_surgery_keeps_adjacency_symmetric(g):
    assert _symmetric(g) and _symmetric(complement(g))
    if g.n:
        v = g.n // 2
        d = delete_vertex(g, v)
        assert _symmetric(d)
        assert d.n == g.n - 1 and d.num_edges == g.num_edges - g.degree(v)
        assert _symmetric(delete_closed_neighborhood(g, v))
    assert _symmetric(disjoint_union(g, g))


@given(graphs(max_n=20))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs(min_n=1, max_n=12))
def test_bfs_partitions_and_diameter_matches_networkx(g):
    h = to_nx(g)
    for s in range(g.n):
        lay = bfs_layers(g, s)
        seen = 0
        for layer in lay.layers:
            assert not seen & layer
            seen |= layer
        assert seen | lay.unreachable == g.full
        lengths = nx.single_source_shortest_path_length(h, s)
        for d, layer in enumerate(lay.layers):
            assert set(iter_bits(layer)) == {v for v, dd in lengths.items() if dd == d}
    if nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    else:
        assert diameter(g) == INFINITE


@settings(max_examples=150)
@given(graphs(max_n=11))
def test_two_connected_matches_deletion_oracle(g):
    flags = structure_flags(g)
    oracle = g.n >= 3 and is_connected(g) and all(is_connected(delete_vertex(g, v)) for v in range(g.n))
    assert flags.two_connected == oracle
    if flags.connected and g.n >= 2:
        assert set(iter_bits(cut_vertices(g))) == set(nx.articulation_points(to_nx(g)))


def test_mask_helpers():
    assert to_mask([0, 3, 5]) == 0b101001
    assert list(iter_bits(0b101001)) == [0, 3, 5]
