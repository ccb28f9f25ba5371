"""Builders for the extremal graph families and their composition operators.

Vertex orderings are fixed so that graph6 fingerprints are reproducible:

* ``A(H)``: x_1..x_t, y_1..y_t, Left, Right
* ``R(m)``: x_1..x_2m, y_1..y_2m, z1, z2, z3, Left, Right
* ``Q(H)``: the A-copy without Right (x, y, Left), then the A-copy without
  Left (x, y, Right)
* ``J(t)``: a_1..a_2t, b_1..b_2t, c_1..c_2t, Left, Right
"""

from __future__ import annotations

from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    PointedGraph,
    complement,
    complete_graph,
    from_edge_list,
    iter_bits,
)
from .solvers import Variant, solve


def corona(h: Graph) -> Graph:
    """Attach one pendant leaf to every vertex of ``h``."""
    n = h.n
    edges = h.edges() + [(v, n + v) for v in range(n)]
    labels = [h.label(v) for v in range(n)] + [f"leaf({h.label(v)})" for v in range(n)]
    return from_edge_list(2 * n, edges, labels)


def coalescence(g1: Graph, x: int, g2: Graph, y: int) -> Graph:
    """Identify ``x`` in ``g1`` with ``y`` in ``g2``.

    ``g1`` keeps its indices and the merged vertex takes index ``x``; the
    vertices of ``g2`` other than ``y`` follow in ascending order.
    """
    g1._check_vertex(x)
    g2._check_vertex(y)
    n1 = g1.n

    def new_index(v: int) -> int:
        if v == y:
            return x
        return n1 + (v if v < y else v - 1)

    edges = g1.edges() + [(new_index(u), new_index(v)) for u, v in g2.edges()]
    labels = [g1.label(v) for v in range(n1)]
    labels[x] = f"{g1.label(x)}*{g2.label(y)}"
    labels += [g2.label(v) for v in range(g2.n) if v != y]
    return from_edge_list(n1 + g2.n - 1, edges, labels)


def coalescence_index(g1: Graph, x: int, y: int, v: int) -> int:
    """Index in ``coalescence(g1, x, g2, y)`` of vertex ``v`` of ``g2``."""
    if v == y:
        return x
    return g1.n + (v if v < y else v - 1)


def bullet(p1: PointedGraph, p2: PointedGraph) -> PointedGraph:
    """Glue the Right vertex of ``p1`` to the Left vertex of ``p2``."""
    g = coalescence(p1.graph, p1.right, p2.graph, p2.left)
    right = coalescence_index(p1.graph, p1.right, p2.left, p2.right)
    return PointedGraph(g, p1.left, right)


def _prefixed(p: PointedGraph, prefix: str) -> PointedGraph:
    g = p.graph
    labels = [f"{prefix}{g.label(v)}" for v in range(g.n)]
    return PointedGraph(g.with_labels(labels), p.left, p.right)


def build_chain(parts: Sequence[PointedGraph]) -> PointedGraph:
    """Left fold of ``bullet`` over ``parts``; labels gain a part prefix."""
    if not parts:
        raise GraphError("a chain needs at least one part")
    if len(parts) == 1:
        return parts[0]
    acc = _prefixed(parts[0], "0.")
    for i, part in enumerate(parts[1:], start=1):
        acc = bullet(acc, _prefixed(part, f"{i}."))
    return acc


def _check_total_two(h: Graph) -> None:
    if solve(h, Variant.TOTAL).value != 2 or solve(complement(h), Variant.TOTAL).value != 2:
        raise GraphError("H must satisfy gamma_t(H) = gamma_t(complement(H)) = 2")


def build_A(h: Graph) -> PointedGraph:
    """``H`` joined to its complement minus corresponding pairs, plus Left/Right."""
    t = h.n
    if t < 4:
        raise GraphError("A(H) needs |V(H)| >= 4")
    hbar = complement(h)
    left, right = 2 * t, 2 * t + 1
    edges = list(h.edges())
    edges += [(t + u, t + v) for u, v in hbar.edges()]
    edges += [(i, t + j) for i in range(t) for j in range(t) if i != j]
    edges += [(left, i) for i in range(t)]
    edges += [(right, t + i) for i in range(t)]
    labels = [f"x{i + 1}" for i in range(t)] + [f"y{i + 1}" for i in range(t)] + ["Left", "Right"]
    return PointedGraph(from_edge_list(2 * t + 2, edges, labels), left, right)


def build_H_example(t: int) -> Graph:
    """``K_{t-2}`` with a pendant path ``x x1 x2`` attached at a clique vertex ``x``."""
    if t < 4:
        raise GraphError("the example H needs t >= 4")
    k = t - 2
    edges = list(complete_graph(k).edges()) + [(0, k), (k, k + 1)]
    labels = [f"k{i + 1}" for i in range(k)] + ["x1", "x2"]
    labels[0] = "x"
    return from_edge_list(t, edges, labels)


def build_R(m: int) -> PointedGraph:
    if m < 2:
        raise GraphError("R(m) needs m >= 2")
    s = 2 * m
    x = list(range(s))
    y = list(range(s, 2 * s))
    z1, z2, z3, left, right = 2 * s, 2 * s + 1, 2 * s + 2, 2 * s + 3, 2 * s + 4
    # K_{m,m} on y with parts of odd and even (1-based) index
    kmm = [(i, j) for i in range(s) for j in range(i + 1, s) if (i - j) % 2]
    f_edges = {e for e in kmm if e != (0, s - 1)}
    edges = [(y[i], y[j]) for i, j in kmm]
    edges += [(x[i], x[j]) for i in range(s) for j in range(i + 1, s) if (i, j) not in f_edges]
    edges += [(x[i], y[j]) for i in range(s) for j in range(s) if i != j]
    edges += [(left, v) for v in x]
    edges += [(z1, v) for v in x[: s - 1] + y[1 : s - 1]]
    edges += [(z2, v) for v in x[1:] + y[1 : s - 1]]
    edges += [(z3, v) for v in y] + [(z3, z1)]
    edges += [(right, v) for v in y] + [(right, z2)]
    labels = [f"x{i + 1}" for i in range(s)] + [f"y{i + 1}" for i in range(s)]
    labels += ["z1", "z2", "z3", "Left", "Right"]
    return PointedGraph(from_edge_list(4 * m + 5, edges, labels), left, right)


def build_Q(h: Graph) -> PointedGraph:
    """Two copies of ``A(h)`` glued across the deleted Right/Left vertices."""
    if h.n < 4:
        raise GraphError("Q(H) needs |V(H)| >= 4")
    _check_total_two(h)
    a = build_A(h).graph
    t = h.n
    right_a, left_a = 2 * t + 1, 2 * t
    first = [v for v in range(a.n) if v != right_a]
    second = [v for v in range(a.n) if v != left_a]
    index1 = {v: i for i, v in enumerate(first)}
    offset = len(first)
    index2 = {v: offset + i for i, v in enumerate(second)}
    edges = [(index1[u], index1[v]) for u, v in a.edges() if right_a not in (u, v)]
    edges += [(index2[u], index2[v]) for u, v in a.edges() if left_a not in (u, v)]
    edges += [(index1[u], index2[v]) for u in iter_bits(a.adj[right_a]) for v in iter_bits(a.adj[left_a])]
    labels = [f"A1.{a.label(v)}" for v in first] + [f"A2.{a.label(v)}" for v in second]
    g = from_edge_list(4 * t + 2, edges, labels)
    return PointedGraph(g, index1[left_a], index2[right_a])


def build_J(t: int) -> PointedGraph:
    if t < 2:
        raise GraphError("J(t) needs t >= 2")
    s = 2 * t
    a = list(range(s))
    b = list(range(s, 2 * s))
    c = list(range(2 * s, 3 * s))
    left, right = 3 * s, 3 * s + 1
    edges = [(a[2 * i], a[2 * i + 1]) for i in range(t)]
    edges += [(c[2 * i], c[2 * i + 1]) for i in range(t)]
    edges += [(b[i], b[j]) for i in range(s) for j in range(i + 1, s) if not (i % 2 == 0 and j == i + 1)]
    edges += [(a[i], b[j]) for i in range(s) for j in range(s) if i != j]
    edges += [(b[i], c[j]) for i in range(s) for j in range(s) if i != j]
    edges += [(left, v) for v in a] + [(right, v) for v in c]
    labels = [f"a{i + 1}" for i in range(s)] + [f"b{i + 1}" for i in range(s)]
    labels += [f"c{i + 1}" for i in range(s)] + ["Left", "Right"]
    return PointedGraph(from_edge_list(6 * t + 2, edges, labels), left, right)


def build_Q_chain(h: Graph, n: int) -> list[PointedGraph]:
    """The parts of ``Q^(n)``: ``n`` copies of ``Q(h)`` (empty for ``n = 0``)."""
    if n < 0:
        raise GraphError("chain length must be non-negative")
    if n == 0:
        return []
    q = build_Q(h)
    return [q] * n


def build_theorem16_family(k: int, h: Graph | None = None, m: int = 2, t: int = 2) -> PointedGraph:
    """A leafless k-gamma_t-critical graph of diameter floor((5k-7)/3)."""
    if k < 4:
        raise GraphError("the family is defined for k >= 4")
    if h is None:
        h = build_H_example(4)
    if k == 4:
        return build_J(t)
    if k % 3 == 2:
        n = (k - 5) // 3
        a = build_A(h)
        if n:
            _check_total_two(h)
        return build_chain([a] + build_Q_chain(h, n) + [a])
    if k % 3 == 0:
        n = (k - 6) // 3
        return build_chain([build_R(m)] + build_Q_chain(h, n) + [build_J(t)])
    n = (k - 7) // 3
    r = build_R(m)
    return build_chain([r] + build_Q_chain(h, n) + [r, r])


def build_B_chain(k: int, t: int) -> Graph:
    """Path of ``k-1`` cocktail-party blocks ``K_2t`` minus a perfect matching.

    Consecutive blocks share one vertex, and within every block the entry and
    exit vertices are a formerly matched (non-adjacent) pair, so the ends
    are labelled ``start`` and ``end`` at distance ``2(k-1)``.
    """
    if k < 2 or t < 2:
        raise GraphError("B chain needs k >= 2 and t >= 2")
    s = 2 * t
    edges = []
    labels: list[str] = []
    entry = 0
    next_vertex = 0
    first_entry = 0
    exit_vertex = 0
    for block in range(k - 1):
        if block == 0:
            local = list(range(s))
            next_vertex = s
            labels += [f"B1.{i}" for i in range(s)]
        else:
            local = [entry] + list(range(next_vertex, next_vertex + s - 1))
            next_vertex += s - 1
            labels += [f"B{block + 1}.{i}" for i in range(1, s)]
        # local pairs (0,1), (2,3), ... form the removed matching
        for i in range(s):
            for j in range(i + 1, s):
                if not (i % 2 == 0 and j == i + 1):
                    edges.append((local[i], local[j]))
        if block == 0:
            first_entry = local[0]
        exit_vertex = local[1]
        entry = exit_vertex
    labels[first_entry] = "start"
    labels[exit_vertex] = "end"
    return from_edge_list(next_vertex, edges, labels)
