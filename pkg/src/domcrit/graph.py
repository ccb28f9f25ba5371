"""Immutable simple graphs with bitset adjacency.

Vertex sets are plain Python ints used as bitsets: bit ``v`` set means vertex
``v`` is a member.  Every operation returns a new graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitset of neighbours of ``v``.  Labels are optional
    per-vertex provenance strings and take no part in equality.
    """

    __slots__ = ("n", "adj", "labels", "_closed")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if labels is not None and len(labels) != n:
            raise GraphError("label count does not match vertex count")
        self._init(n, tuple(adj), tuple(labels) if labels is not None else None)

    def _init(self, n: int, adj: tuple[int, ...], labels: tuple[str, ...] | None) -> None:
        setter = object.__setattr__
        setter(self, "n", n)
        setter(self, "adj", adj)
        setter(self, "labels", labels)
        setter(self, "_closed", tuple(row | (1 << v) for v, row in enumerate(adj)))

    # -- basic queries -------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhoods ``N[v]`` as bitsets."""
        return self._closed

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return to_list(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def find_label(self, label: str) -> int:
        if self.labels is not None:
            for v, lab in enumerate(self.labels):
                if lab == label:
                    return v
        raise GraphError(f"no vertex labelled {label!r}")

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, labels)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def _check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.full:
            raise GraphError(f"vertex set references vertices outside 0..{self.n - 1}")

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __getstate__(self):
        return (self.n, self.adj, self.labels)

    def __setstate__(self, state):
        self._init(*state)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph is immutable")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    adj = list(g1.adj) + [row << shift for row in g2.adj]
    return Graph(g1.n + g2.n, adj)


# -- surgery -----------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full
    adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    return Graph(g.n, adj, g.labels)


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, compacted in ascending original order.

    The labels of the result record the original vertex of each new vertex
    (its original label when the source graph is labelled).
    """
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    g._check_mask(mask)
    keep = to_list(mask)
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for u in iter_bits(g.adj[old] & mask):
            row |= 1 << index[u]
        adj.append(row)
    labels = [g.label(old) for old in keep]
    return Graph(len(keep), adj, labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, g.full & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, g.full & ~g.closed[v])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj, g.labels)


# -- traversal ---------------------------------------------------------------


@dataclass(frozen=True)
class BfsLayers:
    source: int
    layers: tuple[int, ...]
    unreachable: int

    def sizes(self) -> list[int]:
        return [layer.bit_count() for layer in self.layers]

    def layer_lists(self) -> list[list[int]]:
        return [to_list(layer) for layer in self.layers]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def prefix(self, i: int) -> int:
        """Union of layers ``0..i``."""
        mask = 0
        for layer in self.layers[: i + 1]:
            mask |= layer
        return mask


def _expand(adj: Sequence[int], frontier: int) -> int:
    reach = 0
    for v in iter_bits(frontier):
        reach |= adj[v]
    return reach


def bfs_layers(g: Graph, source: int, within: int | None = None) -> BfsLayers:
    """Distance layers from ``source``, optionally restricted to ``within``."""
    g._check_vertex(source)
    allowed = g.full if within is None else within
    seen = 1 << source
    frontier = seen
    layers = []
    while frontier:
        layers.append(frontier)
        frontier = _expand(g.adj, frontier) & allowed & ~seen
        seen |= frontier
    return BfsLayers(source, tuple(layers), allowed & ~seen)


def distance(g: Graph, u: int, v: int) -> float:
    layers = bfs_layers(g, u).layers
    for i, layer in enumerate(layers):
        if layer >> v & 1:
            return i
    return INFINITE


def component_mask(g: Graph, source: int, within: int | None = None) -> int:
    allowed = g.full if within is None else within
    seen = 1 << source
    frontier = seen
    while frontier:
        frontier = _expand(g.adj, frontier) & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph, within: int | None = None) -> bool:
    """Connectivity of ``g`` (or of the subgraph induced by ``within``).

    The empty vertex set counts as connected.
    """
    allowed = g.full if within is None else within
    if not allowed:
        return True
    first = (allowed & -allowed).bit_length() - 1
    return component_mask(g, first, allowed) == allowed


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``INFINITE`` when disconnected."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        layers = bfs_layers(g, v)
        if layers.unreachable:
            return INFINITE
        best = max(best, layers.eccentricity)
    return best


def cut_vertices(g: Graph) -> int:
    """Articulation points via iterative lowpoint search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(to_list(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(to_list(g.adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts |= 1 << parent
        if root_children > 1:
            cuts |= 1 << root
    return cuts


@dataclass(frozen=True)
class StructureFlags:
    connected: bool
    two_connected: bool
    has_isolated: bool
    leaves: frozenset[int] = field(default_factory=frozenset)
    support_vertices: frozenset[int] = field(default_factory=frozenset)


def structure_flags(g: Graph) -> StructureFlags:
    connected = is_connected(g)
    two_connected = connected and g.n >= 3 and cut_vertices(g) == 0
    leaves = [v for v in range(g.n) if g.adj[v].bit_count() == 1]
    supports = set()
    for v in leaves:
        supports.update(iter_bits(g.adj[v]))
    return StructureFlags(
        connected=connected,
        two_connected=two_connected,
        has_isolated=any(row == 0 for row in g.adj),
        leaves=frozenset(leaves),
        support_vertices=frozenset(supports),
    )


# -- pointed graphs ----------------------------------------------------------


@dataclass(frozen=True)
class PointedGraph:
    """A graph with two assigned diametrical vertices ``left`` and ``right``."""

    graph: Graph
    left: int
    right: int

    def __post_init__(self):
        g = self.graph
        g._check_vertex(self.left)
        g._check_vertex(self.right)
        if g.n >= 2 and self.left == self.right:
            raise GraphError("left and right must differ when n >= 2")
        diam = diameter(g)
        if diam == INFINITE:
            raise GraphError("a pointed graph must be connected")
        if distance(g, self.left, self.right) != diam:
            raise GraphError(
                f"left/right at distance {distance(g, self.left, self.right)} are not diametrical (diameter {diam})"
            )

    @property
    def n(self) -> int:
        return self.graph.n

    def left_layers(self) -> BfsLayers:
        return bfs_layers(self.graph, self.left)

    def right_layers(self) -> BfsLayers:
        return bfs_layers(self.graph, self.right)
