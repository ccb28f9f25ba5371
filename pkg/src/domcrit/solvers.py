"""Exact minimum dominating sets for four domination variants.

The search is a branch-and-bound over bitsets.  Plain, total and independent
domination branch on the uncovered vertex with the fewest remaining
dominators; connected domination grows a connected partial set one boundary
vertex at a time.  ``brute_force_solve`` enumerates subsets by size and is
kept deliberately naive so that it can serve as an oracle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from .graph import INFINITE, Graph, GraphError, is_connected, iter_bits, to_mask

BRUTE_FORCE_LIMIT = 24


class Variant(str, Enum):
    PLAIN = "plain"
    TOTAL = "total"
    INDEPENDENT = "independent"
    CONNECTED = "connected"

    def __str__(self) -> str:
        return self.value

    @property
    def symbol(self) -> str:
        return {"plain": "gamma", "total": "gamma_t", "independent": "i", "connected": "gamma_c"}[self.value]


@dataclass(frozen=True)
class SolveStats:
    nodes_explored: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solve.  ``value`` is ``INFINITE`` when no set exists."""

    variant: Variant
    value: float
    certificate: frozenset[int] | None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def feasible(self) -> bool:
        return self.certificate is not None


def _as_mask(s: int | Iterable[int]) -> int:
    return s if isinstance(s, int) else to_mask(s)


def _union(rows, mask: int) -> int:
    acc = 0
    for v in iter_bits(mask):
        acc |= rows[v]
    return acc


def is_valid_set(g: Graph, s: int | Iterable[int], variant: Variant | str) -> bool:
    """Whether ``s`` is a dominating set of ``g`` of the given variant."""
    variant = Variant(variant)
    mask = _as_mask(s)
    if mask & ~g.full:
        return False
    full = g.full
    if variant is Variant.TOTAL:
        return _union(g.adj, mask) == full
    if _union(g.closed, mask) != full:
        return False
    if variant is Variant.INDEPENDENT:
        return all(not g.adj[v] & mask for v in iter_bits(mask))
    if variant is Variant.CONNECTED:
        return mask != 0 and is_connected(g, within=mask)
    return True


def _infeasible(g: Graph, variant: Variant) -> bool:
    if variant is Variant.TOTAL:
        return any(row == 0 for row in g.adj)
    if variant is Variant.CONNECTED:
        return g.n == 0 or not is_connected(g)
    return False


def _rank(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by index."""
    degs = g.degrees()
    return sorted(range(g.n), key=lambda v: (-degs[v], v))


# -- greedy ------------------------------------------------------------------


def _greedy_set(g: Graph, variant: Variant, forced: int = 0) -> int | None:
    if _infeasible(g, variant):
        return None
    if variant is Variant.INDEPENDENT and any(g.adj[v] & forced for v in iter_bits(forced)):
        return None
    order = _rank(g)
    full = g.full
    cover = g.adj if variant is Variant.TOTAL else g.closed
    chosen = forced
    covered = _union(cover, chosen)
    if variant is Variant.CONNECTED:
        if not chosen:
            chosen = 1 << order[0]
            covered = g.closed[order[0]]
        reach = _union(g.adj, chosen)
        while covered != full:
            boundary = reach & ~chosen
            best = max(iter_bits(boundary), key=lambda c: ((g.closed[c] & ~covered).bit_count(), -order.index(c)))
            chosen |= 1 << best
            covered |= g.closed[best]
            reach |= g.adj[best]
        if not is_connected(g, within=chosen):
            return None
        return chosen
    blocked = chosen
    if variant is Variant.INDEPENDENT:
        blocked = _union(g.closed, chosen)
    while covered != full:
        best, gain = -1, 0
        for c in order:
            if blocked >> c & 1:
                continue
            gc = (cover[c] & ~covered).bit_count()
            if gc > gain:
                best, gain = c, gc
        if best < 0:
            return None
        chosen |= 1 << best
        covered |= cover[best]
        blocked |= g.closed[best] if variant is Variant.INDEPENDENT else 1 << best
    return chosen


def greedy_upper_bound(g: Graph, variant: Variant | str) -> float:
    """Size of a greedily built valid set, or ``INFINITE`` if none exists."""
    chosen = _greedy_set(g, Variant(variant))
    return INFINITE if chosen is None else chosen.bit_count()


# -- branch and bound --------------------------------------------------------


class _CoverSearch:
    """Plain, total and independent domination."""

    def __init__(self, g: Graph, variant: Variant):
        self.full = g.full
        self.independent = variant is Variant.INDEPENDENT
        self.cover = g.adj if variant is Variant.TOTAL else g.closed
        # dominators[u]: candidates whose cover contains u
        self.dominators = self.cover
        self.closed = g.closed
        rank = _rank(g)
        self.position = [0] * g.n
        for i, v in enumerate(rank):
            self.position[v] = i
        self.nodes = 0
        self.best = math.inf
        self.best_set: int | None = None

    def run(self, chosen: int, incumbent: int | None) -> None:
        if incumbent is not None:
            self.best = incumbent.bit_count()
            self.best_set = incumbent
        uncovered = self.full & ~_union(self.cover, chosen)
        if self.independent:
            allowed = self.full & ~_union(self.closed, chosen)
        else:
            allowed = self.full & ~chosen
        self._search(chosen, chosen.bit_count(), uncovered, allowed)

    def _search(self, chosen: int, size: int, uncovered: int, allowed: int) -> None:
        self.nodes += 1
        if not uncovered:
            if size < self.best:
                self.best = size
                self.best_set = chosen
            return
        best = self.best
        if size + 1 >= best:
            return
        dominators = self.dominators
        pick_opts = 0
        pick_count = 1 << 30
        used = 0
        packing = 0
        candidates = 0
        m = uncovered
        while m:
            low = m & -m
            m ^= low
            opts = dominators[low.bit_length() - 1] & allowed
            if not opts:
                return
            candidates |= opts
            count = opts.bit_count()
            if count < pick_count:
                pick_count = count
                pick_opts = opts
            if not opts & used:
                used |= opts
                packing += 1
        if size + packing >= best:
            return
        cover = self.cover
        max_gain = 0
        for c in iter_bits(candidates):
            gain = (cover[c] & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        if size + -(-uncovered.bit_count() // max_gain) >= best:
            return
        position = self.position
        for c in sorted(iter_bits(pick_opts), key=position.__getitem__):
            bit = 1 << c
            if self.independent:
                child_allowed = allowed & ~self.closed[c]
            else:
                child_allowed = allowed & ~bit
            self._search(chosen | bit, size + 1, uncovered & ~cover[c], child_allowed)
            allowed &= ~bit
            if size + 1 >= self.best:
                return


class _ConnectedSearch:
    """Connected domination over connected partial sets."""

    def __init__(self, g: Graph):
        self.g = g
        self.full = g.full
        self.adj = g.adj
        self.closed = g.closed
        rank = _rank(g)
        self.rank = rank
        self.position = [0] * g.n
        for i, v in enumerate(rank):
            self.position[v] = i
        self.nodes = 0
        self.best = math.inf
        self.best_set: int | None = None

    def run(self, forced: int, incumbent: int | None) -> None:
        if incumbent is not None:
            self.best = incumbent.bit_count()
            self.best_set = incumbent
        if forced:
            uncovered = self.full & ~_union(self.closed, forced)
            self._search(forced, forced.bit_count(), uncovered, 0, _union(self.adj, forced))
            return
        excluded = 0
        for r in self.rank:
            if self.best <= 1:
                break
            self._search(1 << r, 1, self.full & ~self.closed[r], excluded, self.adj[r])
            excluded |= 1 << r

    def _search(self, chosen: int, size: int, uncovered: int, excluded: int, nbr: int) -> None:
        self.nodes += 1
        if not uncovered:
            if size < self.best and is_connected(self.g, within=chosen):
                self.best = size
                self.best_set = chosen
            return
        best = self.best
        if size + 1 >= best:
            return
        adj = self.adj
        closed = self.closed
        allowed = self.full & ~chosen & ~excluded
        # BFS from the partial set through allowed vertices; an uncovered
        # vertex first dominated at depth d needs d more vertices.
        seen = chosen
        frontier = nbr & allowed
        dominated = chosen | nbr
        depth = 1
        far = 0
        remaining = uncovered & ~dominated
        while frontier and remaining:
            seen |= frontier
            step = _union(closed, frontier)
            hit = remaining & step
            if hit:
                far = depth
                remaining &= ~hit
            depth += 1
            frontier = step & allowed & ~seen
        if remaining:
            return
        if size + far >= best:
            return
        candidates = seen & ~chosen
        max_gain = 0
        for c in iter_bits(candidates):
            gain = (closed[c] & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        if size + -(-uncovered.bit_count() // max_gain) >= best:
            return
        boundary = nbr & allowed
        position = self.position
        pick = min(
            iter_bits(boundary),
            key=lambda c: (-(closed[c] & uncovered).bit_count(), position[c]),
        )
        bit = 1 << pick
        self._search(chosen | bit, size + 1, uncovered & ~closed[pick], excluded, nbr | adj[pick])
        self._search(chosen, size, uncovered, excluded | bit, nbr)


def solve(g: Graph, variant: Variant | str, forced: int | Iterable[int] = 0) -> SolveResult:
    """Exact minimum for ``variant``; ``forced`` vertices are required members.

    With ``forced`` the optimum is taken over sets containing those vertices.
    """
    variant = Variant(variant)
    forced_mask = _as_mask(forced)
    g._check_mask(forced_mask)
    start = time.perf_counter()
    if _infeasible(g, variant) or (
        variant is Variant.INDEPENDENT and any(g.adj[v] & forced_mask for v in iter_bits(forced_mask))
    ):
        return SolveResult(variant, INFINITE, None, SolveStats(0, time.perf_counter() - start))
    incumbent = _greedy_set(g, variant, forced_mask)
    if variant is Variant.CONNECTED:
        search = _ConnectedSearch(g)
    else:
        search = _CoverSearch(g, variant)
    search.run(forced_mask, incumbent)
    cert = search.best_set
    stats = SolveStats(search.nodes, time.perf_counter() - start)
    if cert is None:
        return SolveResult(variant, INFINITE, None, stats)
    assert is_valid_set(g, cert, variant)
    return SolveResult(variant, cert.bit_count(), frozenset(iter_bits(cert)), stats)


def domination_value(g: Graph, variant: Variant | str) -> float:
    return solve(g, variant).value


def brute_force_solve(g: Graph, variant: Variant | str) -> SolveResult:
    """Enumerate subsets in increasing size; oracle for ``solve``."""
    variant = Variant(variant)
    if g.n > BRUTE_FORCE_LIMIT:
        raise GraphError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    start = time.perf_counter()
    tried = 0
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            tried += 1
            if is_valid_set(g, combo, variant):
                stats = SolveStats(tried, time.perf_counter() - start)
                return SolveResult(variant, size, frozenset(combo), stats)
    return SolveResult(variant, INFINITE, None, SolveStats(tried, time.perf_counter() - start))
