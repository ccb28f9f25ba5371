"""Vertex-criticality checks and the lemmas built on them."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import coalescence
from .graph import (
    Graph,
    delete_closed_neighborhood,
    delete_vertex,
    iter_bits,
    structure_flags,
)
from .solvers import SolveResult, Variant, solve


class CriticalityError(ValueError):
    """The input graph does not meet the hypothesis of the requested check."""


@dataclass(frozen=True)
class CriticalityReport:
    variant: Variant
    base_value: float
    tested_vertices: frozenset[int]
    per_vertex: dict[int, float]
    verdict: bool
    failing_witnesses: frozenset[int]
    nodes_explored: int = 0

    @property
    def k(self) -> float:
        return self.base_value


def tested_vertices(g: Graph, variant: Variant) -> int:
    """Vertices whose deletion must lower the value.

    For total domination, vertices adjacent to a leaf are exempt.
    """
    if variant is Variant.TOTAL and g.n != 2:
        exempt = 0
        for v in structure_flags(g).support_vertices:
            exempt |= 1 << v
        return g.full & ~exempt
    return g.full


def _solve_deleted(args: tuple[Graph, int, Variant]) -> SolveResult:
    g, v, variant = args
    return solve(delete_vertex(g, v), variant)


def check_critical(g: Graph, variant: Variant | str, workers: int = 1) -> CriticalityReport:
    """Solve every eligible deletion ``g - v`` and compare with ``g``.

    ``K_2`` is reported non-critical for every variant.
    """
    variant = Variant(variant)
    flags = structure_flags(g)
    if g.n < 2 or not flags.connected:
        raise CriticalityError("criticality is checked on connected graphs with at least two vertices")
    if variant is Variant.CONNECTED and g.n > 2 and not flags.two_connected:
        raise CriticalityError("a connected-domination critical graph must be 2-connected")
    tested = tested_vertices(g, variant)
    if not tested:
        raise CriticalityError("every vertex is adjacent to a leaf; nothing to test")
    base = solve(g, variant)
    jobs = [(g, v, variant) for v in iter_bits(tested)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_deleted, jobs))
    else:
        results = [_solve_deleted(job) for job in jobs]
    per_vertex = {job[1]: res.value for job, res in zip(jobs, results)}
    failing = frozenset(v for v, value in per_vertex.items() if not value < base.value)
    nodes = base.stats.nodes_explored + sum(r.stats.nodes_explored for r in results)
    return CriticalityReport(
        variant=variant,
        base_value=base.value,
        tested_vertices=frozenset(iter_bits(tested)),
        per_vertex=per_vertex,
        verdict=not failing,
        failing_witnesses=failing,
        nodes_explored=nodes,
    )


def is_critical(g: Graph, variant: Variant | str) -> bool:
    """Like ``check_critical`` but a failed precondition simply means ``False``."""
    try:
        return check_critical(g, variant).verdict
    except CriticalityError:
        return False


def _require_leafless_total_critical(g: Graph, name: str = "graph") -> CriticalityReport:
    if structure_flags(g).leaves:
        raise CriticalityError(f"{name} has leaf vertices")
    try:
        report = check_critical(g, Variant.TOTAL)
    except CriticalityError as exc:
        raise CriticalityError(f"{name}: {exc}") from None
    if not report.verdict:
        raise CriticalityError(f"{name} is not total-domination vertex critical")
    return report


@dataclass(frozen=True)
class LemmaResult:
    holds: bool
    k: float
    witnesses: dict[int, frozenset[int]] = field(default_factory=dict)
    deleted_values: dict[int, float] = field(default_factory=dict)


def check_containing_lemma(g: Graph) -> LemmaResult:
    """Every vertex lies in some minimum total dominating set, and deleting
    it lowers the total domination number by exactly one."""
    report = _require_leafless_total_critical(g)
    k = report.base_value
    witnesses = {}
    holds = True
    for w in range(g.n):
        constrained = solve(g, Variant.TOTAL, forced=1 << w)
        if constrained.value != k or report.per_vertex[w] != k - 1:
            holds = False
        if constrained.certificate is not None:
            witnesses[w] = constrained.certificate
    return LemmaResult(holds, k, witnesses, dict(report.per_vertex))


def check_independent_lemma(g: Graph) -> LemmaResult:
    """In an i-critical graph every vertex lies in a minimum independent
    dominating set, and each deletion lowers i by exactly one."""
    report = check_critical(g, Variant.INDEPENDENT)
    if not report.verdict:
        raise CriticalityError("graph is not independent-domination vertex critical")
    k = report.base_value
    holds = all(value == k - 1 for value in report.per_vertex.values())
    witnesses = {}
    for v in range(g.n):
        constrained = solve(g, Variant.INDEPENDENT, forced=1 << v)
        if constrained.value != k:
            holds = False
        if constrained.certificate is not None:
            witnesses[v] = constrained.certificate
    return LemmaResult(holds, k, witnesses, dict(report.per_vertex))


@dataclass(frozen=True)
class CoalescenceCheck:
    k1: float
    k2: float
    gt_g1_minus_nx: float
    gt_g2_minus_ny: float
    merged_value: float
    lhs: bool
    rhs: bool
    failing_witnesses: frozenset[int] = frozenset()

    @property
    def agrees(self) -> bool:
        return self.lhs == self.rhs


def check_coalescence_condition(g1: Graph, x: int, g2: Graph, y: int) -> CoalescenceCheck:
    """Compare criticality of the coalescence with the neighbourhood condition.

    ``lhs``: the coalescence is (k1 + k2 - 1)-gamma_t-vertex-critical.
    ``rhs``: gamma_t(g2 - N[y]) >= k2 - 1 and gamma_t(g1 - N[x]) >= k1 - 1,
    where an infeasible value counts as infinite.
    """
    k1 = _require_leafless_total_critical(g1, "G1").base_value
    k2 = _require_leafless_total_critical(g2, "G2").base_value
    a = solve(delete_closed_neighborhood(g1, x), Variant.TOTAL).value
    b = solve(delete_closed_neighborhood(g2, y), Variant.TOTAL).value
    rhs = b >= k2 - 1 and a >= k1 - 1
    merged = coalescence(g1, x, g2, y)
    report = check_critical(merged, Variant.TOTAL)
    lhs = report.verdict and report.base_value == k1 + k2 - 1
    return CoalescenceCheck(
        k1=k1,
        k2=k2,
        gt_g1_minus_nx=a,
        gt_g2_minus_ny=b,
        merged_value=report.base_value,
        lhs=lhs,
        rhs=rhs,
        failing_witnesses=report.failing_witnesses,
    )
