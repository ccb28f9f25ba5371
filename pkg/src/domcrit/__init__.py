"""Exact domination solvers and vertex-criticality checks for small graphs."""

from .constructions import (
    build_A,
    build_B_chain,
    build_chain,
    build_H_example,
    build_J,
    build_Q,
    build_Q_chain,
    build_R,
    build_theorem16_family,
    bullet,
    coalescence,
    corona,
)
from .criticality import (
    CriticalityError,
    CriticalityReport,
    check_coalescence_condition,
    check_containing_lemma,
    check_critical,
    check_independent_lemma,
    is_critical,
)
from .families import FamilySpec, FamilySpecError, build_family, parse_family_spec
from .graph import (
    INFINITE,
    Graph,
    GraphError,
    PointedGraph,
    complement,
    diameter,
    from_edge_list,
    is_connected,
    structure_flags,
)
from .io import graph6_decode, graph6_encode, read_graph, write_graph
from .solvers import SolveResult, Variant, brute_force_solve, domination_value, solve
from .verify import (
    SweepConfig,
    VerifyReport,
    sweep,
    verify_bound,
    verify_family,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "CriticalityError",
    "CriticalityReport",
    "FamilySpec",
    "FamilySpecError",
    "Graph",
    "GraphError",
    "PointedGraph",
    "SolveResult",
    "SweepConfig",
    "Variant",
    "VerifyReport",
    "brute_force_solve",
    "build_A",
    "build_B_chain",
    "build_H_example",
    "build_J",
    "build_Q",
    "build_Q_chain",
    "build_R",
    "build_chain",
    "build_family",
    "build_theorem16_family",
    "bullet",
    "check_coalescence_condition",
    "check_containing_lemma",
    "check_critical",
    "check_independent_lemma",
    "coalescence",
    "complement",
    "corona",
    "diameter",
    "domination_value",
    "from_edge_list",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_critical",
    "parse_family_spec",
    "read_graph",
    "solve",
    "structure_flags",
    "sweep",
    "verify_bound",
    "verify_family",
    "verify_theorem",
    "write_graph",
]
