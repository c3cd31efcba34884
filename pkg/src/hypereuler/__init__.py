"""Euler tours and Euler families in hypergraphs.

Decision procedures, witness construction, edge-cut reductions, and an
exact exhaustive oracle, plus a CLI and a benchmark harness.
"""

from .core import (
    ComponentDecomposition,
    Hypergraph,
    PeelResult,
    PeelVerdict,
    peel_degree_le1,
)
from .cuts import (
    EdgeCut,
    boundary,
    cheap_minimal_cut,
    is_minimal,
    minimalize,
    minimum_edge_cut,
)
from .assignments import (
    Assignment,
    BlockPartition,
    Multigraph,
    apply_assignment,
    assignment_count_bound,
    assignment_from_family,
    check_assignment,
    enumerate_assignments,
    enumerate_bipartitions,
    lift_family,
    multigraph_euler_status,
    quotient_multigraph,
    standard_blocks,
    valid_pairs_for_edge,
)
from .collapse import (
    Collapsed,
    Gadget,
    collapse,
    fixed_vertex_gadget,
    gadget_family,
    link_families,
    ungadget_family,
)
from .oracle import (
    Constraint,
    GenModel,
    GenSpec,
    Mode,
    OracleOutcome,
    canonical_form,
    generate,
    oracle_euler,
    oracle_min_cut,
)
from .solvers import (
    CutChoice,
    SearchStats,
    SolveOutcome,
    SolverConfig,
    Strategy,
    quick_checks,
    solve,
    solve_family_collapse,
    solve_family_standard,
    solve_tour_collapse,
    solve_tour_standard,
)
from .trails import (
    ClosedTrail,
    EMPTY_FAMILY,
    EulerFamily,
    Report,
    Walk,
    concatenate_at_anchor,
    family_traverses_vertex_via,
    traverses_vertex_via,
    validate_walk,
    verify_euler_family,
)
from . import errors
from .hgr import emit, emit_certificate, parse, parse_certificate

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "ComponentDecomposition",
    "PeelResult",
    "PeelVerdict",
    "peel_degree_le1",
    "EdgeCut",
    "boundary",
    "is_minimal",
    "minimalize",
    "minimum_edge_cut",
    "cheap_minimal_cut",
    "Assignment",
    "BlockPartition",
    "Multigraph",
    "standard_blocks",
    "enumerate_bipartitions",
    "valid_pairs_for_edge",
    "check_assignment",
    "enumerate_assignments",
    "assignment_count_bound",
    "apply_assignment",
    "quotient_multigraph",
    "multigraph_euler_status",
    "lift_family",
    "assignment_from_family",
    "Collapsed",
    "Gadget",
    "collapse",
    "fixed_vertex_gadget",
    "gadget_family",
    "ungadget_family",
    "link_families",
    "Mode",
    "Constraint",
    "OracleOutcome",
    "oracle_euler",
    "oracle_min_cut",
    "GenModel",
    "GenSpec",
    "generate",
    "canonical_form",
    "Strategy",
    "CutChoice",
    "SolverConfig",
    "SearchStats",
    "SolveOutcome",
    "quick_checks",
    "solve",
    "solve_family_standard",
    "solve_tour_standard",
    "solve_family_collapse",
    "solve_tour_collapse",
    "Walk",
    "ClosedTrail",
    "EulerFamily",
    "EMPTY_FAMILY",
    "Report",
    "validate_walk",
    "verify_euler_family",
    "traverses_vertex_via",
    "family_traverses_vertex_via",
    "concatenate_at_anchor",
    "parse",
    "emit",
    "emit_certificate",
    "parse_certificate",
    "errors",
]
