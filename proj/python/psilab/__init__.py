"""Pseudoachromatic number, criticality tests and join constructions."""

from ._core import (
    Graph,
    Inconclusive,
    InternalInconsistency,
    ParseError,
    check_ids,
    complement,
    complete_graph,
    criticality,
    cycle_graph,
    edgeless_graph,
    is_pseudocomplete,
    join,
    join_coloring_lower,
    mpd_profile,
    nabla_k,
    nabla_k_coloring,
    omega,
    path_graph,
    psi,
    run_check,
    structure,
    witness_not_critical,
    witness_not_weakly_critical,
)

__all__ = [
    "Graph",
    "Inconclusive",
    "InternalInconsistency",
    "ParseError",
    "check_ids",
    "complement",
    "complete_graph",
    "criticality",
    "cycle_graph",
    "edgeless_graph",
    "is_pseudocomplete",
    "join",
    "join_coloring_lower",
    "mpd_profile",
    "nabla_k",
    "nabla_k_coloring",
    "omega",
    "path_graph",
    "psi",
    "run_check",
    "structure",
    "witness_not_critical",
    "witness_not_weakly_critical",
]
