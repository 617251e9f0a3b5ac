"""Polynomial-time test for a local formation f(p_i) = G_{pi_i} to be a
formation of soluble groups with the Shemetkov property."""

from .critical_graphs import CandidateGroup, Family, gamma
from .decider import CheckRecord, Stage, Verdict, check_candidate, decide, decide_graph
from .errors import ValidationError
from .formation import LocalFormationSpec, formation_graph, spec_from_graph
from .graph import CriticalGraph, graph_from, is_subgraph, union

__all__ = [
    "CandidateGroup",
    "CheckRecord",
    "CriticalGraph",
    "Family",
    "LocalFormationSpec",
    "Stage",
    "ValidationError",
    "Verdict",
    "check_candidate",
    "decide",
    "decide_graph",
    "formation_graph",
    "gamma",
    "graph_from",
    "is_subgraph",
    "spec_from_graph",
    "union",
]
