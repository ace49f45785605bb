"""Schnyder woods of 3-connected plane graphs and spanning trees whose tree
and co-tree both have maximum degree at most 5."""

from .candidate import CandidateSubgraph, build_H, build_H_dual
from .dual_wood import completion, dual_wood
from .errors import PlanarGraphError, VerifierAlarm
from .extract import SpanningTreePair, co_tree, extract_tree, run_pipeline, verify_theorem
from .opp import OrderedPathPartition, compatible_opp, parent_edges, validate_opp
from .planar import (
    EmbeddedPlanarGraph, Suspension, build_graph, check_three_connected, identify_roots,
    suspend, suspended_dual,
)
from .schnyder import BLUE, GREEN, RED, SchnyderWood, compute_wood, validate_wood

__version__ = "0.1.0"

__all__ = [
    "BLUE", "GREEN", "RED", "CandidateSubgraph", "EmbeddedPlanarGraph", "OrderedPathPartition",
    "PlanarGraphError", "SchnyderWood", "SpanningTreePair", "Suspension", "VerifierAlarm",
    "build_H", "build_H_dual", "build_graph", "check_three_connected", "co_tree",
    "compatible_opp", "completion", "compute_wood", "dual_wood", "extract_tree",
    "identify_roots", "parent_edges", "run_pipeline", "suspend", "suspended_dual",
    "validate_opp", "validate_wood", "verify_theorem",
]
