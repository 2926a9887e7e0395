"""Well-covered graph recognition: exact algorithms and a brute-force oracle."""
from .crown import CrownDecomposition, KernelOutcome, find_crown_or_matching, kernelize, validate_crown
from .degen import degen_tree_stats, well_covered_degenerate
from .errors import (
    BudgetExceeded,
    ContractError,
    DecompositionFailed,
    GuardExceeded,
    OracleBudgetExceeded,
    WellCovError,
)
from .generators import GenSpec, generate
from .graph import Graph, GraphError, ParseError, parse_graph, read_graph
from .kernels import BACKEND
from .mvc_enum import enumerate_minimal_vertex_covers, minimum_vertex_cover, well_covered_via_mvc_enum
from .oracle import enumerate_maximal_independent_sets, graph_stats_oracle, is_well_covered_oracle
from .p4 import decompose_step, is_class_member, well_covered_few_p4
from .reports import GraphStats, TreeStats, WellCoveredReport
from .vcplus import vc_and_vcplus_branching, well_covered_via_branching

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BudgetExceeded", "ContractError", "CrownDecomposition", "DecompositionFailed",
    "GenSpec", "Graph", "GraphError", "GraphStats", "GuardExceeded", "KernelOutcome",
    "OracleBudgetExceeded", "ParseError", "TreeStats", "WellCovError", "WellCoveredReport",
    "decompose_step", "degen_tree_stats", "enumerate_maximal_independent_sets",
    "enumerate_minimal_vertex_covers", "find_crown_or_matching", "generate", "graph_stats_oracle",
    "is_class_member", "is_well_covered_oracle", "kernelize", "minimum_vertex_cover", "parse_graph",
    "read_graph", "validate_crown", "vc_and_vcplus_branching", "well_covered_degenerate",
    "well_covered_few_p4", "well_covered_via_branching", "well_covered_via_mvc_enum",
]
