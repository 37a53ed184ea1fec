"""Dominating-set reconfiguration: k-dominating graphs, token graphs, and explicit walks."""

from .domination import (
    DominationProfile,
    domination_profile,
    enumerate_dominating_sets,
    enumerate_minimal_dominating_sets,
    is_dominating,
    is_minimal_dominating,
    minimal_subset,
)
from .graph import Graph, GraphFormatError, encode_graph6, isolated_vertices, parse_edge_list, parse_graph6
from .iso import are_isomorphic, canonical_form, enumerate_small_graphs
from .reconfig import EdgeRule, ReconfigGraph, build, check_bounds, connectivity, d0, scan_conjecture
from .structure import Bipartition, ChordalStructure, bipartition_min_side, chordal_structure
from .walks import (
    JumpPath,
    ProofViolation,
    Walk,
    compress_walk,
    lift_from_jump,
    oracle_bfs,
    project_to_jump,
    verify_walk,
    walk_bipartite,
    walk_chordal,
    walk_subset_chain,
    walk_via_near_full,
    walk_via_union,
)

__version__ = "0.1.0"
