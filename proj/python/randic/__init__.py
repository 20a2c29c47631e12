"""Randić index, distance invariants and conjecture checks."""

from ._core import (
    ConjectureVerdict,
    DisconnectedGraphError,
    FormatError,
    Graph,
    SearchResult,
    all_pairs_distances,
    average_distance,
    bounds,
    canonical_key,
    check_c1_additive,
    check_c1_ratio,
    check_c2,
    complete_graph,
    cycle_graph,
    diameter,
    enumerate_graphs,
    hunt,
    invariant_report,
    is_connected,
    is_path,
    parse_graph6,
    parse_graph_line,
    parse_sparse6,
    path_graph,
    premises,
    randic_index,
    sample_min_degree,
    serialize_graph6,
    star_graph,
    survey,
)

__version__ = "0.1.0"
