"""Exact toolkit for average connectivity of graphs, digraphs and orientations."""

from .core import (
    Digraph,
    Graph,
    Orientation,
    ParseError,
    from_edge_list,
    from_graph6,
    orient,
    reverse,
    to_digraph,
    to_graph6,
)
from .connectivity import (
    ConnectivityReport,
    PotentialReport,
    count_full_pairs,
    is_full_pair,
    is_saturated,
    is_strong,
    kappa_pair,
    kappa_pair_digraph,
    lambda_pair,
    lambda_pair_digraph,
    potential_digraph,
    potential_graph,
    report_digraph,
    report_graph,
    theta,
    total_connectivity,
)
from .search import (
    SearchCapExceeded,
    SearchResult,
    check_optimality_necessary_conditions,
    search_branch_and_bound,
    search_exhaustive,
    search_local,
    strong_orientation,
)
from .bounds import check_bound, eval_bound

__version__ = "0.1.0"
