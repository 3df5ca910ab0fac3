"""Exact independent-set sequences of small graphs.

Counting, unimodality and log-concavity verdicts, bounds for random
bipartite graphs, and exhaustive extremal searches under a minimum-degree
constraint.
"""
from .bipartite_bounds import (
    BoundProfile,
    as_properties,
    coefficient_sandwich,
    compute_K,
    compute_m,
    logconcavity_threshold_ok,
    profile,
    unimodality_threshold_ok,
    x_of,
)
from .canonical import canonical
from .enumeration import enumerate_graphs
from .errors import BudgetExceeded, GraphError
from .extremal import (
    ExtremalReport,
    alekseev_check,
    kdn_seq,
    levit_mandrescu_check,
    n_min,
    probe_conjecture3,
    thresholds,
    verify_fixed_size,
    verify_max_total,
)
from .graph6 import read_graph6, write_graph6
from .graph_core import (
    BipartiteGraph,
    Graph,
    RngSpec,
    build,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    has_perfect_matching,
    is_connected,
    join,
    min_degree,
    path,
    sample_bipartite,
    star,
)
from .ind_poly import alpha, compose_join, compose_union, evaluate, ind_seq, total_count
from .seq_analysis import SeqVerdict, analyze, has_mode_at, is_log_concave, is_real_rooted

__version__ = "0.1.0"
