"""Exact verification toolkit for vertex-stabiliser bounds in 4-valent
arc-transitive and cubic vertex-transitive graphs.

Everything here computes over exact integers and explicit permutations;
no floating point enters any verdict.
"""

__version__ = "0.1.0"

from .autiso import are_isomorphic, automorphism_group, subgroup_index
from .classify import (
    CubicVerdict,
    Verdict,
    classify,
    classify_cubic,
    reproduce_tables,
    table_rows,
)
from .families import (
    ActedGraph,
    CrsParams,
    GammaTParams,
    build_c333,
    build_crs,
    build_gamma,
    crs_graph,
    crs_matches,
    recognize_crs,
)
from .graphs import Graph, cayley_graph, coset_graph, load_graph, save_graph
from .localaction import (
    is_arc_transitive,
    is_locally_d4,
    is_vertex_transitive,
    local_action,
)
from .operators import (
    arc_graph,
    bipartite_double,
    hill_capping,
    line_graph,
    seed,
    seed_names,
    squared_arc_graph,
    three_arc_graph,
)
from .perm import PermGroup, Permutation, load_group, save_group
from .ranks import (
    RankRecord,
    SimpleGroupEntry,
    bound_threshold,
    dagger_inequality,
    e_sym_alt,
    lemma41_check,
    simple_group_entry,
    two_rank_bruteforce,
    wreath_rank_bound,
)
from .splitmerge import merge, merge_split_isomorphism, split

__all__ = [
    "ActedGraph", "CrsParams", "CubicVerdict", "GammaTParams", "Graph",
    "PermGroup", "Permutation", "RankRecord", "SimpleGroupEntry", "Verdict",
    "arc_graph", "are_isomorphic", "automorphism_group", "bipartite_double",
    "bound_threshold", "build_c333", "build_crs", "build_gamma",
    "cayley_graph", "classify", "classify_cubic", "coset_graph", "crs_graph",
    "crs_matches", "dagger_inequality", "e_sym_alt", "hill_capping",
    "is_arc_transitive", "is_locally_d4", "is_vertex_transitive",
    "lemma41_check", "line_graph", "load_graph", "load_group",
    "local_action", "merge", "merge_split_isomorphism", "recognize_crs",
    "reproduce_tables", "save_graph", "save_group", "seed", "seed_names",
    "simple_group_entry", "split", "squared_arc_graph", "subgroup_index",
    "table_rows", "three_arc_graph", "two_rank_bruteforce",
    "wreath_rank_bound",
]
