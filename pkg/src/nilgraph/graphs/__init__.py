"""Ideal graphs, graph invariants and genus classification."""

from nilgraph.graphs.analysis import (
    IndependentSet,
    independence_number,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_regular,
    is_star,
    is_tree,
    iterated_reduction,
    reduction,
)
from nilgraph.graphs.embedding import RotationSystem, genus_upper_bound, trace_faces
from nilgraph.graphs.genus import (
    GenusClass,
    GenusVerdict,
    classify_genus,
    genus_formula_biclique,
    genus_formula_complete,
)
from nilgraph.graphs.nil_graph import (
    NilGraph,
    build_ag_graph,
    build_nil_graph,
    degree_profile,
    t_subgraph,
)
from nilgraph.graphs.planarity import find_biclique, is_planar

__all__ = [
    # Ideal graphs
    "NilGraph",
    "build_ag_graph",
    "build_nil_graph",
    "degree_profile",
    "t_subgraph",
    # Invariants
    "IndependentSet",
    "independence_number",
    "is_bipartite",
    "is_complete",
    "is_complete_bipartite",
    "is_regular",
    "is_star",
    "is_tree",
    "iterated_reduction",
    "reduction",
    # Genus
    "GenusClass",
    "GenusVerdict",
    "RotationSystem",
    "classify_genus",
    "find_biclique",
    "genus_formula_biclique",
    "genus_formula_complete",
    "genus_upper_bound",
    "is_planar",
    "trace_faces",
]
