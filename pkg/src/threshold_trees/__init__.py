"""Exact spanning-tree counting and uniform sampling for threshold and difference graphs."""

from .bijection import (
    FunctionMap,
    MarkedSpanningTree,
    enumerate_F,
    psi,
    psi_difference,
    psi_inverse,
    psi_inverse_difference,
    sample_spanning_tree,
)
from .counting import (
    enumerate_spanning_trees,
    merris_spectrum,
    tau_difference,
    tau_kirchhoff,
    tau_threshold_formula,
    tau_threshold_uz,
    verify_merris,
)
from .difference import (
    BipartiteCreationSequence,
    DifferenceGraph,
    build_bipartite,
    recognize_bipartite,
    threshold_companion,
)
from .graph_core import Graph, conjugate_degree_counts, degree, is_connected, laplacian
from .threshold import (
    CreationSequence,
    ThresholdGraph,
    assign_weights,
    build,
    degree_sorted_labels,
    parse,
    recognize,
)

__version__ = "0.1.0"

__all__ = [
    "assign_weights",
    "BipartiteCreationSequence",
    "build",
    "build_bipartite",
    "conjugate_degree_counts",
    "CreationSequence",
    "degree",
    "degree_sorted_labels",
    "DifferenceGraph",
    "enumerate_F",
    "enumerate_spanning_trees",
    "FunctionMap",
    "Graph",
    "is_connected",
    "laplacian",
    "MarkedSpanningTree",
    "merris_spectrum",
    "parse",
    "psi",
    "psi_difference",
    "psi_inverse",
    "psi_inverse_difference",
    "recognize",
    "recognize_bipartite",
    "sample_spanning_tree",
    "tau_difference",
    "tau_kirchhoff",
    "tau_threshold_formula",
    "tau_threshold_uz",
    "threshold_companion",
    "ThresholdGraph",
    "verify_merris",
]
