"""Bijective combinatorics on Ferrers graphs.

Hamiltonian paths correspond to ordered pairs of n-rook placements, and
spanning trees to R/C configurations; both directions of each bijection are
provided together with closed-form counts and independent brute-force and
determinant checks.
"""

from .diagram import (
    FerrersDiagram,
    IndexSubset,
    Vertex,
    conjugate,
    contains,
    edges,
    from_row_lengths,
    induced_subdiagram,
)
from .errors import FerrersError, InvariantViolation, RejectedInput, ResourceLimit
from .hamiltonian import (
    HamiltonianPath,
    path_to_rook_pair,
    rook_pair_to_path,
    swap_ab_path,
    transpose_path,
    validate_path,
)
from .rook import RookPlacement, count_rook_placements, enumerate_rook_placements, validate_placement
from .spanning import (
    RCConfiguration,
    SpanningTree,
    WeightVector,
    config_to_tree,
    config_weight,
    count_spanning_trees_formula,
    enumerate_configs,
    tree_to_config,
    tree_weight,
    weighted_tree_sum_formula,
)

__version__ = "0.1.0"
