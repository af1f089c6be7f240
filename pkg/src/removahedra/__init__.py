"""Exact realizability analysis of nested fans by removahedra.

Decides whether the nested fan of a connected building set is the normal fan
of its removahedron, computes exact vertex coordinates and Minkowski
decompositions, and verifies everything against a brute-force rational
polytope oracle.
"""

from .building import (
    BuildingSet,
    Graph,
    all_b_paths,
    b_hull,
    b_path,
    graphical_building_set,
    intersection_witness,
    is_chordful,
    is_closed_under_intersection,
    is_generating,
    make_building_set,
)
from .geometry import (
    FlipCertificate,
    HPolytope,
    RealizabilityResult,
    SkewParams,
    btree_point,
    delta,
    interior_functional,
    is_removahedron_realizable,
    iter_flip_certificates,
    removahedron_hrep,
    skew_delta,
    skew_point,
    skew_removahedron_hrep,
)
from .minkowski import (
    DeformationRHS,
    MinkowskiWeights,
    canonical_weights,
    defo_hrep,
    face_of_nested,
    mink_realizes_fan,
    minkowski_vertex,
    weights_to_rhs,
)
from .nested import (
    BTree,
    Flip,
    FlipContext,
    NestedSet,
    all_flips,
    btree_from_nested,
    exchangeable_closure_holds,
    exchangeable_pairs,
    flip,
    flip_context,
    is_nested,
    nested_complex,
    nested_from_btree,
    nested_set,
)
from .oracle import (
    VertexSet,
    enumerate_vertices,
    is_simple,
    minimize,
    normal_fan_matches,
    polytopes_equal,
)

__version__ = "0.1.0"

__all__ = [
    "BuildingSet",
    "Graph",
    "all_b_paths",
    "b_hull",
    "b_path",
    "graphical_building_set",
    "intersection_witness",
    "is_chordful",
    "is_closed_under_intersection",
    "is_generating",
    "make_building_set",
    "FlipCertificate",
    "HPolytope",
    "RealizabilityResult",
    "SkewParams",
    "btree_point",
    "delta",
    "interior_functional",
    "is_removahedron_realizable",
    "iter_flip_certificates",
    "removahedron_hrep",
    "skew_delta",
    "skew_point",
    "skew_removahedron_hrep",
    "DeformationRHS",
    "MinkowskiWeights",
    "canonical_weights",
    "defo_hrep",
    "face_of_nested",
    "mink_realizes_fan",
    "minkowski_vertex",
    "weights_to_rhs",
    "BTree",
    "Flip",
    "FlipContext",
    "NestedSet",
    "all_flips",
    "btree_from_nested",
    "exchangeable_closure_holds",
    "exchangeable_pairs",
    "flip",
    "flip_context",
    "is_nested",
    "nested_complex",
    "nested_from_btree",
    "nested_set",
    "VertexSet",
    "enumerate_vertices",
    "is_simple",
    "minimize",
    "normal_fan_matches",
    "polytopes_equal",
]
