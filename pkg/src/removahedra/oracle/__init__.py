from .core import (
    VertexSet,
    enumerate_vertices,
    facet_indices,
    is_simple,
    minimize,
    normal_fan_matches,
    offending_vertex,
    polytopes_equal,
)
from .kernels import PURE_ENV, pure_mode_requested

__all__ = [
    "VertexSet",
    "enumerate_vertices",
    "facet_indices",
    "is_simple",
    "minimize",
    "normal_fan_matches",
    "offending_vertex",
    "polytopes_equal",
    "PURE_ENV",
    "pure_mode_requested",
]
