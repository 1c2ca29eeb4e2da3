# Exact kernel: rational linear algebra and polytopes
from .geometry import (
    ContainmentMode,
    Halfspace,
    Polytope,
    boundary_ring,
    centroid,
    contains,
    convex_hull,
    dilate,
    halfspace_intersection,
    intersection,
    is_subset,
    lattice_points,
    linear_image,
    minkowski_sum,
    slice_at,
    volume,
)

__all__ = [
    "ContainmentMode",
    "Halfspace",
    "Polytope",
    "boundary_ring",
    "centroid",
    "contains",
    "convex_hull",
    "dilate",
    "halfspace_intersection",
    "intersection",
    "is_subset",
    "lattice_points",
    "linear_image",
    "minkowski_sum",
    "slice_at",
    "volume",
]
