"""Planar primitives: points, triangles, convex polygons and lattices."""

from .lattice import Lattice, lattice_determinant
from .polygon import ConvexPolygon, convex_hull, hausdorff_distance
from .primitives import DEFAULT_ABS_TOL, Point, Triangle, midpoint, signed_area, triangle_area

__all__ = [
    "DEFAULT_ABS_TOL",
    "ConvexPolygon",
    "Lattice",
    "Point",
    "Triangle",
    "convex_hull",
    "hausdorff_distance",
    "lattice_determinant",
    "midpoint",
    "signed_area",
    "triangle_area",
]
