"""
Planar lattices Λ = B·ℤ².

The basis is a 2×2 matrix whose columns are the generators. A singular
basis is rejected at construction; the determinant d(Λ) = |det B| does not
depend on the basis chosen for the same lattice.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from utils.errors import SingularLattice

from .primitives import Point

# |det B| at or below this is treated as singular
SINGULAR_TOL = 1e-12


class Lattice:
    """A lattice given by a basis matrix with generator columns.

    Attributes:
        basis: 2×2 float array, columns are the generators.
    """

    def __init__(self, basis: np.ndarray | list[list[float]]):
        matrix = np.array(basis, dtype=float)
        if matrix.shape != (2, 2) or not np.all(np.isfinite(matrix)):
            raise SingularLattice(f"basis must be a finite 2x2 matrix, got shape {matrix.shape}")
        det = float(np.linalg.det(matrix))
        if abs(det) <= SINGULAR_TOL:
            raise SingularLattice(f"basis determinant {det:.3e} is zero")
        self.basis = matrix
        self.basis.setflags(write=False)

    @classmethod
    def from_generators(cls, g1: Point, g2: Point) -> Lattice:
        return cls([[g1.x, g2.x], [g1.y, g2.y]])

    @property
    def generators(self) -> tuple[Point, Point]:
        b = self.basis
        return Point(float(b[0, 0]), float(b[1, 0])), Point(float(b[0, 1]), float(b[1, 1]))

    @property
    def determinant(self) -> float:
        return abs(float(np.linalg.det(self.basis)))

    def point(self, i: int, j: int) -> Point:
        v = self.basis @ np.array([i, j], dtype=float)
        return Point(float(v[0]), float(v[1]))

    def points_near(self, center: np.ndarray, radius: float) -> np.ndarray:
        """All lattice points within ``radius`` of ``center``, as an (m, 2) array."""
        inv = np.linalg.inv(self.basis)
        # |coefficient k| is bounded by radius times the norm of row k of B⁻¹
        c = inv @ np.asarray(center, dtype=float)
        spans = radius * np.hypot(inv[:, 0], inv[:, 1])
        ii = np.arange(math.floor(c[0] - spans[0]), math.ceil(c[0] + spans[0]) + 1)
        jj = np.arange(math.floor(c[1] - spans[1]), math.ceil(c[1] + spans[1]) + 1)
        grid = np.stack(np.meshgrid(ii, jj, indexing="ij"), axis=-1).reshape(-1, 2)
        pts = grid @ self.basis.T
        keep = np.hypot(*(pts - center).T) <= radius
        return pts[keep]

    def cell_diameter(self) -> float:
        """Longest diagonal of the fundamental parallelogram."""
        g1, g2 = self.basis[:, 0], self.basis[:, 1]
        return float(max(np.hypot(*(g1 + g2)), np.hypot(*(g1 - g2))))

    def reduced(self) -> Lattice:
        """Lagrange-Gauss reduced basis of the same lattice, |g1| <= |g2|."""
        g1 = self.basis[:, 0].copy()
        g2 = self.basis[:, 1].copy()
        if g1 @ g1 > g2 @ g2:
            g1, g2 = g2, g1
        while True:
            mu = round(float(g1 @ g2) / float(g1 @ g1))
            g2 = g2 - mu * g1
            if g2 @ g2 >= g1 @ g1:
                break
            g1, g2 = g2, g1
        return Lattice(np.column_stack([g1, g2]))

    def to_dict(self) -> dict[str, Any]:
        g1, g2 = self.generators
        return {"basis": [g1.to_list(), g2.to_list()], "determinant": self.determinant}


def lattice_determinant(lattice: Lattice) -> float:
    """d(Λ) = |det B|."""
    return lattice.determinant
