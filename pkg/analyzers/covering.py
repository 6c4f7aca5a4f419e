"""
Critical covering lattices.

A critical triangle T = (x, y, z) determines the hexagon conv(T, -T). Its
opposite edges are matched by the translations x - z and y - z, so the
lattice with basis (x - z, y - z) tiles the plane with copies of the
hexagon. Since the hexagon lies in K, the same lattice covers the plane
with K, and its determinant 2·area(T) equals Δ(K).

``covering_check`` verifies a covering by sampling the fundamental cell.
Each sample p is tested against K + λ for all lattice points λ within
circumradius(K) + cell diameter of the cell center, which is enough for
no sample to be reported uncovered through truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from domains.domain import Domain
from geometry.lattice import Lattice
from geometry.polygon import ConvexPolygon, convex_hull
from geometry.primitives import Point, Triangle
from utils.log import log_info

from .anchored import critical_triangles

LOG_PREFIX = "covering"

# Default samples per side of the fundamental cell
DEFAULT_RESOLUTION = 128

# Smallest accepted resolution
MIN_RESOLUTION = 16


@dataclass
class CoveringReport:
    """Result of sampling the fundamental cell of a lattice.

    Attributes:
        lattice: The lattice that was checked.
        sampled_points: Number of samples.
        uncovered: Samples not covered by any translate of K.
        density: area(K) / d(Λ).
        samples: (resolution², 2) sample coordinates, for rendering.
        multiplicity: Number of translates covering each sample.
    """

    lattice: Lattice
    sampled_points: int
    uncovered: list[Point]
    density: float
    samples: np.ndarray = field(repr=False, default_factory=lambda: np.empty((0, 2)))
    multiplicity: np.ndarray = field(repr=False, default_factory=lambda: np.empty(0, dtype=int))

    @property
    def covered(self) -> bool:
        return not self.uncovered

    def to_dict(self) -> dict[str, Any]:
        return {
            "lattice": self.lattice.to_dict(),
            "sampled_points": self.sampled_points,
            "uncovered": [p.to_list() for p in self.uncovered],
            "density": self.density,
        }


def lattice_from_triangle(triangle: Triangle) -> Lattice:
    """The lattice with basis (x - z, y - z) that tiles conv(T, -T)."""
    x, y, z = triangle.vertices
    return Lattice.from_generators(x - z, y - z)


def critical_hexagon(triangle: Triangle) -> ConvexPolygon:
    """conv(T, -T); degenerates to a parallelogram when the origin is on a side."""
    return convex_hull(list(triangle.vertices) + [-v for v in triangle.vertices])


def critical_lattice(domain: Domain, n: int = 360) -> Lattice:
    """A critical covering lattice of K built from its first critical triangle."""
    first = critical_triangles(domain, n=n)[0]
    return lattice_from_triangle(first.triangle)


def critical_lattices(domain: Domain, n: int = 360) -> list[Lattice]:
    """One critical lattice per distinct critical triangle."""
    return [lattice_from_triangle(c.triangle) for c in critical_triangles(domain, n=n)]


def covering_density(domain: Domain, lattice: Lattice) -> float:
    """area(K) / d(Λ): how many times the plane is covered on average."""
    return domain.area() / lattice.determinant


def covering_check(domain: Domain, lattice: Lattice, resolution: int = DEFAULT_RESOLUTION) -> CoveringReport:
    """Sample the fundamental cell and find points not covered by K + Λ.

    Raises:
        ValueError: If resolution < 16.
    """
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"covering check needs resolution >= {MIN_RESOLUTION}, got {resolution}")
    # sample the Lagrange-Gauss reduced cell
    cell = lattice.reduced()
    offsets = (np.arange(resolution, dtype=float) + 0.5) / resolution
    ii, jj = np.meshgrid(offsets, offsets, indexing="ij")
    coeffs = np.column_stack([ii.ravel(), jj.ravel()])
    samples = coeffs @ cell.basis.T

    center = cell.basis @ np.array([0.5, 0.5])
    reach = domain.circumradius() + cell.cell_diameter()
    candidates = cell.points_near(center, reach)

    multiplicity = np.zeros(len(samples), dtype=int)
    for lam in candidates:
        multiplicity += domain.contains(samples - lam)
    missed = np.flatnonzero(multiplicity == 0)
    uncovered = [Point(float(samples[i, 0]), float(samples[i, 1])) for i in missed]
    log_info(
        LOG_PREFIX,
        f"{len(samples)} samples, {len(candidates)} translates, {len(uncovered)} uncovered",
    )
    return CoveringReport(
        lattice=lattice,
        sampled_points=len(samples),
        uncovered=uncovered,
        density=covering_density(domain, lattice),
        samples=samples,
        multiplicity=multiplicity,
    )
