"""
Convex polygons: the discretization carrier for curved domains.

``ConvexPolygon`` stores its vertices counter-clockwise and rejects inputs
with a reflex turn (beyond a relative tolerance), repeated vertices or no
vertices at all. Hausdorff distances between convex polygons only need the
vertices: the distance to a convex set is a convex function, so its
maximum over a polygon is attained at a vertex.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from utils.errors import EmptyPolygon, NotConvex

from .primitives import Point

# Relative tolerance for the convexity check (cross product vs edge lengths)
CONVEXITY_TOL = 1e-9

# Vertices closer than this are treated as repeated
DUPLICATE_TOL = 1e-12


class ConvexPolygon:
    """A convex polygon with counter-clockwise vertices.

    Attributes:
        coords: (n, 2) array of vertex coordinates.
    """

    def __init__(self, vertices: Iterable[Point] | np.ndarray, check: bool = True):
        coords = np.asarray(
            [[p.x, p.y] for p in vertices] if not isinstance(vertices, np.ndarray) else vertices,
            dtype=float,
        )
        if coords.size == 0:
            raise EmptyPolygon("polygon has no vertices")
        self.coords = coords.reshape(-1, 2)
        if check:
            self._validate()

    def _validate(self) -> None:
        if len(self.coords) < 3:
            return
        bad = reflex_vertices(self.coords)
        if bad.size:
            raise NotConvex("reflex turn or repeated vertex", piece_index=int(bad[0]))
        if self.signed_area() <= 0.0:
            raise NotConvex("vertices are not counter-clockwise")

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def vertices(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.coords]

    def signed_area(self) -> float:
        x, y = self.coords[:, 0], self.coords[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    def area(self) -> float:
        return abs(self.signed_area())

    def support(self, theta: float) -> float:
        """Support height max <p, u_θ> over the vertices."""
        return float(np.max(self.coords @ np.array([np.cos(theta), np.sin(theta)])))

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        """True when the vertex set is closed under negation."""
        for p in self.coords:
            if np.min(np.hypot(*(self.coords + p).T)) > tol:
                return False
        return True

    def contains(self, points: np.ndarray, slack: float = 1e-12) -> np.ndarray:
        """Vectorized point-in-polygon test, boundary counted as inside.

        Args:
            points: (m, 2) array of query points.
            slack: Tolerance toward inclusion.

        Returns:
            Boolean array of length m.
        """
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        inside = np.ones(len(pts), dtype=bool)
        starts = self.coords
        ends = np.roll(self.coords, -1, axis=0)
        for (x0, y0), (x1, y1) in zip(starts, ends, strict=True):
            cross = (x1 - x0) * (pts[:, 1] - y0) - (y1 - y0) * (pts[:, 0] - x0)
            inside &= cross >= -slack * np.hypot(x1 - x0, y1 - y0)
        return inside

    def distances(self, points: np.ndarray) -> np.ndarray:
        """Euclidean distance from each point to the polygon (0 inside)."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if len(self.coords) == 1:
            return np.hypot(*(pts - self.coords[0]).T)
        best = np.full(len(pts), np.inf)
        starts = self.coords
        ends = np.roll(self.coords, -1, axis=0)
        for p0, p1 in zip(starts, ends, strict=True):
            d = p1 - p0
            denom = float(d @ d)
            if denom == 0.0:
                s = np.zeros(len(pts))
            else:
                s = np.clip(((pts - p0) @ d) / denom, 0.0, 1.0)
            proj = p0 + s[:, None] * d
            best = np.minimum(best, np.hypot(*(pts - proj).T))
        if len(self.coords) >= 3:
            best[self.contains(pts, slack=0.0)] = 0.0
        return best

    def scaled(self, k: float) -> ConvexPolygon:
        return ConvexPolygon(self.coords * k, check=False)

    def to_list(self) -> list[list[float]]:
        return self.coords.tolist()


def convex_hull(points: Sequence[Point] | np.ndarray) -> ConvexPolygon:
    """Monotone-chain convex hull, CCW, collinear points dropped.

    Raises:
        EmptyPolygon: If no points are given.
    """
    arr = np.asarray(
        [[p.x, p.y] for p in points] if not isinstance(points, np.ndarray) else points,
        dtype=float,
    ).reshape(-1, 2)
    if arr.size == 0:
        raise EmptyPolygon("cannot take the hull of no points")
    pts = sorted({(float(x), float(y)) for x, y in arr})
    if len(pts) <= 2:
        return ConvexPolygon(np.array(pts), check=False)

    def turn(o: tuple[float, float], a: tuple[float, float], b: tuple[float, float]) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) > 1 and turn(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) > 1 and turn(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return ConvexPolygon(np.array(lower[:-1] + upper[:-1]), check=False)


def hausdorff_distance(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Hausdorff distance min{ε : P ⊆ Q + εD, Q ⊆ P + εD} of convex polygons.

    Polygonized curved domains inherit an O(1/N²) discretization error.

    Raises:
        EmptyPolygon: If either polygon has no vertices.
    """
    if len(p) == 0 or len(q) == 0:
        raise EmptyPolygon("hausdorff distance of an empty polygon")
    return float(max(np.max(q.distances(p.coords)), np.max(p.distances(q.coords))))


def reflex_vertices(coords: np.ndarray, tol: float = CONVEXITY_TOL) -> np.ndarray:
    """Indices of vertices where a closed CCW vertex loop turns clockwise.

    Repeated vertices are reported too, at the start of the zero-length edge.
    The turn at vertex i is the cross product of its incoming and outgoing
    edges, compared against ``tol`` times the product of their lengths.
    """
    edges = np.roll(coords, -1, axis=0) - coords
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    incoming = np.roll(edges, 1, axis=0)
    in_lengths = np.roll(lengths, 1)
    cross = incoming[:, 0] * edges[:, 1] - incoming[:, 1] * edges[:, 0]
    bad = (cross < -tol * in_lengths * lengths) | (lengths <= DUPLICATE_TOL)
    return np.flatnonzero(bad)
