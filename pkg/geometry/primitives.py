"""
Planar points and triangles.

All coordinates are double precision. Triangles are canonicalized to
counter-clockwise order when they are built, so ``Triangle.area`` is
unsigned everywhere downstream. Comparisons take explicit tolerances;
``DEFAULT_ABS_TOL`` is used when callers pass none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from utils.errors import DegenerateTriangle, DomainParseError, InextensibleError

# Default absolute tolerance for geometric comparisons
DEFAULT_ABS_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Point:
    """A point (or vector) of the plane.

    Attributes:
        x: First coordinate.
        y: Second coordinate.
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InextensibleError(f"non-finite point ({self.x}, {self.y})")

    @classmethod
    def polar(cls, r: float, theta: float) -> Point:
        return cls(r * math.cos(theta), r * math.sin(theta))

    @classmethod
    def from_list(cls, data: list[float] | tuple[float, float]) -> Point:
        if len(data) != 2:
            raise DomainParseError(f"expected [x, y], got {data!r}")
        return cls(float(data[0]), float(data[1]))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scaled(self, k: float) -> Point:
        return Point(k * self.x, k * self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def is_close(self, other: Point, tol: float = DEFAULT_ABS_TOL) -> bool:
        return self.distance(other) <= tol

    def to_list(self) -> list[float]:
        return [self.x, self.y]


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def signed_area(a: Point, b: Point, c: Point) -> float:
    """Half the cross product (b - a) x (c - a); positive for CCW order."""
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def triangle_area(a: Point, b: Point, c: Point) -> float:
    """Unsigned area |cross(b - a, c - a)| / 2 of the triangle abc."""
    return abs(signed_area(a, b, c))


@dataclass(frozen=True)
class Triangle:
    """Three planar points in counter-clockwise order.

    Construction swaps ``b`` and ``c`` when the input is clockwise, so the
    first vertex is always kept in place.

    Attributes:
        a: First vertex.
        b: Second vertex.
        c: Third vertex.
    """

    a: Point
    b: Point
    c: Point

    def __post_init__(self) -> None:
        if signed_area(self.a, self.b, self.c) < 0.0:
            b, c = self.b, self.c
            object.__setattr__(self, "b", c)
            object.__setattr__(self, "c", b)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def area(self) -> float:
        return signed_area(self.a, self.b, self.c)

    def is_degenerate(self, tol: float = DEFAULT_ABS_TOL) -> bool:
        return self.area <= tol

    def require_nondegenerate(self, tol: float = DEFAULT_ABS_TOL) -> Triangle:
        """Return self, or raise DegenerateTriangle if the area is below tol."""
        if self.is_degenerate(tol):
            raise DegenerateTriangle(f"triangle area {self.area:.3e} <= {tol:.1e}")
        return self

    def negated(self) -> Triangle:
        return Triangle(-self.a, -self.b, -self.c)

    def sides(self) -> tuple[tuple[Point, Point], ...]:
        """Sides opposite a, b and c respectively."""
        return ((self.b, self.c), (self.c, self.a), (self.a, self.b))

    def origin_margin(self) -> float:
        """Smallest signed distance from the origin to the sides.

        Positive when the origin is strictly inside, zero on the boundary.
        """
        origin = Point(0.0, 0.0)
        margins = []
        for p, q in ((self.a, self.b), (self.b, self.c), (self.c, self.a)):
            length = p.distance(q)
            margins.append(2.0 * signed_area(p, q, origin) / length if length else 0.0)
        return min(margins)

    def same_vertex_set(self, other: Triangle, tol: float = 1e-6) -> bool:
        """True when every vertex of one triangle is within tol of a vertex of the other."""
        return all(
            any(v.is_close(w, tol) for w in other.vertices) for v in self.vertices
        ) and all(any(w.is_close(v, tol) for v in self.vertices) for w in other.vertices)

    def to_dict(self) -> dict[str, Any]:
        return {"vertices": [v.to_list() for v in self.vertices], "area": self.area}
