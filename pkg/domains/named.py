"""
Named domains and the ``kind:arg:arg`` shorthand.

Shorthand grammar (angles in radians):

- ``disk:R``
- ``ellipse:A:B:PHI``
- ``ngon:N:R`` (regular polygon, N even, vertex at angle 0, circumradius R)
- ``square:S`` (axis-parallel square of side S)
- ``parallelogram:UX:UY:VX:VY`` (vertices ±(u+v)/2 and ±(u-v)/2)
"""

from __future__ import annotations

import math

from geometry.primitives import Point
from utils.errors import DomainParseError, NotSymmetric

from .domain import DEFAULT_POLYGONIZE_N, Domain
from .pieces import Arc, Segment

# Number of numeric arguments per shorthand kind
SHORTHAND_ARITY = {"disk": 1, "ellipse": 3, "ngon": 2, "square": 1, "parallelogram": 4}


def ellipse(a: float, b: float, phi: float = 0.0, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Centered ellipse with semi-axes a, b rotated by φ, as two half arcs."""
    if not (a > 0.0 and b > 0.0):
        raise DomainParseError(f"ellipse semi-axes must be positive, got {a}, {b}")
    origin = Point(0.0, 0.0)
    pieces = [Arc(origin, a, b, phi, 0.0, math.pi), Arc(origin, a, b, phi, math.pi, 2.0 * math.pi)]
    return Domain(pieces, polygonize_n)


def disk(r: float = 1.0, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    return ellipse(r, r, 0.0, polygonize_n)


def polygon_domain(half_vertices: list[Point], polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Polygon from the first half of its CCW vertices; the rest are negations."""
    vertices = list(half_vertices) + [-p for p in half_vertices]
    n = len(vertices)
    pieces = [Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    return Domain(pieces, polygonize_n)


def regular_polygon(n: int, r: float = 1.0, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Regular n-gon with circumradius r and a vertex at angle 0.

    Raises:
        NotSymmetric: If n is odd.
    """
    if n % 2:
        raise NotSymmetric(f"regular {n}-gon is not centrally symmetric")
    if n < 4:
        raise DomainParseError(f"regular polygon needs n >= 4, got {n}")
    if not r > 0.0:
        raise DomainParseError(f"circumradius must be positive, got {r}")
    half = [Point.polar(r, 2.0 * math.pi * k / n) for k in range(n // 2)]
    return polygon_domain(half, polygonize_n)


def parallelogram(u: Point, v: Point, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Parallelogram with vertices ±(u+v)/2 and ±(u-v)/2."""
    det = u.cross(v)
    if abs(det) <= 1e-12:
        raise DomainParseError("parallelogram generators are linearly dependent")
    if det < 0.0:
        u, v = v, u
    return polygon_domain([(u + v).scaled(0.5), (v - u).scaled(0.5)], polygonize_n)


def square(side: float = 1.0, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    return parallelogram(Point(side, 0.0), Point(0.0, side), polygonize_n)


def make_named(kind: str, *args: float, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Build a named domain from its kind and numeric arguments.

    Raises:
        DomainParseError: On unknown kinds or wrong argument counts.
    """
    if kind not in SHORTHAND_ARITY:
        raise DomainParseError(f"unknown domain kind '{kind}'")
    if len(args) != SHORTHAND_ARITY[kind]:
        raise DomainParseError(f"'{kind}' takes {SHORTHAND_ARITY[kind]} arguments, got {len(args)}")
    if kind == "disk":
        if not args[0] > 0.0:
            raise DomainParseError(f"disk radius must be positive, got {args[0]}")
        return disk(args[0], polygonize_n)
    if kind == "ellipse":
        return ellipse(args[0], args[1], args[2], polygonize_n)
    if kind == "ngon":
        if args[0] != int(args[0]):
            raise DomainParseError(f"ngon vertex count must be an integer, got {args[0]}")
        return regular_polygon(int(args[0]), args[1], polygonize_n)
    if kind == "square":
        if not args[0] > 0.0:
            raise DomainParseError(f"square side must be positive, got {args[0]}")
        return square(args[0], polygonize_n)
    return parallelogram(Point(args[0], args[1]), Point(args[2], args[3]), polygonize_n)


def parse_shorthand(text: str, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """Parse ``kind:arg:arg`` into a Domain."""
    kind, *raw = text.strip().split(":")
    try:
        args = [float(a) for a in raw]
    except ValueError as e:
        raise DomainParseError(f"bad number in domain shorthand '{text}': {e}") from e
    return make_named(kind.lower(), *args, polygonize_n=polygonize_n)
