"""
The Domain model: an origin-symmetric convex region bounded by a closed
counter-clockwise chain of segments and elliptic arcs.

Construction validates, in order:

1. ``NotClosed``: every piece ends where the next one starts
2. ``NotSymmetric``: piece ``i + n/2`` is the negation of piece ``i``
3. ``NotConvex``: the cached polygonization turns left everywhere
4. ``OriginNotInterior``: the origin is strictly inside

Each error names the offending piece. Support heights and chords are
computed from the exact pieces; the cached polygon (2N vertices, closed
under negation) only serves convexity checks, Hausdorff distances and
vertex-based oracles.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from geometry.polygon import ConvexPolygon, reflex_vertices
from geometry.primitives import DEFAULT_ABS_TOL, Point, midpoint
from utils.errors import (
    NotClosed,
    NotConvex,
    NotSymmetric,
    OriginNotInterior,
    OutOfSlab,
)
from utils.numerics import TWO_PI, unit, wrap_angle

from .pieces import CONTACT_ANGLE_TOL, Arc, BoundaryPiece, Segment

# Default half vertex count of the cached polygonization
DEFAULT_POLYGONIZE_N = 4096

# Smallest accepted polygonization parameter
MIN_POLYGONIZE_N = 8

# Consecutive pieces must meet within this distance
CLOSURE_TOL = 1e-9

# Smallest distance from the origin to the boundary
ORIGIN_MARGIN = 1e-9

# Slack toward inclusion for point-in-domain tests
CONTAINS_SLACK = 1e-12

# Directions sampled to bound the circumradius of curved domains
CIRCUMRADIUS_SAMPLES = 720


@dataclass(frozen=True)
class SupportResult:
    """Support height h(θ) and the contact set L(θ) ∩ ∂K.

    Attributes:
        theta: Direction angle.
        h: Support height.
        contact: A single point, or the boundary segment lying on L(θ).
    """

    theta: float
    h: float
    contact: Point | Segment

    @property
    def is_segment(self) -> bool:
        return isinstance(self.contact, Segment)

    @property
    def apex(self) -> Point:
        """The contact point, or the midpoint of a contact segment."""
        if isinstance(self.contact, Segment):
            return midpoint(self.contact.start, self.contact.end)
        return self.contact

    def to_dict(self) -> dict[str, Any]:
        contact: Any
        if isinstance(self.contact, Segment):
            contact = {"from": self.contact.start.to_list(), "to": self.contact.end.to_list()}
        else:
            contact = self.contact.to_list()
        return {"theta_rad": self.theta, "h": self.h, "contact": contact}


@dataclass(frozen=True)
class Chord:
    """K ∩ {⟨p, u_θ⟩ = t}.

    ``endpoints[0]`` is the end with the larger coordinate along
    v = (-sin θ, cos θ), so (apex, endpoints[0], endpoints[1]) runs CCW.
    """

    theta: float
    t: float
    endpoints: tuple[Point, Point]
    width: float


class Domain:
    """A validated origin-symmetric convex domain.

    Attributes:
        pieces: Boundary pieces in CCW order.
        polygonize_n: Half vertex count of the cached polygon.
        closure_tol: Accepted gap between consecutive pieces.
        polygon: Cached polygonization with ``2 * polygonize_n`` vertices.
    """

    def __init__(
        self,
        pieces: Sequence[BoundaryPiece],
        polygonize_n: int = DEFAULT_POLYGONIZE_N,
        closure_tol: float = CLOSURE_TOL,
    ):
        if polygonize_n < MIN_POLYGONIZE_N:
            raise ValueError(f"polygonize_n must be >= {MIN_POLYGONIZE_N}, got {polygonize_n}")
        self.pieces: tuple[BoundaryPiece, ...] = tuple(pieces)
        self.polygonize_n = polygonize_n
        self.closure_tol = closure_tol
        self._line_tol = max(closure_tol, DEFAULT_ABS_TOL)
        self._polygons: dict[int, ConvexPolygon] = {}

        self._check_closed()
        self._check_symmetric()
        coords, owners = self._sample_boundary(polygonize_n)
        self._check_convex(coords, owners)
        self._check_origin(coords, owners)
        self.polygon = ConvexPolygon(coords, check=False)
        self._polygons[polygonize_n] = self.polygon

    # -------------------------------------------------------------------------
    # Validation
    # -------------------------------------------------------------------------

    def _check_closed(self) -> None:
        if len(self.pieces) < 2:
            raise NotClosed("a closed symmetric boundary needs at least two pieces")
        for i, piece in enumerate(self.pieces):
            following = self.pieces[(i + 1) % len(self.pieces)]
            gap = piece.end_point.distance(following.start_point)
            if gap > self.closure_tol:
                raise NotClosed(f"gap of {gap:.3e} to the next piece", piece_index=i)

    def _check_symmetric(self) -> None:
        n = len(self.pieces)
        if n % 2:
            raise NotSymmetric(f"odd number of pieces ({n})", piece_index=n - 1)
        half = n // 2
        tol = 10.0 * self._line_tol
        for i in range(half):
            piece, partner = self.pieces[i], self.pieces[i + half]
            if type(piece) is not type(partner):
                raise NotSymmetric("partner piece has a different kind", piece_index=i + half)
            checks = zip(_check_points(piece), _check_points(partner), strict=True)
            if any(not (-p).is_close(q, tol) for p, q in checks):
                raise NotSymmetric(f"piece is not the negation of piece {i}", piece_index=i + half)

    def _check_convex(self, coords: np.ndarray, owners: np.ndarray) -> None:
        bad = reflex_vertices(coords)
        if bad.size:
            raise NotConvex("boundary turns clockwise", piece_index=int(owners[bad[0]]))
        x, y = coords[:, 0], coords[:, 1]
        if np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)) <= 0.0:
            raise NotConvex("boundary is not counter-clockwise")

    def _check_origin(self, coords: np.ndarray, owners: np.ndarray) -> None:
        edges = np.roll(coords, -1, axis=0) - coords
        lengths = np.hypot(edges[:, 0], edges[:, 1])
        # signed distance of the origin to each edge line, positive on the left
        margins = (edges[:, 0] * -coords[:, 1] - edges[:, 1] * -coords[:, 0]) / lengths
        worst = int(np.argmin(margins))
        if margins[worst] <= ORIGIN_MARGIN:
            raise OriginNotInterior(
                f"origin is {margins[worst]:.3e} from the boundary", piece_index=int(owners[worst])
            )

    # -------------------------------------------------------------------------
    # Polygonization
    # -------------------------------------------------------------------------

    def _sample_boundary(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        """Sample the first half of the boundary and append its negation.

        Pieces get vertices in proportion to the polar angle they subtend and
        always keep their start point. Where consecutive pieces leave a gap
        below ``closure_tol``, the junction vertex is the gap's midpoint.
        """
        half = len(self.pieces) // 2
        first = self.pieces[:half]
        counts = _allocate(n, [_subtended_angle(p) for p in first])
        chunks, owners = [], []
        for i, (piece, k) in enumerate(zip(first, counts, strict=True)):
            pts = piece.sample(k)
            previous = self.pieces[i - 1]
            junction = midpoint(previous.end_point, piece.start_point)
            pts[0] = (junction.x, junction.y)
            chunks.append(pts)
            owners.extend([i] * k)
        half_coords = np.vstack(chunks)
        owner_arr = np.array(owners, dtype=int)
        return np.vstack([half_coords, -half_coords]), np.concatenate([owner_arr, owner_arr + half])

    def polygonize(self, n: int) -> ConvexPolygon:
        """Convex polygon with 2n vertices on ∂K, closed under negation.

        Piece endpoints are always vertices, so corners are kept exactly.
        Boundaries with more than ``n`` pieces per half keep all endpoints.

        Raises:
            ValueError: If n < 8.
        """
        if n < MIN_POLYGONIZE_N:
            raise ValueError(f"polygonize needs n >= {MIN_POLYGONIZE_N}, got {n}")
        if n not in self._polygons:
            coords, _ = self._sample_boundary(n)
            self._polygons[n] = ConvexPolygon(coords, check=False)
        return self._polygons[n]

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    @property
    def is_polygon(self) -> bool:
        return all(isinstance(p, Segment) for p in self.pieces)

    @property
    def vertices(self) -> np.ndarray:
        """Piece start points, (n, 2)."""
        return np.array([[p.start_point.x, p.start_point.y] for p in self.pieces])

    def support(self, theta: float) -> SupportResult:
        """h(θ) = max ⟨p, u_θ⟩ over ∂K, with its contact set.

        The contact is a Segment exactly when a boundary segment's outward
        normal is within ``CONTACT_ANGLE_TOL`` radians of θ.
        """
        u = unit(theta)
        best_h, best_p = -math.inf, None
        for piece in self.pieces:
            h, p = piece.support(u)
            if h > best_h:
                best_h, best_p = h, p
        target = wrap_angle(theta)
        for piece in self.pieces:
            if isinstance(piece, Segment) and _angle_gap(piece.normal_angle(), target) <= CONTACT_ANGLE_TOL:
                return SupportResult(theta, best_h, piece)
        assert best_p is not None
        return SupportResult(theta, best_h, best_p)

    def support_height(self, theta: float) -> float:
        u = unit(theta)
        return max(piece.support(u)[0] for piece in self.pieces)

    def chord(self, theta: float, t: float, h: float | None = None) -> Chord:
        """K ∩ {⟨p, u_θ⟩ = t} as a segment between two boundary points.

        ``h`` may carry an already computed support height h(θ).

        Raises:
            OutOfSlab: If t lies outside [-h(θ), h(θ)].
        """
        if h is None:
            h = self.support_height(theta)
        if abs(t) > h + self._line_tol:
            raise OutOfSlab(f"t = {t:.6g} outside [-{h:.6g}, {h:.6g}] at theta = {theta:.6g}")
        t = min(max(t, -h), h)
        u = unit(theta)
        hits: list[Point] = []
        for piece in self.pieces:
            hits.extend(piece.intersect_line(u, t, self._line_tol))
        if not hits:
            contact = self.support(theta if t >= 0.0 else theta + math.pi)
            hits = [contact.apex]
        v = (-u[1], u[0])
        proj = [p.x * v[0] + p.y * v[1] for p in hits]
        hi = hits[int(np.argmax(proj))]
        lo = hits[int(np.argmin(proj))]
        return Chord(theta, t, (hi, lo), max(proj) - min(proj))

    def area(self) -> float:
        """Exact area: shoelace terms for segments, sector terms for arcs."""
        total = 0.0
        for piece in self.pieces:
            a, b = piece.start_point, piece.end_point
            total += a.cross(b)
            if isinstance(piece, Arc):
                # ∮ p × dp over the arc minus the straight chord term
                total += piece.rx * piece.ry * piece.span - a.cross(b) + piece.center.cross(b - a)
        return 0.5 * total

    def contains(self, points: np.ndarray | Point, slack: float = CONTAINS_SLACK) -> Any:
        """Point-in-domain test, boundary counted as inside.

        Segments contribute half-planes; an arc accepts points left of its
        chord or inside its ellipse. Returns a bool for a single Point and a
        boolean array for an (m, 2) array.
        """
        single = isinstance(points, Point)
        pts = np.array([[points.x, points.y]]) if isinstance(points, Point) else np.atleast_2d(
            np.asarray(points, dtype=float)
        )
        inside = np.ones(len(pts), dtype=bool)
        for piece in self.pieces:
            if isinstance(piece, Segment):
                a, b = piece.start, piece.end
                ex, ey = b.x - a.x, b.y - a.y
                cross = ex * (pts[:, 1] - a.y) - ey * (pts[:, 0] - a.x)
                inside &= cross >= -slack * math.hypot(ex, ey)
            else:
                inside &= piece.contains_side(pts, slack)
        return bool(inside[0]) if single else inside

    def circumradius(self) -> float:
        """Upper bound on max |p| over K (exact for polygons)."""
        if self.is_polygon:
            return float(np.max(np.hypot(*self.vertices.T)))
        step = TWO_PI / CIRCUMRADIUS_SAMPLES
        h = max(self.support_height(i * step) for i in range(CIRCUMRADIUS_SAMPLES))
        return h / math.cos(step / 2.0)

    def normal_cone(self, p: Point) -> tuple[float, float]:
        """Outward normal angles (lo, hi) at a boundary point, hi >= lo.

        Smooth points and segment interiors give lo == hi; junctions give the
        interval swept from the incoming piece's normal to the outgoing one's.
        """
        tol = 10.0 * self._line_tol
        n = len(self.pieces)
        for i, piece in enumerate(self.pieces):
            if piece.start_point.is_close(p, tol):
                lo = _end_normal(self.pieces[(i - 1) % n])
                turn = wrap_angle(_start_normal(piece) - lo)
                if turn > TWO_PI - CONTACT_ANGLE_TOL:
                    turn = 0.0
                return lo, lo + turn
        index, phi = _locate(self.pieces, p)
        piece = self.pieces[index]
        angle = piece.normal_angle() if isinstance(piece, Segment) else piece.normal_angle_at(phi)
        return angle, angle

    def radial_point(self, phi: float) -> Point:
        """The boundary point in direction φ from the origin."""
        return self.chord(phi - math.pi / 2.0, 0.0).endpoints[0]

    def transformed(self, m: np.ndarray | list[list[float]]) -> Domain:
        """Image M·K under a non-singular linear map."""
        matrix = np.asarray(m, dtype=float)
        det = float(np.linalg.det(matrix))
        if abs(det) <= 1e-12:
            raise ValueError(f"linear map is singular (det = {det:.3e})")
        pieces = [piece.transformed(matrix) for piece in self.pieces]
        if det < 0.0:
            pieces.reverse()
        # reversing keeps the i / i + n/2 pairing
        return Domain(pieces, self.polygonize_n, self.closure_tol)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "pieces": [p.to_dict() for p in self.pieces],
            "polygonize_n": self.polygonize_n,
        }
        if self.closure_tol != CLOSURE_TOL:
            data["closure_tol"] = self.closure_tol
        return data


def construct_domain(
    pieces: Sequence[BoundaryPiece],
    polygonize_n: int = DEFAULT_POLYGONIZE_N,
    closure_tol: float = CLOSURE_TOL,
) -> Domain:
    """Validate a boundary piece list and build a Domain.

    Raises:
        NotClosed, NotSymmetric, NotConvex, OriginNotInterior: naming the
            offending piece index.
    """
    return Domain(pieces, polygonize_n=polygonize_n, closure_tol=closure_tol)


def support(domain: Domain, theta: float) -> SupportResult:
    return domain.support(theta)


def chord(domain: Domain, theta: float, t: float) -> Chord:
    return domain.chord(theta, t)


def area(domain: Domain) -> float:
    return domain.area()


def polygonize(domain: Domain, n: int) -> ConvexPolygon:
    return domain.polygonize(n)


def domain_contains(outer: Domain, inner: Domain, slack: float = 1e-9) -> bool:
    """True when every vertex of ``inner``'s polygonization lies in ``outer``."""
    return bool(np.all(outer.contains(inner.polygon.coords, slack=slack)))


# -----------------------------------------------------------------------------
# Helpers
# -----------------------------------------------------------------------------


def _check_points(piece: BoundaryPiece) -> tuple[Point, Point, Point]:
    if isinstance(piece, Segment):
        return piece.start, piece.point_at(0.5), piece.end
    mid = piece.point_at_angle(piece.start_angle + 0.5 * piece.span)
    return piece.start_point, mid, piece.end_point


def _subtended_angle(piece: BoundaryPiece) -> float:
    return wrap_angle(piece.end_point.angle() - piece.start_point.angle())


def _allocate(n: int, weights: list[float]) -> list[int]:
    """Split n vertices over pieces, at least one each, largest remainder."""
    m = len(weights)
    if n <= m:
        return [1] * m
    extra = n - m
    total = sum(weights)
    if total <= 0.0:
        weights, total = [1.0] * m, float(m)
    quotas = [extra * w / total for w in weights]
    counts = [math.floor(q) for q in quotas]
    order = sorted(range(m), key=lambda i: counts[i] - quotas[i])
    for i in order[: extra - sum(counts)]:
        counts[i] += 1
    return [1 + c for c in counts]


def _angle_gap(a: float, b: float) -> float:
    d = wrap_angle(a - b)
    return min(d, TWO_PI - d)


def _start_normal(piece: BoundaryPiece) -> float:
    if isinstance(piece, Segment):
        return piece.normal_angle()
    return piece.normal_angle_at(piece.start_angle)


def _end_normal(piece: BoundaryPiece) -> float:
    if isinstance(piece, Segment):
        return piece.normal_angle()
    return piece.normal_angle_at(piece.end_angle)


def _locate(pieces: Sequence[BoundaryPiece], p: Point) -> tuple[int, float]:
    """Index of the piece nearest to p and, for arcs, p's parameter angle."""
    best = (math.inf, 0, 0.0)
    for i, piece in enumerate(pieces):
        if isinstance(piece, Segment):
            d = np.array(piece.tangent_at_start())
            rel = np.array([p.x - piece.start.x, p.y - piece.start.y])
            s = min(max(float(rel @ d) / float(d @ d), 0.0), 1.0)
            dist = p.distance(piece.point_at(s))
            phi = 0.0
        else:
            local = np.linalg.solve(piece.frame, [p.x - piece.center.x, p.y - piece.center.y])
            raw = math.atan2(local[1], local[0])
            offset = wrap_angle(raw - piece.start_angle)
            if offset > piece.span:
                # nearest end of the arc
                offset = piece.span if offset - piece.span < TWO_PI - offset else 0.0
            phi = piece.start_angle + offset
            dist = p.distance(piece.point_at_angle(phi))
        if dist < best[0]:
            best = (dist, i, phi)
    return best[1], best[2]
