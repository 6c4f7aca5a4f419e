"""
Inextensibility: the verdict, the interspersion of anchor angles, the
circle of critical triangles and extension witnesses.

A domain is inextensible exactly when A(θ) is constant. Numerically the
verdict compares the relative spread (A_max - A_min) / A_max of a refined
profile against a tolerance.

When A is not constant, the support line at an angle θ₀ with A(θ₀) < A_max
can be pushed outward a little without creating a larger anchored
triangle: ``extension_witness`` builds that superdomain as
conv(K ∪ {p, -p}) and reports how much Δ changed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from domains.domain import Domain
from domains.pieces import Arc, BoundaryPiece, Segment
from geometry.polygon import convex_hull
from geometry.primitives import Point
from utils.errors import InvalidTriple, NotApplicable, NotExtensible, NotSymmetric
from utils.log import log_info
from utils.numerics import TWO_PI, golden_section_max, wrap_angle

from .anchored import (
    DEFAULT_PROFILE_N,
    anchor_angles,
    anchored_area,
    area_profile,
    critical_determinant,
    critical_triangles,
    max_anchored_area,
)

LOG_PREFIX = "inextensibility"

# Default relative A-spread accepted as constant
DEFAULT_VERDICT_TOL = 1e-6

# Smallest profile grid for a verdict
MIN_VERDICT_N = 360

# Angle tolerance for interspersion inequalities
INTERSPERSION_TOL = 1e-8

# Default boundary samples for the circle-of-triangles check
DEFAULT_CIRCLE_SAMPLES = 360

# Relative tolerance for a boundary point to be a critical-triangle vertex
CIRCLE_TOL = 1e-6

# Directions tried inside the normal cone of a corner
CONE_SAMPLES = 16

# A segment is visible from p when p clears its line by more than this
VISIBLE_TOL = 1e-12

# Kept arc pieces shorter than this (in arc length bound) are dropped
FRAGMENT_TOL = 1e-9


@dataclass
class InextensibilityVerdict:
    """Numerical answer to "is A(θ) constant?".

    Attributes:
        inextensible: relative_spread <= tolerance.
        a_max: Refined maximum of A.
        a_min: Refined minimum of A.
        relative_spread: (a_max - a_min) / a_max.
        tolerance: The tolerance that was applied.
        witness_theta: Angle of the minimum, set only for extensible domains.
    """

    inextensible: bool
    a_max: float
    a_min: float
    relative_spread: float
    tolerance: float
    witness_theta: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "inextensible": self.inextensible,
            "a_max": self.a_max,
            "a_min": self.a_min,
            "relative_spread": self.relative_spread,
            "tolerance": self.tolerance,
            "witness_theta_rad": self.witness_theta,
        }


@dataclass
class ExtensionWitness:
    """A strictly larger domain with (almost) the same critical determinant.

    Attributes:
        point: The pushed-out boundary point p (-p is added too).
        superdomain: conv(K ∪ {p, -p}) as a Domain.
        delta_change: Δ(K') - Δ(K).
        area_change: area(K') - area(K).
    """

    point: Point
    superdomain: Domain
    delta_change: float
    area_change: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "point": self.point.to_list(),
            "delta_change": self.delta_change,
            "area_change": self.area_change,
        }


def inextensibility_verdict(
    domain: Domain,
    n: int = MIN_VERDICT_N,
    tol: float = DEFAULT_VERDICT_TOL,
) -> InextensibilityVerdict:
    """Decide whether A(θ) is constant to within ``tol`` (relative).

    Raises:
        ValueError: If n < 360.
    """
    if n < MIN_VERDICT_N:
        raise ValueError(f"verdict needs n >= {MIN_VERDICT_N}, got {n}")
    profile = area_profile(domain, n)
    a_max = profile.a_max
    if domain.is_polygon:
        a_max = max(a_max, max_anchored_area(domain))
    spread = (a_max - profile.a_min) / a_max
    inextensible = spread <= tol
    log_info(LOG_PREFIX, f"spread {spread:.3e} (tol {tol:.1e}): {'in' if inextensible else ''}extensible")
    return InextensibilityVerdict(
        inextensible=inextensible,
        a_max=a_max,
        a_min=profile.a_min,
        relative_spread=spread,
        tolerance=tol,
        witness_theta=None if inextensible else profile.argmin,
    )


# =============================================================================
# Interspersion
# =============================================================================


def _validate_triple(triple: tuple[float, float, float] | list[float], name: str) -> tuple[float, float, float]:
    if len(triple) != 3:
        raise InvalidTriple(f"{name} must have three angles, got {len(triple)}")
    a, b, c = (float(x) for x in triple)
    if not (a < b < c):
        raise InvalidTriple(f"{name} is not strictly increasing: {a}, {b}, {c}")
    if c - a >= TWO_PI:
        raise InvalidTriple(f"{name} spans {c - a:.6g} rad, not inside a 2π window")
    return a, b, c


def interspersion_check(
    angles_a: tuple[float, float, float] | list[float],
    angles_b: tuple[float, float, float] | list[float],
    tol: float = INTERSPERSION_TOL,
) -> bool:
    """True when some even shift k gives

        θ₁ <= θ'_{k+1} <= θ₃ <= θ'_{k+3} <= θ₅ <= θ'_{k+5} <= θ₁ + 2π

    where θ' runs over the second triple extended 2π-periodically.

    Raises:
        InvalidTriple: If a triple is not strictly increasing within 2π.
    """
    a1, a3, a5 = _validate_triple(angles_a, "first triple")
    b = _validate_triple(angles_b, "second triple")
    shift = TWO_PI * math.floor((b[0] - a1) / TWO_PI)
    b = (b[0] - shift, b[1] - shift, b[2] - shift)

    def lifted(m: int) -> float:
        return b[m % 3] + TWO_PI * (m // 3)

    for m in range(-3, 4):
        chain = (a1, lifted(m), a3, lifted(m + 1), a5, lifted(m + 2), a1 + TWO_PI)
        if all(chain[i] <= chain[i + 1] + tol for i in range(6)):
            return True
    return False


def all_pairs_interspersed(domain: Domain, n: int = DEFAULT_PROFILE_N) -> bool:
    """Interspersion for every pair of distinct critical triangles.

    Each pair (T, T') is checked against both T' and -T'.

    Raises:
        NotApplicable: If K has fewer than two critical triangles up to sign.
    """
    crit = critical_triangles(domain, n=n)
    if len(crit) < 2:
        raise NotApplicable(f"need two distinct critical triangles, found {len(crit)}")
    for first, second in itertools.combinations(crit, 2):
        flipped = anchor_angles(second.triangle.negated())
        if not (
            interspersion_check(first.anchor_angles, second.anchor_angles)
            and interspersion_check(first.anchor_angles, flipped)
        ):
            return False
    return True


# =============================================================================
# Circle of critical triangles
# =============================================================================


def _max_area_in_cone(domain: Domain, lo: float, hi: float) -> float:
    if hi - lo <= 0.0:
        return anchored_area(domain, lo)
    grid = np.linspace(lo, hi, CONE_SAMPLES + 1)
    values = [anchored_area(domain, float(t)) for t in grid]
    best = int(np.argmax(values))
    step = (hi - lo) / CONE_SAMPLES
    left, right = max(lo, grid[best] - step), min(hi, grid[best] + step)
    _, refined = golden_section_max(lambda t: anchored_area(domain, t), left, right, tol=1e-10)
    return max(values[best], refined)


def circle_of_triangles_check(
    domain: Domain,
    m: int = DEFAULT_CIRCLE_SAMPLES,
    tol: float = CIRCLE_TOL,
) -> bool:
    """True when every sampled boundary point is a vertex of a critical triangle.

    A boundary point p lies on L(θ) exactly for θ in its normal cone, and it
    is then the apex of the anchored triangle at θ (for contact segments,
    any point of the segment serves as apex). So p is a critical vertex iff
    max A over its normal cone reaches A_max.
    """
    if m < 36:
        raise ValueError(f"circle check needs m >= 36 boundary points, got {m}")
    a_max = max_anchored_area(domain)
    for j in range(m):
        p = domain.radial_point(TWO_PI * j / m)
        lo, hi = domain.normal_cone(p)
        if _max_area_in_cone(domain, lo, hi) < a_max * (1.0 - tol):
            log_info(LOG_PREFIX, f"boundary point {p.to_list()} is on no critical triangle")
            return False
    return True


# =============================================================================
# Extension witnesses
# =============================================================================


def _visible_params(arc: Arc, point: Point) -> list[tuple[float, float]]:
    """Parameter intervals of ``arc`` seen from ``point`` across the tangent line.

    In the ellipse's unit-circle frame p' = F⁻¹(p - c), the point at φ is
    visible iff ⟨p', (cos φ, sin φ)⟩ > 1, an open interval of half-width
    acos(1/|p'|) around the direction of p'.
    """
    local = np.linalg.solve(arc.frame, [point.x - arc.center.x, point.y - arc.center.y])
    r = math.hypot(local[0], local[1])
    if r <= 1.0:
        return []
    half = math.acos(1.0 / r)
    lo = arc.start_angle + wrap_angle(math.atan2(local[1], local[0]) - half - arc.start_angle)
    intervals = []
    for first in (lo - TWO_PI, lo):
        a, b = max(first, arc.start_angle), min(first + 2.0 * half, arc.end_angle)
        if b > a:
            intervals.append((a, b))
    return intervals


def _sub_arc(arc: Arc, lo: float, hi: float) -> list[BoundaryPiece]:
    if (hi - lo) * max(arc.rx, arc.ry) <= FRAGMENT_TOL:
        return []
    return [Arc(arc.center, arc.rx, arc.ry, arc.rotation, lo, hi)]


def _split_piece(piece: BoundaryPiece, points: tuple[Point, Point]) -> list[BoundaryPiece | Point]:
    """The invisible parts of ``piece`` in order, with each bump point in place of what it hides."""
    if isinstance(piece, Segment):
        dx, dy = piece.end.x - piece.start.x, piece.end.y - piece.start.y
        length = math.hypot(dx, dy)
        for p in points:
            # outward normal of a CCW edge is (dy, -dx)
            if ((p.x - piece.start.x) * dy - (p.y - piece.start.y) * dx) / length > VISIBLE_TOL:
                return [p]
        return [piece]
    hidden = sorted((a, b, i) for i, p in enumerate(points) for a, b in _visible_params(piece, p))
    tokens: list[BoundaryPiece | Point] = []
    cursor = piece.start_angle
    for a, b, i in hidden:
        if a > cursor:
            tokens.extend(_sub_arc(piece, cursor, a))
        tokens.append(points[i])
        cursor = max(cursor, b)
    tokens.extend(_sub_arc(piece, cursor, piece.end_angle))
    return tokens


def _bumped_pieces(domain: Domain, point: Point) -> list[BoundaryPiece]:
    """Boundary of conv(K ∪ {p, -p}) from K's own pieces plus tangent segments."""
    half = len(domain.pieces) // 2
    bumps = (point, -point)
    first = [tok for piece in domain.pieces[:half] for tok in _split_piece(piece, bumps)]
    tokens = first + [-tok if isinstance(tok, Point) else tok.negated() for tok in first]
    if not any(isinstance(tok, Point) for tok in tokens):
        raise ValueError(f"point {point.to_list()} lies inside the domain")
    # start on a kept piece so no run of hidden pieces wraps around
    start = next(i for i, tok in enumerate(tokens) if not isinstance(tok, Point))
    tokens = tokens[start:] + tokens[:start]
    compact: list[BoundaryPiece | Point] = []
    for tok in tokens:
        if isinstance(tok, Point) and isinstance(compact[-1], Point):
            if not tok.is_close(compact[-1]):
                raise ValueError("the parts of the boundary visible from p and -p meet; use a smaller bump")
            continue
        compact.append(tok)
    pieces: list[BoundaryPiece] = []
    for i, tok in enumerate(compact):
        if isinstance(tok, Point):
            before, after = compact[i - 1], compact[(i + 1) % len(compact)]
            pieces.append(Segment(before.end_point, tok))
            pieces.append(Segment(tok, after.start_point))
        else:
            pieces.append(tok)
    return pieces


def hull_superdomain(domain: Domain, point: Point) -> Domain:
    """conv(K ∪ {p, -p}) as a Domain.

    Polygons are hulled vertex-wise. Curved domains keep their exact pieces:
    the boundary seen from p (and -p) is cut out and replaced by the two
    tangent segments through the point, so K ⊆ K'.

    Raises:
        ValueError: If p is inside K, or the bumps at p and -p overlap on a
            curved domain.
    """
    if not domain.is_polygon:
        return Domain(_bumped_pieces(domain, point), domain.polygonize_n, domain.closure_tol)
    pts = np.vstack([domain.vertices, [[point.x, point.y], [-point.x, -point.y]]])
    hull = convex_hull(pts)
    if not hull.is_symmetric():
        raise NotSymmetric("hull of the domain and ±p is not centrally symmetric")
    # a CCW listing of a symmetric hull pairs vertex i with vertex i + n/2
    verts = hull.vertices
    pieces = [Segment(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]
    return Domain(pieces, domain.polygonize_n)


def extension_witness(
    domain: Domain,
    eps: float,
    n: int = MIN_VERDICT_N,
    tol: float = DEFAULT_VERDICT_TOL,
) -> ExtensionWitness:
    """Push the support line at the angle of minimal A outward by ``eps``.

    Returns K' = conv(K ∪ {p, -p}) with p = (contact of L(θ₀)) + eps·u_θ₀.
    For small eps no anchored triangle of K' exceeds A_max, so Δ(K') = Δ(K)
    while area(K') > area(K).

    Raises:
        NotExtensible: If K is inextensible.
        ValueError: If eps <= 0.
    """
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    verdict = inextensibility_verdict(domain, n, tol)
    if verdict.inextensible or verdict.witness_theta is None:
        raise NotExtensible(f"A(θ) is constant to {verdict.relative_spread:.3e}; no witness exists")
    theta = verdict.witness_theta
    apex = domain.support(theta).apex
    point = Point(apex.x + eps * math.cos(theta), apex.y + eps * math.sin(theta))
    bigger = hull_superdomain(domain, point)
    delta_change = critical_determinant(bigger, n) - critical_determinant(domain, n)
    log_info(LOG_PREFIX, f"witness at theta={theta:.10g}, eps={eps}: delta change {delta_change:.3e}")
    return ExtensionWitness(point, bigger, delta_change, bigger.area() - domain.area())
