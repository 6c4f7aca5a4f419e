"""
Anchored triangles and the area profile A(θ).

The triangle anchored at the support line L(θ) has its apex on L(θ) and
its base on the chord ⟨p, u_θ⟩ = t. Its area is

    f(t) = ½ · width(θ, t) · (h(θ) - t),   -h(θ) <= t < h(θ)

and A(θ) is the maximum of f. The critical determinant is Δ(K) = 2·max A.

Inner maximization:

- Polygons: width is piecewise linear in t with breaks at vertex heights,
  so f is piecewise quadratic and its maximum is found exactly among the
  breakpoints and the stationary point of each piece.
- Curved domains: f is log-concave, so golden-section search (1e-12 in t)
  finds the maximum; both slab ends are compared as well.

Directions in [π, 2π) are answered by negating the triangle anchored at
θ - π, which makes A(θ + π) = A(θ) hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from domains.domain import Domain
from domains.pieces import Segment
from geometry.polygon import ConvexPolygon
from geometry.primitives import Point, Triangle
from utils.log import log_info
from utils.numerics import golden_section_max, golden_section_min, wrap_angle

LOG_PREFIX = "anchored"

# Golden-section tolerance in t for curved domains
INNER_TOL = 1e-12

# Refinement tolerance for argmax/argmin angles
ANGLE_REFINE_TOL = 1e-10

# Grid points within this relative distance of the max form one argmax run
ARGMAX_REL_TOL = 1e-9

# Default relative tolerance for calling a triangle critical
DEFAULT_CRITICAL_TOL = 1e-7

# Default grid size for A(θ) over [0, π)
DEFAULT_PROFILE_N = 360

# Smallest accepted profile grid
MIN_PROFILE_N = 16

# Vertex-set matching tolerance for deduplicating critical triangles
DEDUP_TOL = 1e-6


@dataclass(frozen=True)
class AnchoredTriangle:
    """The maximal triangle anchored at L(θ).

    Attributes:
        theta: Anchor direction.
        h: Support height h(θ).
        apex_contact: L(θ) ∩ ∂K, a point or a boundary segment.
        apex: The contact point, or the contact segment's midpoint.
        base_y: Base endpoint with the larger coordinate along (-sin θ, cos θ).
        base_z: The other base endpoint.
        base_height: The t at which the base chord sits.
        area: ½ · |base| · (h - t).
    """

    theta: float
    h: float
    apex_contact: Point | Segment
    apex: Point
    base_y: Point
    base_z: Point
    base_height: float
    area: float

    @property
    def triangle(self) -> Triangle:
        return Triangle(self.apex, self.base_y, self.base_z)

    def negated(self, theta: float) -> AnchoredTriangle:
        contact = self.apex_contact
        flipped: Point | Segment = contact.negated() if isinstance(contact, Segment) else -contact
        return AnchoredTriangle(
            theta, self.h, flipped, -self.apex, -self.base_y, -self.base_z, self.base_height, self.area
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta_rad": self.theta,
            "h": self.h,
            "apex": self.apex.to_list(),
            "base_y": self.base_y.to_list(),
            "base_z": self.base_z.to_list(),
            "base_height": self.base_height,
            "area": self.area,
        }


@dataclass
class AreaProfile:
    """A(θ) sampled on the grid θ_i = iπ/n.

    Attributes:
        thetas: Grid angles.
        values: A at each grid angle.
        a_max: Largest value, after local refinement.
        a_min: Smallest value, after local refinement.
        argmax_set: Refined angles of the maxima (the whole grid when A is
            constant to within ``ARGMAX_REL_TOL``).
        argmin: Refined angle of the smallest value.
    """

    thetas: np.ndarray
    values: np.ndarray
    a_max: float
    a_min: float
    argmax_set: list[float] = field(default_factory=list)
    argmin: float = 0.0

    @property
    def relative_spread(self) -> float:
        return (self.a_max - self.a_min) / self.a_max

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": len(self.thetas),
            "a_max": self.a_max,
            "a_min": self.a_min,
            "relative_spread": self.relative_spread,
            "argmax_set": list(self.argmax_set),
            "argmin": self.argmin,
        }


@dataclass(frozen=True)
class CriticalTriangle:
    """A critical triangle with its anchor angles θ₁ < θ₃ < θ₅."""

    triangle: Triangle
    anchor_angles: tuple[float, float, float]

    def to_dict(self) -> dict[str, Any]:
        data = self.triangle.to_dict()
        data["anchor_angles_rad"] = list(self.anchor_angles)
        return data


# =============================================================================
# Anchored triangles
# =============================================================================


def anchored_triangle(domain: Domain, theta: float) -> AnchoredTriangle:
    """Maximal-area triangle with apex on L(θ) and base parallel to it."""
    canonical = wrap_angle(theta)
    if canonical >= math.pi:
        return _anchored_half_turn(domain, canonical - math.pi).negated(theta)
    result = _anchored_half_turn(domain, canonical)
    if canonical != theta:
        result = AnchoredTriangle(
            theta, result.h, result.apex_contact, result.apex,
            result.base_y, result.base_z, result.base_height, result.area,
        )
    return result


def anchored_area(domain: Domain, theta: float) -> float:
    """A(θ)."""
    return anchored_triangle(domain, theta).area


def _anchored_half_turn(domain: Domain, theta: float) -> AnchoredTriangle:
    support = domain.support(theta)
    h = support.h
    if domain.is_polygon:
        t = _polygon_best_t(domain.vertices, theta, h)
    else:

        def f(t: float) -> float:
            return 0.5 * domain.chord(theta, t, h).width * (h - t)

        t, _ = golden_section_max(f, -h, h, tol=INNER_TOL)
    c = domain.chord(theta, t, h)
    y, z = c.endpoints
    return AnchoredTriangle(theta, h, support.contact, support.apex, y, z, c.t, 0.5 * c.width * (h - c.t))


def _polygon_widths(coords: np.ndarray, theta: float, ts: np.ndarray) -> np.ndarray:
    """Chord widths of a convex polygon at heights ``ts`` along u_θ."""
    u = np.array([math.cos(theta), math.sin(theta)])
    v = np.array([-u[1], u[0]])
    s0 = coords @ u
    q0 = coords @ v
    s1, q1 = np.roll(s0, -1), np.roll(q0, -1)
    ds = s1 - s0
    flat = np.abs(ds) <= 1e-15
    safe = np.where(flat, 1.0, ds)
    lam = (ts[:, None] - s0[None, :]) / safe[None, :]
    crossing = (~flat)[None, :] & (lam >= -1e-12) & (lam <= 1.0 + 1e-12)
    pos = q0[None, :] + np.clip(lam, 0.0, 1.0) * (q1 - q0)[None, :]
    on_edge = flat[None, :] & (np.abs(ts[:, None] - s0[None, :]) <= 1e-12)
    hi = np.max(np.where(crossing, pos, -np.inf), axis=1)
    lo = np.min(np.where(crossing, pos, np.inf), axis=1)
    hi = np.maximum(hi, np.max(np.where(on_edge, np.maximum(q0, q1)[None, :], -np.inf), axis=1))
    lo = np.minimum(lo, np.min(np.where(on_edge, np.minimum(q0, q1)[None, :], np.inf), axis=1))
    return np.where(np.isfinite(hi) & np.isfinite(lo), hi - lo, 0.0)


def _polygon_best_t(coords: np.ndarray, theta: float, h: float) -> float:
    """Exact maximizer of f(t) for a polygon: breakpoints and stationary points."""
    u = np.array([math.cos(theta), math.sin(theta)])
    breaks = np.unique(np.clip(coords @ u, -h, h))
    widths = _polygon_widths(coords, theta, breaks)
    candidates = [breaks]
    t0, t1 = breaks[:-1], breaks[1:]
    w0, w1 = widths[:-1], widths[1:]
    span = t1 - t0
    beta = np.divide(w1 - w0, span, out=np.zeros_like(span), where=span > 0.0)
    alpha = w0 - beta * t0
    # f'(t) = 0 on a piece where width = α + βt
    with np.errstate(divide="ignore", invalid="ignore"):
        stationary = (beta * h - alpha) / (2.0 * beta)
    inside = (beta != 0.0) & (stationary > t0) & (stationary < t1)
    candidates.append(stationary[inside])
    ts = np.concatenate(candidates)
    values = 0.5 * _polygon_widths(coords, theta, ts) * (h - ts)
    return float(ts[int(np.argmax(values))])


# =============================================================================
# Area profile
# =============================================================================


def area_profile(domain: Domain, n: int = DEFAULT_PROFILE_N, refine: bool = True) -> AreaProfile:
    """A(θ) on the grid iπ/n, with refined extreme values and angles.

    Maxima are grouped into cyclic runs of grid points within
    ``ARGMAX_REL_TOL`` of the grid max; each run's best point is refined by
    golden-section search over one grid step on either side. The minimum is
    refined the same way.

    Raises:
        ValueError: If n < 16.
    """
    if n < MIN_PROFILE_N:
        raise ValueError(f"area profile needs n >= {MIN_PROFILE_N}, got {n}")
    step = math.pi / n
    thetas = np.arange(n, dtype=float) * step
    values = np.array([anchored_area(domain, float(th)) for th in thetas])
    grid_max = float(values.max())
    grid_min = float(values.min())
    near = values >= grid_max * (1.0 - ARGMAX_REL_TOL)

    if near.all():
        return AreaProfile(thetas, values, grid_max, grid_min, [float(t) for t in thetas], float(thetas[0]))

    a_max = grid_max
    argmax_set: list[float] = []
    for run in _cyclic_runs(near):
        best = max(run, key=lambda i: values[i])
        theta, value = float(thetas[best]), float(values[best])
        if refine:
            rt, rv = golden_section_max(
                lambda th: anchored_area(domain, th), theta - step, theta + step, tol=ANGLE_REFINE_TOL
            )
            if rv > value:
                theta, value = wrap_angle(rt) % math.pi, rv
        argmax_set.append(theta)
        a_max = max(a_max, value)

    low = int(np.argmin(values))
    argmin, a_min = float(thetas[low]), grid_min
    if refine:
        rt, rv = golden_section_min(
            lambda th: anchored_area(domain, th), argmin - step, argmin + step, tol=ANGLE_REFINE_TOL
        )
        if rv < a_min:
            argmin, a_min = wrap_angle(rt) % math.pi, rv
    log_info(LOG_PREFIX, f"profile n={n}: max {a_max:.12g}, min {a_min:.12g}")
    return AreaProfile(thetas, values, a_max, a_min, sorted(argmax_set), argmin)


def _cyclic_runs(mask: np.ndarray) -> list[list[int]]:
    """Maximal runs of True in a cyclic boolean array (not all True)."""
    n = len(mask)
    start = int(np.flatnonzero(~mask)[0])
    runs: list[list[int]] = []
    current: list[int] = []
    for k in range(1, n + 1):
        i = (start + k) % n
        if mask[i]:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs


# =============================================================================
# Critical triangles and Δ(K)
# =============================================================================


def anchor_angles(triangle: Triangle) -> tuple[float, float, float]:
    """For each vertex, the direction normal to the opposite side, toward the vertex.

    These are the angles at which the triangle is anchored. Returned in
    increasing order inside a window [θ₁, θ₁ + 2π).
    """
    angles = []
    for vertex, (p, q) in zip(triangle.vertices, triangle.sides(), strict=True):
        dx, dy = q.x - p.x, q.y - p.y
        nx, ny = dy, -dx
        if nx * (vertex.x - p.x) + ny * (vertex.y - p.y) < 0.0:
            nx, ny = -nx, -ny
        angles.append(wrap_angle(math.atan2(ny, nx)))
    a, b, c = sorted(angles)
    return a, b, c


def six_anchor_angles(triangle: Triangle) -> list[float]:
    """Anchor angles of T and of -T, sorted in [0, 2π)."""
    base = anchor_angles(triangle)
    return sorted(list(base) + [wrap_angle(a + math.pi) for a in base])


def brute_max_triangle(polygon: ConvexPolygon) -> Triangle:
    """Largest triangle on the polygon's vertices, by exhaustive search.

    The maximal inscribed triangle of a convex polygon has its vertices at
    polygon vertices, so this is exact. O(n³), vectorized over (j, k).
    """
    coords = polygon.coords
    n = len(coords)
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    best_value, best = -1.0, (0, 1, 2)
    for i in range(n - 2):
        d = coords[i + 1 :] - coords[i]
        cross = np.abs(np.triu(np.outer(d[:, 0], d[:, 1]) - np.outer(d[:, 1], d[:, 0]), 1))
        flat = int(np.argmax(cross))
        value = float(cross.flat[flat])
        if value > best_value:
            j, k = divmod(flat, len(d))
            best_value, best = value, (i, i + 1 + j, i + 1 + k)
    a, b, c = (Point(float(coords[m, 0]), float(coords[m, 1])) for m in best)
    return Triangle(a, b, c)


def _vertex_triples_near(coords: np.ndarray, threshold: float) -> list[tuple[int, int, int]]:
    """All vertex triples i < j < k with doubled area >= threshold."""
    triples = []
    n = len(coords)
    for i in range(n - 2):
        d = coords[i + 1 :] - coords[i]
        cross = np.abs(np.triu(np.outer(d[:, 0], d[:, 1]) - np.outer(d[:, 1], d[:, 0]), 1))
        for j, k in zip(*np.nonzero(cross >= threshold), strict=True):
            triples.append((i, i + 1 + int(j), i + 1 + int(k)))
    return triples


def max_anchored_area(domain: Domain, n: int = DEFAULT_PROFILE_N) -> float:
    """A_max: exact over vertex triples for polygons, refined profile max otherwise."""
    if domain.is_polygon:
        return brute_max_triangle(ConvexPolygon(domain.vertices, check=False)).area
    return area_profile(domain, n).a_max


def critical_determinant(domain: Domain, n: int = DEFAULT_PROFILE_N) -> float:
    """Δ(K) = 2·A_max."""
    return 2.0 * max_anchored_area(domain, n)


def critical_triangles(
    domain: Domain,
    tol: float = DEFAULT_CRITICAL_TOL,
    n: int = DEFAULT_PROFILE_N,
) -> list[CriticalTriangle]:
    """Distinct critical triangles, one representative per pair {T, -T}.

    Polygons are searched exhaustively over vertex triples, so the list is
    complete. Curved domains are searched on the θ grid plus the refined
    argmax angles, so a continuous family is reported at grid resolution.
    """
    if domain.is_polygon:
        coords = domain.vertices
        a_max = brute_max_triangle(ConvexPolygon(coords, check=False)).area
        triples = _vertex_triples_near(coords, 2.0 * a_max * (1.0 - tol))
        candidates = [
            Triangle(*(Point(float(coords[m, 0]), float(coords[m, 1])) for m in triple))
            for triple in triples
        ]
    else:
        profile = area_profile(domain, n)
        a_max = profile.a_max
        on_grid = {float(t) for t, v in zip(profile.thetas, profile.values, strict=True) if v >= a_max * (1.0 - tol)}
        thetas = sorted(on_grid | set(profile.argmax_set))
        candidates = [anchored_triangle(domain, t).triangle for t in thetas]
        candidates = [t for t in candidates if t.area >= a_max * (1.0 - tol)]

    kept: list[Triangle] = []
    kept_coords = np.empty((0, 3, 2))
    for tri in candidates:
        if _matches_any(tri, kept_coords) or _matches_any(tri.negated(), kept_coords):
            continue
        kept.append(tri)
        kept_coords = np.concatenate([kept_coords, _vertex_array(tri)[None]])
    log_info(LOG_PREFIX, f"{len(kept)} critical triangle(s), A_max {a_max:.12g}")
    return [CriticalTriangle(t, anchor_angles(t)) for t in kept]


def _vertex_array(tri: Triangle) -> np.ndarray:
    return np.array([v.to_list() for v in tri.vertices])


def _matches_any(tri: Triangle, kept: np.ndarray, tol: float = DEDUP_TOL) -> bool:
    """Vertex-set match of ``tri`` against each (3, 2) block of ``kept``."""
    if not len(kept):
        return False
    verts = _vertex_array(tri)
    dist = np.hypot(*(kept[:, :, None, :] - verts[None, None, :, :]).transpose(3, 0, 1, 2))
    forward = dist.min(axis=2).max(axis=1) <= tol
    backward = dist.min(axis=1).max(axis=1) <= tol
    return bool(np.any(forward & backward))
