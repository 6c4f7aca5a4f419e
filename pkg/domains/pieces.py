"""
Boundary pieces: line segments and elliptic arcs.

An arc is the image of the unit-circle parameter interval [start, end]
under p(φ) = center + R(rotation) · (rx cos φ, ry sin φ). Increasing φ
always runs counter-clockwise around the ellipse center, so a closed CCW
boundary lists every arc with ``end > start``.

Both piece kinds answer the same questions: endpoints, support in a
direction, intersections with a line ⟨p, u⟩ = t, tangents and outward
normals, uniform samples and images under a linear map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from geometry.primitives import Point
from utils.errors import DomainInvariantError, DomainParseError
from utils.numerics import TWO_PI, angle_in_arc, wrap_angle

# Two directions are parallel when their angles differ by at most this
CONTACT_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class Segment:
    """A straight boundary piece from ``start`` to ``end``."""

    start: Point
    end: Point

    @property
    def start_point(self) -> Point:
        return self.start

    @property
    def end_point(self) -> Point:
        return self.end

    def length(self) -> float:
        return self.start.distance(self.end)

    def point_at(self, s: float) -> Point:
        """Point at fraction ``s`` of the way from start to end."""
        return Point(
            self.start.x + s * (self.end.x - self.start.x),
            self.start.y + s * (self.end.y - self.start.y),
        )

    def tangent_at_start(self) -> tuple[float, float]:
        return self.end.x - self.start.x, self.end.y - self.start.y

    def tangent_at_end(self) -> tuple[float, float]:
        return self.tangent_at_start()

    def normal_angle(self) -> float:
        """Angle of the outward normal (boundary runs CCW)."""
        dx, dy = self.tangent_at_start()
        return wrap_angle(math.atan2(-dx, dy))

    def support(self, u: tuple[float, float]) -> tuple[float, Point]:
        hs = self.start.x * u[0] + self.start.y * u[1]
        he = self.end.x * u[0] + self.end.y * u[1]
        return (hs, self.start) if hs >= he else (he, self.end)

    def intersect_line(self, u: tuple[float, float], t: float, tol: float) -> list[Point]:
        """Points of the segment on the line ⟨p, u⟩ = t.

        A segment lying on the line contributes both endpoints.
        """
        hs = self.start.x * u[0] + self.start.y * u[1] - t
        he = self.end.x * u[0] + self.end.y * u[1] - t
        if abs(hs) <= tol and abs(he) <= tol:
            return [self.start, self.end]
        if abs(he - hs) <= 1e-300:
            return []
        s = hs / (hs - he)
        slack = tol / max(self.length(), 1e-300)
        if -slack <= s <= 1.0 + slack:
            return [self.point_at(min(max(s, 0.0), 1.0))]
        return []

    def sample(self, k: int) -> np.ndarray:
        """``k`` points from the start, evenly spaced, end excluded."""
        s = np.arange(k, dtype=float)[:, None] / k
        a = np.array([self.start.x, self.start.y])
        b = np.array([self.end.x, self.end.y])
        return a + s * (b - a)

    def negated(self) -> Segment:
        return Segment(-self.start, -self.end)

    def transformed(self, m: np.ndarray) -> Segment:
        """Image under M, endpoints swapped when det M < 0."""
        a, b = _apply(m, self.start), _apply(m, self.end)
        return Segment(b, a) if np.linalg.det(m) < 0.0 else Segment(a, b)

    def to_dict(self) -> dict[str, Any]:
        return {"segment": {"from": self.start.to_list(), "to": self.end.to_list()}}


@dataclass(frozen=True)
class Arc:
    """An elliptic arc, parameter interval [start_angle, end_angle], CCW.

    Attributes:
        center: Ellipse center.
        rx: Semi-axis along the rotated x direction.
        ry: Semi-axis along the rotated y direction.
        rotation: Ellipse rotation in radians.
        start_angle: First parameter angle.
        end_angle: Last parameter angle, greater than ``start_angle``.
    """

    center: Point
    rx: float
    ry: float
    rotation: float
    start_angle: float
    end_angle: float

    def __post_init__(self) -> None:
        if not (self.rx > 0.0 and self.ry > 0.0):
            raise DomainInvariantError(f"arc semi-axes must be positive, got {self.rx}, {self.ry}")
        span = self.end_angle - self.start_angle
        if not (0.0 < span < TWO_PI):
            raise DomainInvariantError(f"arc span {span:.6g} rad is outside (0, 2π)")

    @property
    def span(self) -> float:
        return self.end_angle - self.start_angle

    @property
    def frame(self) -> np.ndarray:
        """The matrix R(rotation) · diag(rx, ry)."""
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return np.array([[c * self.rx, -s * self.ry], [s * self.rx, c * self.ry]])

    def point_at_angle(self, phi: float) -> Point:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        lx, ly = self.rx * math.cos(phi), self.ry * math.sin(phi)
        return Point(self.center.x + c * lx - s * ly, self.center.y + s * lx + c * ly)

    @property
    def start_point(self) -> Point:
        return self.point_at_angle(self.start_angle)

    @property
    def end_point(self) -> Point:
        return self.point_at_angle(self.end_angle)

    def tangent_at_angle(self, phi: float) -> tuple[float, float]:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        lx, ly = -self.rx * math.sin(phi), self.ry * math.cos(phi)
        return c * lx - s * ly, s * lx + c * ly

    def tangent_at_start(self) -> tuple[float, float]:
        return self.tangent_at_angle(self.start_angle)

    def tangent_at_end(self) -> tuple[float, float]:
        return self.tangent_at_angle(self.end_angle)

    def normal_angle_at(self, phi: float) -> float:
        dx, dy = self.tangent_at_angle(phi)
        return wrap_angle(math.atan2(-dx, dy))

    def _local_direction(self, u: tuple[float, float]) -> tuple[float, float]:
        """w = diag(rx, ry) · R(rotation)ᵀ · u, so ⟨p(φ), u⟩ = ⟨c, u⟩ + ⟨w, (cos φ, sin φ)⟩."""
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return self.rx * (c * u[0] + s * u[1]), self.ry * (-s * u[0] + c * u[1])

    def support(self, u: tuple[float, float]) -> tuple[float, Point]:
        """Closed-form max of ⟨p, u⟩ over the arc and the point attaining it."""
        wx, wy = self._local_direction(u)
        peak = math.atan2(wy, wx)
        if angle_in_arc(peak, self.start_angle, self.end_angle):
            phi = self.start_angle + wrap_angle(peak - self.start_angle)
            p = self.point_at_angle(phi)
            return self.center.x * u[0] + self.center.y * u[1] + math.hypot(wx, wy), p
        ps, pe = self.start_point, self.end_point
        hs = ps.x * u[0] + ps.y * u[1]
        he = pe.x * u[0] + pe.y * u[1]
        return (hs, ps) if hs >= he else (he, pe)

    def intersect_line(self, u: tuple[float, float], t: float, tol: float) -> list[Point]:
        """Points of the arc on the line ⟨p, u⟩ = t."""
        wx, wy = self._local_direction(u)
        radius = math.hypot(wx, wy)
        offset = t - (self.center.x * u[0] + self.center.y * u[1])
        if abs(offset) > radius + tol:
            return []
        alpha = math.atan2(wy, wx)
        delta = math.acos(min(1.0, max(-1.0, offset / radius)))
        angle_tol = tol / min(self.rx, self.ry)
        span = self.span
        hits = []
        for phi in (alpha - delta, alpha + delta):
            offset_angle = wrap_angle(phi - self.start_angle)
            if offset_angle <= span:
                hits.append(self.point_at_angle(self.start_angle + offset_angle))
            elif offset_angle <= span + angle_tol:
                hits.append(self.end_point)
            elif offset_angle >= TWO_PI - angle_tol:
                hits.append(self.start_point)
        return hits

    def sample(self, k: int) -> np.ndarray:
        """``k`` points evenly spaced in parameter angle, end excluded."""
        phi = self.start_angle + self.span * np.arange(k, dtype=float) / k
        local = np.column_stack([np.cos(phi), np.sin(phi)])
        return np.array([self.center.x, self.center.y]) + local @ self.frame.T

    def contains_side(self, pts: np.ndarray, slack: float) -> np.ndarray:
        """Inner side of the arc: left of its chord, or inside its ellipse."""
        ps, pe = self.start_point, self.end_point
        ex, ey = pe.x - ps.x, pe.y - ps.y
        left = ex * (pts[:, 1] - ps.y) - ey * (pts[:, 0] - ps.x) >= -slack * math.hypot(ex, ey)
        local = (pts - np.array([self.center.x, self.center.y])) @ np.linalg.inv(self.frame).T
        inside = np.hypot(local[:, 0], local[:, 1]) <= 1.0 + slack / min(self.rx, self.ry)
        return left | inside

    def negated(self) -> Arc:
        # -p(φ) = -c + R · D · (cos(φ+π), sin(φ+π))
        return Arc(
            -self.center, self.rx, self.ry, self.rotation,
            self.start_angle + math.pi, self.end_angle + math.pi,
        )

    def transformed(self, m: np.ndarray) -> Arc:
        """Image under a linear map M.

        The image frame M·R·D is refactored as R(γ)·Σ·R(β)ᵀ, which turns the
        parameter interval into [start - β, end - β]. When det M < 0 the frame
        is first composed with diag(1, -1) and the interval negated, so the
        image runs backwards like a transformed segment.
        """
        a = m @ self.frame
        lo, hi = self.start_angle, self.end_angle
        if np.linalg.det(m) < 0.0:
            a = a @ np.diag([1.0, -1.0])
            lo, hi = -hi, -lo
        u, sigma, vt = np.linalg.svd(a)
        v = vt.T
        if np.linalg.det(u) < 0.0:
            u[:, 1] *= -1.0
            v[:, 1] *= -1.0
        gamma = math.atan2(u[1, 0], u[0, 0])
        beta = math.atan2(v[1, 0], v[0, 0])
        return Arc(_apply(m, self.center), float(sigma[0]), float(sigma[1]), gamma, lo - beta, hi - beta)

    def to_dict(self) -> dict[str, Any]:
        return {
            "arc": {
                "center": self.center.to_list(),
                "rx": self.rx,
                "ry": self.ry,
                "rotation_rad": self.rotation,
                "start_rad": self.start_angle,
                "end_rad": self.end_angle,
            }
        }


BoundaryPiece = Segment | Arc


def _apply(m: np.ndarray, p: Point) -> Point:
    return Point(float(m[0, 0] * p.x + m[0, 1] * p.y), float(m[1, 0] * p.x + m[1, 1] * p.y))


def piece_from_dict(data: dict[str, Any], index: int = 0) -> BoundaryPiece:
    """Parse one ``{"segment": ...}`` or ``{"arc": ...}`` entry.

    Raises:
        DomainParseError: On unknown kinds, missing keys or bad numbers.
    """
    if not isinstance(data, dict) or len(data) != 1:
        raise DomainParseError(f"piece {index}: expected one of 'segment' or 'arc'")
    kind, body = next(iter(data.items()))
    try:
        if kind == "segment":
            return Segment(Point.from_list(body["from"]), Point.from_list(body["to"]))
        if kind == "arc":
            return Arc(
                Point.from_list(body["center"]),
                float(body["rx"]),
                float(body["ry"]),
                float(body.get("rotation_rad", 0.0)),
                float(body["start_rad"]),
                float(body["end_rad"]),
            )
    except (KeyError, TypeError, ValueError) as e:
        raise DomainParseError(f"piece {index}: malformed {kind}: {e}") from e
    raise DomainParseError(f"piece {index}: unknown piece kind '{kind}'")
