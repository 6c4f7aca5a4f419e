"""
SVG rendering of domains, critical triangles and lattice coverings.

The boundary is drawn exactly: segments become ``L`` commands and elliptic
arcs become SVG ``A`` commands. World coordinates are mapped onto a square
viewport with the origin at its center and y pointing up, leaving a
fractional padding on every side.

Elements are emitted in a canonical order (outline, lattice translates
sorted by position, triangles sorted by vertex coordinates) and every
number is printed with fixed precision, so identical input renders to an
identical file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from domains.domain import Domain
from domains.pieces import Arc, Segment
from geometry.lattice import Lattice
from geometry.primitives import Point, Triangle

DEFAULT_SIZE = 1000
DEFAULT_PADDING = 0.05

# World radius shown around the origin, in units of the circumradius
LATTICE_VIEW_FACTOR = 2.5

DOMAIN_STYLE = 'fill="none" stroke="#1f3b73" stroke-width="2"'
TRANSLATE_STYLE = 'fill="#9ab3de" fill-opacity="0.15" stroke="#6f8fc4" stroke-width="1"'
TRIANGLE_STYLE = 'fill="none" stroke="#b3261e" stroke-width="1.5"'
ORIGIN_STYLE = 'fill="#000000"'


def _num(value: float) -> str:
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


@dataclass(frozen=True)
class Viewport:
    """Maps world coordinates into a size × size SVG canvas."""

    size: int
    half_width: float
    padding: float = DEFAULT_PADDING

    @property
    def scale(self) -> float:
        return self.size * (1.0 - 2.0 * self.padding) / (2.0 * self.half_width)

    def map(self, p: Point) -> tuple[float, float]:
        c = self.size / 2.0
        return c + self.scale * p.x, c - self.scale * p.y


def domain_path_data(domain: Domain, view: Viewport, offset: Point | None = None) -> str:
    """SVG path data for the boundary of K + offset."""
    offset = offset or Point(0.0, 0.0)
    first = domain.pieces[0].start_point + offset
    x, y = view.map(first)
    parts = [f"M {_num(x)} {_num(y)}"]
    for piece in domain.pieces:
        ex, ey = view.map(piece.end_point + offset)
        if isinstance(piece, Segment):
            parts.append(f"L {_num(ex)} {_num(ey)}")
        elif isinstance(piece, Arc):
            # y flips, so world rotation and orientation both reverse on screen
            rotation = -math.degrees(piece.rotation)
            large = 1 if piece.span > math.pi else 0
            parts.append(
                f"A {_num(piece.rx * view.scale)} {_num(piece.ry * view.scale)} "
                f"{_num(rotation)} {large} 1 {_num(ex)} {_num(ey)}"
            )
    parts.append("Z")
    return " ".join(parts)


def _triangle_element(triangle: Triangle, view: Viewport) -> str:
    points = " ".join(f"{_num(x)},{_num(y)}" for x, y in (view.map(v) for v in triangle.vertices))
    return f'<polygon points="{points}" {TRIANGLE_STYLE}/>'


def _triangle_key(triangle: Triangle) -> tuple[float, ...]:
    return tuple(round(c, 9) for v in triangle.vertices for c in (v.x, v.y))


def render_svg(
    domain: Domain,
    triangles: list[Triangle] | None = None,
    lattice: Lattice | None = None,
    size: int = DEFAULT_SIZE,
    padding: float = DEFAULT_PADDING,
) -> str:
    """Render K, optionally with triangles and the translates K + λ.

    Raises:
        ValueError: If size is not positive or padding is outside [0, 0.5).
    """
    if size <= 0:
        raise ValueError(f"SVG size must be positive, got {size}")
    if not 0.0 <= padding < 0.5:
        raise ValueError(f"SVG padding must be in [0, 0.5), got {padding}")

    radius = domain.circumradius()
    half_width = radius * (LATTICE_VIEW_FACTOR if lattice is not None else 1.0)
    view = Viewport(size, half_width, padding)

    body: list[str] = []
    if lattice is not None:
        points = lattice.points_near(np.zeros(2), half_width + radius)
        ordered = sorted((round(float(px), 9), round(float(py), 9)) for px, py in points)
        for px, py in ordered:
            if px == 0.0 and py == 0.0:
                continue
            path = domain_path_data(domain, view, Point(px, py))
            body.append(f'<path d="{path}" {TRANSLATE_STYLE}/>')
    body.append(f'<path d="{domain_path_data(domain, view)}" {DOMAIN_STYLE}/>')
    for triangle in sorted(triangles or [], key=_triangle_key):
        body.append(_triangle_element(triangle, view))
    cx, cy = view.map(Point(0.0, 0.0))
    body.append(f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="3" {ORIGIN_STYLE}/>')

    header = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    )
    return "\n".join([header, *body, "</svg>"]) + "\n"
