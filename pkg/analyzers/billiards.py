"""
Outer billiard triangles and the Sas bound.

The outer billiard triangle of T = (x, y, z) is the circumscribed
triangle (y + z - x, z + x - y, x + y - z); its side midpoints are x, y, z.
When T is critical for K, those midpoints lie on ∂K.

Sas: among convex bodies the ellipse minimizes (max inscribed n-gon area)
/ area, with ratio (n / 2π) sin(2π / n). For triangles this gives
A_max / area(K) >= 3√3 / (4π), equivalently area(K) <= 4π A_max / √27.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from domains.domain import Domain
from geometry.primitives import Triangle, midpoint
from utils.log import log_warning

from .anchored import DEFAULT_PROFILE_N, max_anchored_area

LOG_PREFIX = "billiards"

# Slack for the Sas inequalities
SAS_SLACK = 1e-9


def sas_lower_bound(n: int = 3) -> float:
    """(n / 2π) sin(2π / n), the ellipse's inscribed n-gon to area ratio."""
    if n < 3:
        raise ValueError(f"Sas bound needs n >= 3, got {n}")
    return n / (2.0 * math.pi) * math.sin(2.0 * math.pi / n)


@dataclass
class SasCheck:
    """Sas ratio of a domain and the two bounds it is checked against.

    Attributes:
        ratio: A_max / area(K).
        lower_bound: 3√3 / (4π).
        corollary_bound: 4π A_max / √27, an upper bound for area(K).
        area: area(K).
    """

    ratio: float
    lower_bound: float
    corollary_bound: float
    area: float

    @property
    def bound_holds(self) -> bool:
        return self.ratio >= self.lower_bound - SAS_SLACK

    @property
    def corollary_holds(self) -> bool:
        return self.corollary_bound >= self.area - SAS_SLACK * self.area

    def to_dict(self) -> dict[str, Any]:
        return {
            "ratio": self.ratio,
            "lower_bound": self.lower_bound,
            "corollary_bound": self.corollary_bound,
            "area": self.area,
            "bound_holds": self.bound_holds,
            "corollary_holds": self.corollary_holds,
        }


def outer_billiard_triangle(triangle: Triangle) -> Triangle:
    """The triangle whose side midpoints are the vertices of ``triangle``.

    Raises:
        DegenerateTriangle: If the input has zero area.
    """
    triangle.require_nondegenerate()
    x, y, z = triangle.vertices
    return Triangle(y + z - x, z + x - y, x + y - z)


def side_midpoints(triangle: Triangle) -> Triangle:
    """Midpoints of the sides opposite a, b and c."""
    (p1, q1), (p2, q2), (p3, q3) = triangle.sides()
    return Triangle(midpoint(p1, q1), midpoint(p2, q2), midpoint(p3, q3))


def sas_check(domain: Domain, n: int = DEFAULT_PROFILE_N, a_max: float | None = None) -> SasCheck:
    """Compare A_max / area(K) with the ellipse's ratio 3√3 / (4π).

    A previously computed ``a_max`` is used as is.
    """
    if a_max is None:
        a_max = max_anchored_area(domain, n)
    area = domain.area()
    result = SasCheck(
        ratio=a_max / area,
        lower_bound=sas_lower_bound(3),
        corollary_bound=4.0 * math.pi * a_max / math.sqrt(27.0),
        area=area,
    )
    if not (result.bound_holds and result.corollary_holds):
        log_warning(LOG_PREFIX, f"Sas bound violated: ratio {result.ratio:.12g} < {result.lower_bound:.12g}")
    return result
