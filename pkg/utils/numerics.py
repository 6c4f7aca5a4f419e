"""
Scalar numerics shared by the analyzers.

The golden-section search reuses one function evaluation per iteration and
stops when the bracket is shorter than ``tol``. It maximizes, and compares
the interior optimum with both bracket ends, since anchored-area functions
often peak at the end of their interval.
"""

from __future__ import annotations

import math
from collections.abc import Callable

INVPHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INVPHI2 = (3 - math.sqrt(5)) / 2  # 1 / phi^2

TWO_PI = 2.0 * math.pi


def golden_section_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Maximize a unimodal function on [lo, hi].

    Args:
        f: Function to maximize.
        lo: Left end of the bracket.
        hi: Right end of the bracket.
        tol: Stop when the bracket is shorter than this.
        max_iter: Hard cap on iterations.

    Returns:
        Tuple of (argmax, max value).
    """
    lo, hi = min(lo, hi), max(lo, hi)
    fa, fb = f(lo), f(hi)
    a, b = lo, hi
    h = b - a
    if h <= tol:
        return (a, fa) if fa >= fb else (b, fb)

    c = a + INVPHI2 * h
    d = a + INVPHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(max_iter):
        if h <= tol:
            break
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INVPHI * h
            c = a + INVPHI2 * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INVPHI * h
            d = a + INVPHI * h
            yd = f(d)

    best_x, best_y = (c, yc) if yc >= yd else (d, yd)
    if fa > best_y:
        best_x, best_y = lo, fa
    if fb > best_y:
        best_x, best_y = hi, fb
    return best_x, best_y


def golden_section_min(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Minimize a unimodal function on [lo, hi]; returns (argmin, min value)."""
    x, y = golden_section_max(lambda v: -f(v), lo, hi, tol, max_iter)
    return x, -y


def wrap_angle(theta: float) -> float:
    """Map an angle into [0, 2π)."""
    wrapped = math.fmod(theta, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    if wrapped >= TWO_PI:
        wrapped -= TWO_PI
    return wrapped


def angle_in_arc(phi: float, start: float, end: float, tol: float = 0.0) -> bool:
    """Check whether ``phi`` lies on the CCW arc from ``start`` to ``end``.

    ``end`` is expected to exceed ``start`` by less than 2π.
    """
    offset = wrap_angle(phi - start)
    span = end - start
    return offset <= span + tol or offset >= TWO_PI - tol


def unit(theta: float) -> tuple[float, float]:
    """The unit vector u_θ = (cos θ, sin θ)."""
    return math.cos(theta), math.sin(theta)
