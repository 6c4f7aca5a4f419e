"""
A one-parameter family of inextensible domains between the disk and the
square.

Each member is bounded by 4 segments and 12 elliptic arcs. The arcs come
from four ellipses with semi-axes e^s and e^-s:

========  ==========  ========
ellipse   center      rotation
========  ==========  ========
A         (-a, a)     π/4
-A        (a, -a)     π/4
B         (-a, -a)    3π/4
-B        (a, a)      3π/4
========  ==========  ========

A and B contribute the parameter intervals [75° + T, 105° - T] + 120°·k
(k = 0, 1, 2); -A and -B the same intervals shifted by 180°, which makes
the boundary centrally symmetric. The segments are x = ±X and y = ±X for
|coordinate| <= Y.

The four unknowns (a, T, X, Y) are fixed by closure. By the square's
dihedral symmetry two junctions suffice:

- A at 315° + T starts where the right segment ends, at (X, Y)
- A at 345° - T ends where -B at 255° + T starts

``solve_family`` minimizes the squared closure and convexity residuals with
Nelder-Mead and polishes the closure equations with MINPACK's hybrid method.
When A is still not constant on the grid, a last Nelder-Mead stage adds the
relative variance of A to the objective with unit weight. Only solutions
whose closure gap and A-spread are below their thresholds are accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.optimize import minimize, root

from domains.domain import CLOSURE_TOL, DEFAULT_POLYGONIZE_N, Domain
from domains.pieces import Arc, BoundaryPiece, Segment
from geometry.primitives import Point
from utils.errors import ClosureFailure, DomainInvariantError, NoConvergence
from utils.log import log_info
from utils.numerics import wrap_angle

from .anchored import area_profile

LOG_PREFIX = "family"

# Closure accepted when building a family domain from given parameters
BUILD_CLOSURE_TOL = 1e-6

# Acceptance thresholds for solver output
SOLVE_CLOSURE_TOL = 1e-9
SOLVE_SPREAD_TOL = 1e-6

# Default A-grid for the acceptance residual and the variance stage
DEFAULT_FAMILY_GRID = 720

NELDER_MEAD_OPTIONS = {"xatol": 1e-12, "fatol": 1e-24, "maxiter": 4000}

# Each step of the variance stage evaluates A on the whole grid
VARIANCE_STAGE_MAXITER = 200

# Reference member used to start the continuation
REFERENCE_S = 0.1
REFERENCE_PARAMS = (0.0996729, 0.0993399, 0.910311, 0.299019)

# The disk: a = T = 0, X = 1, Y = 0
DISK_PARAMS = (0.0, 0.0, 1.0, 0.0)

# Turning angles above -JUNCTION_TOL count as convex
JUNCTION_TOL = 1e-9

# Segments shorter than this are dropped (the disk member has none)
MIN_SEGMENT_LENGTH = 1e-12

# Arc intervals are [ARC_LOW + T, ARC_HIGH - T] + 120°·k
ARC_LOW = math.radians(75.0)
ARC_HIGH = math.radians(105.0)
ARC_STEP = math.radians(120.0)

# Trim must leave every arc a positive span
MAX_TRIM = (ARC_HIGH - ARC_LOW) / 2.0


@dataclass
class FamilyParams:
    """Parameters of one family member.

    Attributes:
        s: Log semi-axis; the ellipses have axes e^s and e^-s.
        a: Center offset of the ellipses.
        trim: Arc trim angle T in radians.
        seg_x: Segment offset X.
        seg_y: Segment half-length Y.
        junction_angles: Turning angle at each of the boundary junctions.
        residuals: Final solver residuals, when produced by ``solve_family``.
    """

    s: float
    a: float
    trim: float
    seg_x: float
    seg_y: float
    junction_angles: list[float] = field(default_factory=list)
    residuals: dict[str, float] = field(default_factory=dict)

    @property
    def unknowns(self) -> np.ndarray:
        return np.array([self.a, self.trim, self.seg_x, self.seg_y])

    def to_dict(self) -> dict[str, Any]:
        return {
            "s": self.s,
            "a": self.a,
            "T": self.trim,
            "X": self.seg_x,
            "Y": self.seg_y,
            "junction_angles_rad": list(self.junction_angles),
            "residuals": dict(self.residuals),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FamilyParams:
        return cls(
            s=float(data["s"]),
            a=float(data["a"]),
            trim=float(data["T"]),
            seg_x=float(data["X"]),
            seg_y=float(data["Y"]),
            junction_angles=[float(v) for v in data.get("junction_angles_rad", [])],
            residuals={k: float(v) for k, v in data.get("residuals", {}).items()},
        )


# =============================================================================
# Construction
# =============================================================================


def _ellipses(s: float, a: float) -> dict[str, tuple[Point, float]]:
    quarter = math.pi / 4.0
    return {
        "A": (Point(-a, a), quarter),
        "-A": (Point(a, -a), quarter),
        "B": (Point(-a, -a), 3.0 * quarter),
        "-B": (Point(a, a), 3.0 * quarter),
    }


def _ellipse_point(center: Point, rotation: float, s: float, phi: float) -> np.ndarray:
    c, sn = math.cos(rotation), math.sin(rotation)
    lx, ly = math.exp(s) * math.cos(phi), math.exp(-s) * math.sin(phi)
    return np.array([center.x + c * lx - sn * ly, center.y + sn * lx + c * ly])


def family_pieces(params: FamilyParams) -> list[BoundaryPiece]:
    """The 16 pieces (12 without segments for the disk), sorted CCW by start angle.

    Raises:
        DomainInvariantError: If the trim leaves an arc without positive span.
    """
    s, a, trim = params.s, params.a, params.trim
    x, y = params.seg_x, params.seg_y
    rx, ry = math.exp(s), math.exp(-s)
    pieces: list[BoundaryPiece] = []
    for name, (center, rotation) in _ellipses(s, a).items():
        offset = math.pi if name.startswith("-") else 0.0
        for k in range(3):
            lo = ARC_LOW + trim + k * ARC_STEP + offset
            hi = ARC_HIGH - trim + k * ARC_STEP + offset
            pieces.append(Arc(center, rx, ry, rotation, lo, hi))
    segments = [
        Segment(Point(x, -y), Point(x, y)),
        Segment(Point(y, x), Point(-y, x)),
        Segment(Point(-x, y), Point(-x, -y)),
        Segment(Point(-y, -x), Point(y, -x)),
    ]
    pieces.extend(seg for seg in segments if seg.length() > MIN_SEGMENT_LENGTH)
    pieces.sort(key=lambda p: wrap_angle(p.start_point.angle()))
    return pieces


def closure_gaps(pieces: list[BoundaryPiece]) -> list[float]:
    """Distance from each piece's end to the next piece's start."""
    n = len(pieces)
    return [pieces[i].end_point.distance(pieces[(i + 1) % n].start_point) for i in range(n)]


def junction_angles(pieces: list[BoundaryPiece]) -> list[float]:
    """Signed turning angle at each junction; 0 means tangential, < 0 reflex."""
    angles = []
    n = len(pieces)
    for i in range(n):
        tx, ty = pieces[i].tangent_at_end()
        ux, uy = pieces[(i + 1) % n].tangent_at_start()
        angles.append(math.atan2(tx * uy - ty * ux, tx * ux + ty * uy))
    return angles


def build_family_domain(
    params: FamilyParams,
    closure_tol: float = BUILD_CLOSURE_TOL,
    polygonize_n: int = DEFAULT_POLYGONIZE_N,
) -> Domain:
    """Assemble the family member as a Domain.

    ``closure_tol`` only decides whether the pieces meet; the Domain itself
    gets the actual gap (at least ``CLOSURE_TOL``) so chords stay tight.

    Raises:
        ClosureFailure: If consecutive pieces are more than ``closure_tol`` apart.
    """
    pieces = family_pieces(params)
    gap = max(closure_gaps(pieces))
    if gap > closure_tol:
        raise ClosureFailure("family pieces do not meet", gap)
    params.junction_angles = junction_angles(pieces)
    return Domain(pieces, polygonize_n=polygonize_n, closure_tol=max(gap, CLOSURE_TOL))


# =============================================================================
# Residuals and solver
# =============================================================================


def closure_equations(s: float, unknowns: np.ndarray) -> np.ndarray:
    """The four closure equations in (a, T, X, Y)."""
    a, trim, x, y = (float(v) for v in unknowns)
    ellipses = _ellipses(s, a)
    center_a, rot_a = ellipses["A"]
    center_nb, rot_nb = ellipses["-B"]
    start = _ellipse_point(center_a, rot_a, s, ARC_LOW + trim + 2.0 * ARC_STEP)
    end = _ellipse_point(center_a, rot_a, s, ARC_HIGH - trim + 2.0 * ARC_STEP)
    next_start = _ellipse_point(center_nb, rot_nb, s, ARC_LOW + trim + math.pi)
    return np.concatenate([start - np.array([x, y]), end - next_start])


def _convexity_violation(s: float, unknowns: np.ndarray) -> float:
    a, trim, x, y = (float(v) for v in unknowns)
    # parameters outside the family's shape
    penalty = max(0.0, -trim) + max(0.0, trim - MAX_TRIM + 1e-6) + max(0.0, -y) + max(0.0, y - x)
    if penalty > 0.0:
        return penalty
    pieces = family_pieces(FamilyParams(s, a, trim, x, y))
    return math.sqrt(sum(angle**2 for angle in junction_angles(pieces) if angle < -JUNCTION_TOL))


def family_residuals(params: FamilyParams, grid: int = DEFAULT_FAMILY_GRID) -> dict[str, float]:
    """Closure gap, convexity violation and relative A-spread of a member.

    The spread is infinite when the pieces cannot be assembled.
    """
    closure = float(np.max(np.abs(closure_equations(params.s, params.unknowns))))
    convexity = _convexity_violation(params.s, params.unknowns)
    spread = math.inf
    if convexity == 0.0:
        try:
            pieces = family_pieces(params)
            gap = max(closure_gaps(pieces))
            closure = max(closure, gap)
            domain = Domain(pieces, polygonize_n=DEFAULT_POLYGONIZE_N, closure_tol=max(gap, 1e-12))
            profile = area_profile(domain, grid, refine=False)
            spread = float((profile.values.max() - profile.values.min()) / profile.values.max())
        except DomainInvariantError as e:
            log_info(LOG_PREFIX, f"s={params.s}: member is not a valid domain: {e}")
    return {"closure": closure, "convexity": convexity, "spread": spread}


def _relative_variance(s: float, unknowns: np.ndarray, grid: int) -> float:
    """Var(A) / mean(A)² on the grid; 1.0 when the member is not a valid domain."""
    try:
        pieces = family_pieces(FamilyParams(s, *(float(v) for v in unknowns)))
        domain = Domain(pieces, polygonize_n=DEFAULT_POLYGONIZE_N, closure_tol=max(max(closure_gaps(pieces)), 1e-12))
        values = area_profile(domain, grid, refine=False).values
    except DomainInvariantError:
        return 1.0
    return float(np.var(values) / np.mean(values) ** 2)


def family_objective(s: float, unknowns: np.ndarray, grid: int | None = None) -> float:
    """closure² + convexity², plus the relative A-variance on ``grid`` when given.

    The three terms have unit weights.
    """
    closure = closure_equations(s, unknowns)
    convexity = _convexity_violation(s, unknowns)
    value = float(closure @ closure) + convexity**2
    if grid is not None and convexity == 0.0:
        value += _relative_variance(s, unknowns, grid)
    return value


def initial_guess(s: float) -> np.ndarray:
    """Linear extrapolation in s through the disk and the reference member."""
    disk = np.array(DISK_PARAMS)
    return disk + (s / REFERENCE_S) * (np.array(REFERENCE_PARAMS) - disk)


def solve_family(
    s: float,
    start: np.ndarray | None = None,
    grid: int = DEFAULT_FAMILY_GRID,
    closure_tol: float = SOLVE_CLOSURE_TOL,
    spread_tol: float = SOLVE_SPREAD_TOL,
) -> FamilyParams:
    """Find (a, T, X, Y) for a given s.

    Raises:
        ValueError: If s < 0.
        NoConvergence: If closure, convexity or A-spread miss their thresholds.
    """
    if s < 0.0:
        raise ValueError(f"family parameter s must be >= 0, got {s}")
    x0 = initial_guess(s) if start is None else np.asarray(start, dtype=float)

    if s == 0.0:
        unknowns = np.array(DISK_PARAMS)
    else:
        coarse = minimize(
            lambda v: family_objective(s, v), x0, method="Nelder-Mead", options=NELDER_MEAD_OPTIONS
        )
        polished = root(lambda v: closure_equations(s, v), coarse.x, method="hybr", options={"xtol": 1e-14})
        unknowns = polished.x if polished.success else coarse.x
        log_info(LOG_PREFIX, f"s={s}: nelder-mead {coarse.nit} iterations, hybr success={polished.success}")

    params = FamilyParams(s, *(float(v) for v in unknowns))
    residuals = family_residuals(params, grid)
    if s > 0.0 and residuals["spread"] > spread_tol:
        log_info(LOG_PREFIX, f"s={s}: spread {residuals['spread']:.3e}, adding the A-variance to the objective")
        steered = minimize(
            lambda v: family_objective(s, v, grid),
            unknowns,
            method="Nelder-Mead",
            options={**NELDER_MEAD_OPTIONS, "maxiter": VARIANCE_STAGE_MAXITER},
        )
        params = FamilyParams(s, *(float(v) for v in steered.x))
        residuals = family_residuals(params, grid)
    params.residuals = residuals
    if residuals["closure"] > closure_tol or residuals["convexity"] > 0.0 or residuals["spread"] > spread_tol:
        raise NoConvergence(f"family solver failed at s={s}", residuals)
    params.junction_angles = junction_angles(family_pieces(params))
    return params


def scan_family(s_values: list[float], grid: int = DEFAULT_FAMILY_GRID) -> tuple[list[FamilyParams], float | None]:
    """Solve along increasing s, each solve started from the previous member.

    Returns the accepted members and the first s that failed (None if all
    were accepted), which bounds the family's usable range from above.
    """
    accepted: list[FamilyParams] = []
    previous: np.ndarray | None = None
    for s in sorted(s_values):
        try:
            member = solve_family(s, start=previous, grid=grid)
        except NoConvergence as e:
            log_info(LOG_PREFIX, str(e))
            return accepted, s
        accepted.append(member)
        previous = member.unknowns
    return accepted, None
