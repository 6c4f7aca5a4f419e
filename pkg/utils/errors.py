"""
Exception hierarchy for the inextensible package.

Every library error carries an ``ErrorCode`` so the command line front end
can map failures onto exit codes without inspecting messages:

- ``PARSE`` / ``CONFIG`` / ``IO``: bad input files, shorthand strings or
  settings (exit 1)
- ``INVARIANT``: a geometric invariant was violated (exit 2)
- ``SOLVER``: an iterative solver did not converge (exit 3)

Domain invariant errors also name the invariant and, where one exists, the
index of the offending boundary piece.
"""

from __future__ import annotations

from enum import Enum


class ErrorCode(Enum):
    """Categorized error codes for library and command failures."""

    # No error
    NONE = "none"

    # Malformed input: domain files, shorthand strings, argument values
    PARSE = "parse"

    # A geometric invariant does not hold
    INVARIANT = "invariant"

    # Iterative solver failed to converge
    SOLVER = "solver"

    # Invalid or unreadable settings
    CONFIG = "config"

    # File system errors
    IO = "io"

    # Unknown/unclassified errors
    UNKNOWN = "unknown"


class InextensibleError(Exception):
    """Base class for all errors raised by this package.

    Attributes:
        error_code: Category used by the CLI to choose an exit code.
        invariant: Name of the violated invariant, if any.
        piece_index: Index of the offending boundary piece, if any.
    """

    error_code: ErrorCode = ErrorCode.UNKNOWN
    invariant: str | None = None

    def __init__(self, message: str, piece_index: int | None = None):
        self.piece_index = piece_index
        if piece_index is not None:
            message = f"{message} (piece {piece_index})"
        if self.invariant:
            message = f"[{self.invariant}] {message}"
        super().__init__(message)


class DomainInvariantError(InextensibleError):
    """A Domain failed one of its construction invariants."""

    error_code = ErrorCode.INVARIANT
    invariant = "domain"


class NotClosed(DomainInvariantError):
    invariant = "NotClosed"


class NotConvex(DomainInvariantError):
    invariant = "NotConvex"


class NotSymmetric(DomainInvariantError):
    invariant = "NotSymmetric"


class OriginNotInterior(DomainInvariantError):
    invariant = "OriginNotInterior"


class OutOfSlab(InextensibleError):
    """A chord was requested outside the slab -h(θ) <= t <= h(θ)."""

    error_code = ErrorCode.INVARIANT
    invariant = "OutOfSlab"


class DegenerateTriangle(InextensibleError):
    error_code = ErrorCode.INVARIANT
    invariant = "DegenerateTriangle"


class SingularLattice(InextensibleError):
    error_code = ErrorCode.INVARIANT
    invariant = "SingularLattice"


class EmptyPolygon(InextensibleError):
    error_code = ErrorCode.INVARIANT
    invariant = "EmptyPolygon"


class InvalidTriple(InextensibleError):
    """An anchor-angle triple is not strictly increasing inside a 2π window."""

    error_code = ErrorCode.INVARIANT
    invariant = "InvalidTriple"


class NotApplicable(InextensibleError):
    """The check needs at least two distinct critical triangles."""

    error_code = ErrorCode.INVARIANT
    invariant = "NotApplicable"


class NotExtensible(InextensibleError):
    """An extension witness was requested for an inextensible domain."""

    error_code = ErrorCode.INVARIANT
    invariant = "NotExtensible"


class ClosureFailure(InextensibleError):
    """Family boundary pieces do not meet within tolerance.

    Attributes:
        max_gap: Largest distance between consecutive piece endpoints.
    """

    error_code = ErrorCode.INVARIANT
    invariant = "ClosureFailure"

    def __init__(self, message: str, max_gap: float):
        self.max_gap = max_gap
        super().__init__(f"{message}: max gap {max_gap:.3e}")


class NoConvergence(InextensibleError):
    """The family solver did not reach its acceptance thresholds.

    Attributes:
        residuals: Final residual values keyed by name.
    """

    error_code = ErrorCode.SOLVER
    invariant = "NoConvergence"

    def __init__(self, message: str, residuals: dict[str, float]):
        self.residuals = dict(residuals)
        detail = ", ".join(f"{k}={v:.3e}" for k, v in sorted(self.residuals.items()))
        super().__init__(f"{message} ({detail})")


class DomainParseError(InextensibleError):
    """A domain file or shorthand string could not be parsed."""

    error_code = ErrorCode.PARSE


class ConfigError(InextensibleError):
    """Settings file is unreadable or has wrongly typed values."""

    error_code = ErrorCode.CONFIG
