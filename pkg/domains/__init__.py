"""Origin-symmetric convex domains with segment and elliptic-arc boundaries."""

from .domain import (
    Chord,
    Domain,
    SupportResult,
    area,
    chord,
    construct_domain,
    domain_contains,
    polygonize,
    support,
)
from .io import domain_from_dict, domain_to_json, load_domain, resolve_domain, save_domain
from .named import disk, ellipse, make_named, parallelogram, parse_shorthand, regular_polygon, square
from .pieces import Arc, BoundaryPiece, Segment

__all__ = [
    "Arc",
    "BoundaryPiece",
    "Chord",
    "Domain",
    "Segment",
    "SupportResult",
    "area",
    "chord",
    "construct_domain",
    "disk",
    "domain_contains",
    "domain_from_dict",
    "domain_to_json",
    "ellipse",
    "load_domain",
    "make_named",
    "parallelogram",
    "parse_shorthand",
    "polygonize",
    "regular_polygon",
    "resolve_domain",
    "save_domain",
    "square",
    "support",
]
