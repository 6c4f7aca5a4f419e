"""Analyses of origin-symmetric convex domains.

Modules:
    anchored: Anchored triangles, the A(θ) profile, critical triangles and Δ(K)
    covering: Critical lattices and covering checks
    inextensibility: Inextensibility verdict, interspersion, extension witnesses
    billiards: Outer billiard triangles and the Sas bound
    family: The disk-square family of inextensible domains

Usage:
    from domains import disk
    from analyzers import critical_determinant, inextensibility_verdict

    K = disk(1.0)
    critical_determinant(K)           # 3√3/2
    inextensibility_verdict(K).inextensible
"""

from .anchored import (
    AnchoredTriangle,
    AreaProfile,
    CriticalTriangle,
    anchor_angles,
    anchored_area,
    anchored_triangle,
    area_profile,
    brute_max_triangle,
    critical_determinant,
    critical_triangles,
    max_anchored_area,
    six_anchor_angles,
)
from .billiards import SasCheck, outer_billiard_triangle, sas_check, sas_lower_bound, side_midpoints
from .covering import (
    CoveringReport,
    covering_check,
    covering_density,
    critical_hexagon,
    critical_lattice,
    critical_lattices,
    lattice_from_triangle,
)
from .family import FamilyParams, build_family_domain, family_residuals, scan_family, solve_family
from .inextensibility import (
    ExtensionWitness,
    InextensibilityVerdict,
    all_pairs_interspersed,
    circle_of_triangles_check,
    extension_witness,
    hull_superdomain,
    inextensibility_verdict,
    interspersion_check,
)

__all__ = [
    "AnchoredTriangle",
    "AreaProfile",
    "CoveringReport",
    "CriticalTriangle",
    "ExtensionWitness",
    "FamilyParams",
    "InextensibilityVerdict",
    "SasCheck",
    "all_pairs_interspersed",
    "anchor_angles",
    "anchored_area",
    "anchored_triangle",
    "area_profile",
    "brute_max_triangle",
    "build_family_domain",
    "circle_of_triangles_check",
    "covering_check",
    "covering_density",
    "critical_determinant",
    "critical_hexagon",
    "critical_lattice",
    "critical_lattices",
    "critical_triangles",
    "extension_witness",
    "family_residuals",
    "hull_superdomain",
    "inextensibility_verdict",
    "interspersion_check",
    "lattice_from_triangle",
    "max_anchored_area",
    "outer_billiard_triangle",
    "sas_check",
    "sas_lower_bound",
    "scan_family",
    "side_midpoints",
    "six_anchor_angles",
    "solve_family",
]
