"""
Subcommands of the ``inextensible`` CLI.

==============  =========================================================
command         output
==============  =========================================================
analyze         JSON: area, delta, a_max, inextensible, spread, sas_ratio
profile         CSV ``theta_rad,area``, one row per grid angle
lattice         JSON: critical lattice basis, determinant and density
cover-check     JSON covering report of the critical lattice
family          JSON family parameters, optionally a domain file
render          SVG of the domain, critical triangles, lattice translates
==============  =========================================================
"""

from __future__ import annotations

from pathlib import Path

from analyzers.anchored import CriticalTriangle, area_profile, critical_triangles
from analyzers.billiards import sas_check
from analyzers.covering import covering_check, covering_density, critical_lattice, lattice_from_triangle
from analyzers.family import build_family_domain, solve_family
from analyzers.inextensibility import extension_witness, inextensibility_verdict
from domains.io import save_domain

from .base import BaseCommand, CommandResult
from .formats import format_json, format_profile_csv
from .render import render_svg

# Where the family command writes the member when --domain-out is not given
FAMILY_DOMAIN_FILE = "family_s{s:g}.json"


def _write_or_return(result: CommandResult, output: str | None) -> CommandResult:
    """Write the result's text to ``output`` when a path was given."""
    if output:
        Path(output).write_text(result.output, encoding="utf-8")
        result.data["written_to"] = output
        result.output = ""
    return result


class AnalyzeCommand(BaseCommand):
    """Area, critical determinant, inextensibility verdict and Sas ratio."""

    name = "analyze"

    def validate(self) -> str | None:
        witness = self.args.witness
        if witness is not None and not witness > 0.0:
            return f"--witness must be positive, got {witness}"
        return None

    def execute(self) -> CommandResult:
        domain = self.load_domain()
        n = self.args.n or self.settings.profile_n
        verdict = inextensibility_verdict(domain, n, self.settings.verdict_tol)
        sas = sas_check(domain, n, a_max=verdict.a_max)
        report = {
            "area": sas.area,
            "delta": 2.0 * verdict.a_max,
            "a_max": verdict.a_max,
            "a_min": verdict.a_min,
            "inextensible": verdict.inextensible,
            "spread": verdict.relative_spread,
            "sas_ratio": sas.ratio,
            "witness_theta_rad": verdict.witness_theta,
        }
        result = CommandResult.ok("analysis complete", verdict=verdict, sas=sas)
        if self.args.witness is not None and not verdict.inextensible:
            witness = extension_witness(domain, self.args.witness, n, self.settings.verdict_tol)
            report["witness"] = witness.to_dict()
        elif self.args.witness is not None:
            result.add_warning("domain is inextensible; no extension witness")
        if not sas.bound_holds:
            result.add_warning(f"Sas ratio {sas.ratio:.12g} is below {sas.lower_bound:.12g}")
        result.output = format_json(report)
        return result


class ProfileCommand(BaseCommand):
    """A(θ) on the grid iπ/n as CSV."""

    name = "profile"

    def execute(self) -> CommandResult:
        domain = self.load_domain()
        n = self.args.n or self.settings.profile_n
        profile = area_profile(domain, n, refine=False)
        result = CommandResult.ok(f"profile with {n} rows", output=format_profile_csv(profile), profile=profile)
        return _write_or_return(result, self.args.output)


class LatticeCommand(BaseCommand):
    """Basis, determinant and covering density of the critical lattice."""

    name = "lattice"

    def execute(self) -> CommandResult:
        domain = self.load_domain()
        n = self.args.n or self.settings.profile_n
        crit = critical_triangles(domain, self.settings.critical_tol, n)
        first = crit[0]
        lattice = lattice_from_triangle(first.triangle)
        report = lattice.to_dict()
        report["density"] = covering_density(domain, lattice)
        report["triangle"] = first.to_dict()
        report["critical_triangles"] = len(crit)
        return CommandResult.ok("critical lattice", output=format_json(report), lattice=lattice)


class CoverCheckCommand(BaseCommand):
    """Sample the critical lattice's fundamental cell for uncovered points."""

    name = "cover-check"

    def execute(self) -> CommandResult:
        domain = self.load_domain()
        n = self.args.n or self.settings.profile_n
        resolution = self.args.resolution or self.settings.cover_resolution
        report = covering_check(domain, critical_lattice(domain, n), resolution)
        result = CommandResult.ok("covering checked", output=format_json(report.to_dict()), report=report)
        if not report.covered:
            result.add_warning(f"{len(report.uncovered)} of {report.sampled_points} samples are uncovered")
        return result


class FamilyCommand(BaseCommand):
    """Solve for one member of the disk-square family."""

    name = "family"

    def validate(self) -> str | None:
        if self.args.s < 0.0:
            return f"--s must be >= 0, got {self.args.s}"
        return None

    def execute(self) -> CommandResult:
        params = solve_family(self.args.s, grid=self.settings.family_grid)
        report = params.to_dict()
        path = self.args.domain_out or FAMILY_DOMAIN_FILE.format(s=self.args.s)
        save_domain(build_family_domain(params, polygonize_n=self.settings.polygonize_n), path)
        report["domain_file"] = path
        return CommandResult.ok(f"family member s={self.args.s}", output=format_json(report), params=params)


class RenderCommand(BaseCommand):
    """SVG of the domain with optional critical triangles and lattice."""

    name = "render"

    def validate(self) -> str | None:
        if self.args.triangles < 0:
            return f"--triangles must be >= 0, got {self.args.triangles}"
        return None

    def execute(self) -> CommandResult:
        domain = self.load_domain()
        n = self.args.n or self.settings.profile_n
        crit: list[CriticalTriangle] = []
        if self.args.triangles or self.args.lattice:
            crit = critical_triangles(domain, self.settings.critical_tol, n)
        triangles = [c.triangle for c in crit[: self.args.triangles]]
        lattice = lattice_from_triangle(crit[0].triangle) if self.args.lattice else None
        svg = render_svg(domain, triangles, lattice, self.settings.svg_size, self.settings.svg_padding)
        result = CommandResult.ok("rendered", output=svg)
        return _write_or_return(result, self.args.output)


COMMANDS: dict[str, type[BaseCommand]] = {
    cls.name: cls
    for cls in (AnalyzeCommand, ProfileCommand, LatticeCommand, CoverCheckCommand, FamilyCommand, RenderCommand)
}
