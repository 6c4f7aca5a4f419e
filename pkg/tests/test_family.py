"""Tests for the disk-square family of inextensible domains."""

import math
import sys
from pathlib import Path
from types import SimpleNamespace

import numpy as np
import pytest

# Add parent directory for imports
SCRIPT_DIR = Path(__file__).resolve().parent
PACKAGE_ROOT = SCRIPT_DIR.parent
if str(PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(PACKAGE_ROOT))

from analyzers.anchored import area_profile, critical_determinant
from analyzers.family import (
    REFERENCE_PARAMS,
    FamilyParams,
    build_family_domain,
    closure_equations,
    family_objective,
    family_pieces,
    family_residuals,
    initial_guess,
    scan_family,
    solve_family,
)
from analyzers.inextensibility import circle_of_triangles_check
from domains import Arc, Segment, disk
from geometry import hausdorff_distance
from utils.errors import ClosureFailure, NoConvergence

DELTA_DISK = 3 * math.sqrt(3) / 2


@pytest.fixture
def reference():
    return FamilyParams(0.1, *REFERENCE_PARAMS)


class TestFamilyParams:
    """Tests for FamilyParams serialization."""

    def test_to_dict_keys(self, reference):
        data = reference.to_dict()
        assert set(data) == {"s", "a", "T", "X", "Y", "junction_angles_rad", "residuals"}
        assert data["T"] == pytest.approx(0.0993399)

    def test_from_dict(self, reference):
        restored = FamilyParams.from_dict(reference.to_dict())
        np.testing.assert_allclose(restored.unknowns, reference.unknowns)
        assert restored.s == 0.1


class TestConstruction:
    """Tests for assembling family members."""

    def test_piece_layout(self, reference):
        pieces = family_pieces(reference)
        assert len(pieces) == 16
        assert sum(isinstance(p, Arc) for p in pieces) == 12
        assert sum(isinstance(p, Segment) for p in pieces) == 4

    def test_reference_member_is_valid(self, reference):
        domain = build_family_domain(reference)
        assert len(reference.junction_angles) == 16
        # rounded parameters leave only tiny reflex kinks
        assert min(reference.junction_angles) > -1e-4
        profile = area_profile(domain, 360)
        assert profile.relative_spread < 1e-3
        assert critical_determinant(domain) == pytest.approx(DELTA_DISK, rel=1e-3)

    def test_closure_equations_nearly_vanish(self, reference):
        assert np.max(np.abs(closure_equations(0.1, reference.unknowns))) < 1e-5

    def test_disk_member(self):
        domain = build_family_domain(FamilyParams(0.0, 0.0, 0.0, 1.0, 0.0))
        assert len(domain.pieces) == 12
        assert domain.area() == pytest.approx(math.pi)

    def test_perturbed_member_does_not_close(self):
        with pytest.raises(ClosureFailure) as ctx:
            build_family_domain(FamilyParams(0.1, 0.0996729, 0.0993399, 0.95, 0.299019))
        assert ctx.value.max_gap > 1e-3

    def test_residuals_of_reference_member(self, reference):
        residuals = family_residuals(reference, grid=360)
        assert residuals["convexity"] < 1e-4
        assert residuals["closure"] < 1e-5


class TestSolver:
    """Tests for solve_family and scan_family."""

    def test_negative_s(self):
        with pytest.raises(ValueError):
            solve_family(-0.1)

    def test_zero_is_the_disk(self):
        params = solve_family(0.0)
        assert params.unknowns.tolist() == [0.0, 0.0, 1.0, 0.0]
        domain = build_family_domain(params)
        assert hausdorff_distance(domain.polygonize(128), disk(1.0).polygonize(128)) < 1e-3
        assert critical_determinant(domain) == pytest.approx(DELTA_DISK, abs=1e-7)

    def test_initial_guess_interpolates(self):
        np.testing.assert_allclose(initial_guess(0.1), REFERENCE_PARAMS)
        np.testing.assert_allclose(initial_guess(0.0), [0.0, 0.0, 1.0, 0.0])

    @pytest.mark.slow
    def test_recovers_reference_member(self):
        params = solve_family(0.1)
        np.testing.assert_allclose(params.unknowns, REFERENCE_PARAMS, atol=1e-3)
        assert params.residuals["closure"] <= 1e-9
        assert params.residuals["spread"] <= 1e-6
        assert len(params.junction_angles) == 16

    @pytest.mark.slow
    @pytest.mark.parametrize("s", [0.05, 0.1])
    def test_delta_is_constant_along_family(self, s):
        domain = build_family_domain(solve_family(s))
        assert critical_determinant(domain) == pytest.approx(DELTA_DISK, abs=1e-7)

    @pytest.mark.slow
    def test_scan_accepts_small_s(self):
        accepted, failed = scan_family([0.0, 0.05, 0.1])
        assert failed is None
        assert [p.s for p in accepted] == [0.0, 0.05, 0.1]

    def test_scan_reports_first_failure(self, monkeypatch):
        import analyzers.family as family

        calls = []

        def fake_solve(s, start=None, grid=None):
            calls.append((s, start))
            if s > 0.2:
                raise NoConvergence(f"family solver failed at s={s}", {})
            return FamilyParams(s, 0.0, 0.0, 1.0, 0.0)

        monkeypatch.setattr(family, "solve_family", fake_solve)
        accepted, failed = family.scan_family([0.3, 0.1, 0.2, 0.4])
        assert [p.s for p in accepted] == [0.1, 0.2]
        assert failed == 0.3
        # continuation starts each solve from the previous member
        assert calls[0][1] is None
        np.testing.assert_allclose(calls[1][1], [0.0, 0.0, 1.0, 0.0])

    def test_variance_stage_runs_when_spread_misses(self, monkeypatch):
        import analyzers.family as family

        stages = []

        def fake_minimize(fun, x0, method, options):
            stages.append(options["maxiter"])
            return SimpleNamespace(x=np.asarray(x0, dtype=float), nit=0)

        spreads = iter([1e-3, 0.0])
        monkeypatch.setattr(family, "minimize", fake_minimize)
        monkeypatch.setattr(family, "root", lambda fun, x0, method, options: SimpleNamespace(success=True, x=x0))
        monkeypatch.setattr(
            family, "family_residuals", lambda params, grid: {"closure": 0.0, "convexity": 0.0, "spread": next(spreads)}
        )
        params = family.solve_family(0.1)
        assert stages == [family.NELDER_MEAD_OPTIONS["maxiter"], family.VARIANCE_STAGE_MAXITER]
        assert params.residuals["spread"] == 0.0

    def test_no_variance_stage_when_spread_passes(self, monkeypatch):
        import analyzers.family as family

        stages = []

        def fake_minimize(fun, x0, method, options):
            stages.append(options["maxiter"])
            return SimpleNamespace(x=np.asarray(x0, dtype=float), nit=0)

        monkeypatch.setattr(family, "minimize", fake_minimize)
        monkeypatch.setattr(family, "root", lambda fun, x0, method, options: SimpleNamespace(success=True, x=x0))
        monkeypatch.setattr(
            family, "family_residuals", lambda params, grid: {"closure": 0.0, "convexity": 0.0, "spread": 0.0}
        )
        family.solve_family(0.1)
        assert len(stages) == 1


class TestObjective:
    """Tests for family_objective."""

    def test_disk_member_is_a_zero(self):
        assert family_objective(0.0, np.array([0.0, 0.0, 1.0, 0.0]), grid=90) < 1e-12

    def test_variance_term_is_small_at_reference(self, reference):
        with_variance = family_objective(0.1, reference.unknowns, grid=90)
        assert with_variance >= family_objective(0.1, reference.unknowns)
        # rounded parameters keep A constant to about 1e-3 relative and close to 1e-5
        assert with_variance < 1e-6

    def test_shape_violation_dominates(self):
        assert family_objective(0.1, np.array([0.1, -0.05, 0.9, 0.3]), grid=90) >= 0.05**2


@pytest.mark.slow
def test_solved_member_is_a_circle_of_triangles():
    domain = build_family_domain(solve_family(0.1))
    assert circle_of_triangles_check(domain, 72, tol=1e-5)
