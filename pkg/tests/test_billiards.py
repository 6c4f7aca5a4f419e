"""Tests for outer billiard triangles and the Sas bound."""

import math
import sys
from pathlib import Path

import pytest

# Add parent directory for imports
SCRIPT_DIR = Path(__file__).resolve().parent
PACKAGE_ROOT = SCRIPT_DIR.parent
if str(PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(PACKAGE_ROOT))

from analyzers.anchored import critical_triangles
from analyzers.billiards import outer_billiard_triangle, sas_check, sas_lower_bound, side_midpoints
from domains import disk, ellipse, regular_polygon, square
from geometry import Point, Triangle
from utils.errors import DegenerateTriangle

SAS_RATIO = 3 * math.sqrt(3) / (4 * math.pi)


class TestOuterBilliardTriangle:
    """Tests for outer_billiard_triangle."""

    def test_right_triangle(self):
        outer = outer_billiard_triangle(Triangle(Point(0, 0), Point(1, 0), Point(0, 1)))
        assert outer.vertices == (Point(1, 1), Point(-1, 1), Point(1, -1))

    def test_equilateral_doubles(self):
        tri = Triangle(*(Point.polar(1.0, 0.2 + 2 * math.pi * k / 3) for k in range(3)))
        for v in outer_billiard_triangle(tri).vertices:
            assert v.norm() == pytest.approx(2.0)

    @pytest.mark.parametrize(
        "tri",
        [
            Triangle(Point(0.3, -0.2), Point(1.7, 0.4), Point(-0.6, 2.2)),
            Triangle(Point(-1.0, -1.0), Point(5.0, 0.5), Point(0.25, 0.75)),
        ],
    )
    def test_midpoints_recover_input(self, tri):
        mids = side_midpoints(outer_billiard_triangle(tri))
        for got, want in zip(mids.vertices, tri.vertices, strict=True):
            assert got.distance(want) <= 1e-12

    def test_critical_vertices_are_on_boundary(self):
        hexagon = regular_polygon(6, 1.0)
        tri = critical_triangles(hexagon)[0].triangle
        outer = outer_billiard_triangle(tri)
        # the circumscribed triangle touches K at its side midpoints
        for v in side_midpoints(outer).vertices:
            assert v.norm() == pytest.approx(1.0)

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateTriangle):
            outer_billiard_triangle(Triangle(Point(0, 0), Point(1, 1), Point(2, 2)))


class TestSas:
    """Tests for the Sas bound and its corollary."""

    def test_lower_bound(self):
        assert sas_lower_bound(3) == pytest.approx(0.413497, abs=1e-6)
        assert sas_lower_bound(4) == pytest.approx(2 / math.pi)
        with pytest.raises(ValueError):
            sas_lower_bound(2)

    def test_ellipse_equality(self):
        check = sas_check(ellipse(2.0, 1.0))
        assert check.ratio == pytest.approx(SAS_RATIO, abs=1e-9)
        assert check.corollary_bound == pytest.approx(2 * math.pi, abs=1e-8)
        assert check.area == pytest.approx(2 * math.pi)

    def test_disk_equality(self):
        assert sas_check(disk(1.0)).ratio == pytest.approx(SAS_RATIO, abs=1e-9)

    def test_square(self):
        check = sas_check(square(1.0))
        assert check.ratio == pytest.approx(0.5)
        assert check.bound_holds

    @pytest.mark.parametrize("text", ["ngon:6:1", "ngon:10:1", "square:1", "parallelogram:1:0:0.3:1"])
    def test_bounds_hold(self, text):
        from domains import parse_shorthand

        domain = parse_shorthand(text)
        check = sas_check(domain)
        assert check.bound_holds
        assert check.corollary_holds
        assert domain.area() <= check.corollary_bound + 1e-9 * domain.area()

    def test_precomputed_a_max(self):
        check = sas_check(square(1.0), a_max=0.5)
        assert check.to_dict()["ratio"] == pytest.approx(0.5)
