"""Tests for the Domain model, named domains and domain files."""

import json
import math
import sys
import unittest
from pathlib import Path

import numpy as np
import pytest

# Add parent directory for imports
SCRIPT_DIR = Path(__file__).resolve().parent
PACKAGE_ROOT = SCRIPT_DIR.parent
if str(PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(PACKAGE_ROOT))

from domains import (
    Arc,
    Domain,
    Segment,
    construct_domain,
    disk,
    domain_contains,
    ellipse,
    load_domain,
    make_named,
    parse_shorthand,
    regular_polygon,
    resolve_domain,
    save_domain,
    square,
)
from geometry import Point, hausdorff_distance
from utils.errors import (
    DomainInvariantError,
    DomainParseError,
    NotClosed,
    NotConvex,
    NotSymmetric,
    OutOfSlab,
)


def _closed_chain(vertices):
    n = len(vertices)
    return [Segment(Point(*vertices[i]), Point(*vertices[(i + 1) % n])) for i in range(n)]


class TestConstruction(unittest.TestCase):
    """Tests for the construction invariants, checked in order."""

    def test_gap_is_not_closed(self):
        pieces = [
            Segment(Point(1, 0), Point(0, 1)),
            Segment(Point(0, 1), Point(-1, 0)),
            Segment(Point(-1, 0), Point(0, -1)),
            Segment(Point(0, -1), Point(1, 0.5)),
        ]
        with self.assertRaises(NotClosed) as ctx:
            construct_domain(pieces)
        self.assertEqual(ctx.exception.piece_index, 3)
        self.assertIn("NotClosed", str(ctx.exception))

    def test_odd_piece_count_is_not_symmetric(self):
        with self.assertRaises(NotSymmetric):
            construct_domain(_closed_chain([(1, 0), (-0.5, 1), (-0.5, -1)]))

    def test_unmatched_partner_is_not_symmetric(self):
        with self.assertRaises(NotSymmetric) as ctx:
            construct_domain(_closed_chain([(1, 0), (0, 1), (-1, 0), (0, -2)]))
        self.assertEqual(ctx.exception.piece_index, 2)

    def test_reflex_corner_is_not_convex(self):
        chain = _closed_chain([(1, 0), (0.2, 0.2), (0, 1), (-1, 0), (-0.2, -0.2), (0, -1)])
        with self.assertRaises(NotConvex):
            construct_domain(chain)

    def test_invariant_errors_share_a_base(self):
        with self.assertRaises(DomainInvariantError):
            construct_domain(_closed_chain([(1, 0), (-0.5, 1), (-0.5, -1)]))

    def test_arc_needs_positive_span(self):
        with self.assertRaises(DomainInvariantError):
            Arc(Point(0, 0), 1.0, 1.0, 0.0, 1.0, 0.5)

    def test_polygonize_n_lower_bound(self):
        with self.assertRaises(ValueError):
            disk(1.0, polygonize_n=4)


class TestQueries(unittest.TestCase):
    """Tests for support, chords, area and containment."""

    @classmethod
    def setUpClass(cls):
        cls.square = square(1.0)
        cls.disk = disk(1.0)
        cls.hexagon = regular_polygon(6, 1.0)

    def test_square_support_on_edge(self):
        s = self.square.support(0.0)
        self.assertAlmostEqual(s.h, 0.5)
        self.assertTrue(s.is_segment)
        self.assertTrue(s.apex.is_close(Point(0.5, 0.0)))

    def test_square_support_at_corner(self):
        s = self.square.support(math.pi / 4)
        self.assertAlmostEqual(s.h, math.sqrt(2) / 2)
        self.assertFalse(s.is_segment)
        self.assertTrue(s.apex.is_close(Point(0.5, 0.5)))

    def test_disk_support_is_radius(self):
        for theta in (0.0, 0.3, 2.0, 5.5):
            self.assertAlmostEqual(self.disk.support_height(theta), 1.0, places=12)

    def test_chord_width(self):
        c = self.square.chord(0.0, 0.0)
        self.assertAlmostEqual(c.width, 1.0)
        disk_chord = self.disk.chord(0.7, 0.6)
        self.assertAlmostEqual(disk_chord.width, 1.6, places=10)

    def test_chord_outside_slab(self):
        with self.assertRaises(OutOfSlab):
            self.square.chord(0.0, 0.6)

    def test_areas(self):
        self.assertAlmostEqual(self.square.area(), 1.0, places=12)
        self.assertAlmostEqual(self.disk.area(), math.pi, places=12)
        self.assertAlmostEqual(ellipse(2.0, 1.0).area(), 2 * math.pi, places=12)
        self.assertAlmostEqual(self.hexagon.area(), 3 * math.sqrt(3) / 2, places=12)

    def test_contains(self):
        self.assertTrue(self.disk.contains(Point(0.5, 0.5)))
        self.assertFalse(self.disk.contains(Point(0.8, 0.8)))
        inside = self.square.contains(np.array([[0.5, 0.5], [0.51, 0.0]]))
        self.assertEqual(inside.tolist(), [True, False])

    def test_domain_contains(self):
        self.assertTrue(domain_contains(self.disk, self.square))
        self.assertFalse(domain_contains(self.square, self.disk))

    def test_radial_point(self):
        self.assertTrue(self.square.radial_point(0.0).is_close(Point(0.5, 0.0)))
        p = self.disk.radial_point(1.0)
        self.assertAlmostEqual(p.norm(), 1.0, places=10)
        self.assertAlmostEqual(p.angle(), 1.0, places=10)

    def test_normal_cone_at_corner(self):
        lo, hi = self.square.normal_cone(Point(0.5, 0.5))
        self.assertAlmostEqual(lo, 0.0)
        self.assertAlmostEqual(hi, math.pi / 2)

    def test_normal_cone_on_smooth_boundary(self):
        lo, hi = self.disk.normal_cone(Point.polar(1.0, 0.4))
        self.assertAlmostEqual(lo, hi)
        self.assertAlmostEqual(lo, 0.4, places=9)

    def test_circumradius(self):
        self.assertAlmostEqual(self.square.circumradius(), math.sqrt(2) / 2)
        self.assertGreaterEqual(self.disk.circumradius(), 1.0)
        self.assertLess(self.disk.circumradius(), 1.0001)


class TestPolygonize(unittest.TestCase):
    """Tests for the cached polygonization."""

    def test_vertex_count_and_symmetry(self):
        poly = disk(1.0).polygonize(64)
        self.assertEqual(len(poly), 128)
        self.assertTrue(poly.is_symmetric())

    def test_vertices_lie_on_boundary(self):
        radii = np.hypot(*ellipse(1.0, 1.0).polygonize(32).coords.T)
        np.testing.assert_allclose(radii, 1.0, atol=1e-12)

    def test_converges_to_disk(self):
        d = disk(1.0)
        self.assertLess(hausdorff_distance(d.polygonize(256), d.polygon), 1e-4)

    def test_area_grows_with_vertex_count(self):
        for domain in (disk(1.0), ellipse(2.0, 1.0, 0.4)):
            areas = [domain.polygonize(n).area() for n in (8, 16, 32, 64, 128)]
            self.assertTrue(all(a < b for a, b in zip(areas, areas[1:], strict=False)))
            self.assertLess(areas[-1], domain.area())

    def test_vertices_under_support_lines(self):
        for domain in (disk(1.0), ellipse(2.0, 1.0, 0.4), regular_polygon(10, 1.0)):
            coords = domain.polygonize(64).coords
            for theta in np.linspace(0.0, 2 * math.pi, 360, endpoint=False):
                u = np.array([math.cos(theta), math.sin(theta)])
                self.assertLessEqual(float(np.max(coords @ u)), domain.support_height(float(theta)) + 1e-9)

    def test_hausdorff_to_scaled_disk(self):
        inner, outer = disk(1.0).polygonize(256), disk(1.1).polygonize(256)
        self.assertAlmostEqual(hausdorff_distance(inner, outer), 0.1, places=9)

    def test_too_small(self):
        with self.assertRaises(ValueError):
            disk(1.0).polygonize(4)


class TestSupportAndChords(unittest.TestCase):
    """Central symmetry of h and concavity of chord widths."""

    def setUp(self):
        self.domains = [
            disk(1.0),
            ellipse(2.0, 1.0, 0.4),
            regular_polygon(6, 1.0),
            square(1.0),
            parse_shorthand("parallelogram:1:0:0.5:1"),
        ]

    def test_support_is_even(self):
        for domain in self.domains:
            for deg in range(360):
                theta = math.radians(deg)
                self.assertAlmostEqual(
                    domain.support_height(theta), domain.support_height(theta + math.pi), delta=1e-12
                )

    def test_width_is_concave_in_t(self):
        for domain in self.domains:
            for theta in np.linspace(0.0, math.pi, 7, endpoint=False):
                h = domain.support_height(float(theta))
                widths = [domain.chord(float(theta), float(t)).width for t in np.linspace(-h, h, 41)[1:-1]]
                for left, mid, right in zip(widths, widths[1:], widths[2:], strict=False):
                    self.assertGreaterEqual(mid, 0.5 * (left + right) - 1e-9)


class TestTransformed(unittest.TestCase):
    """Tests for linear images of domains."""

    def test_stretch_disk_to_ellipse(self):
        image = disk(1.0).transformed([[2.0, 0.0], [0.0, 1.0]])
        self.assertAlmostEqual(image.area(), 2 * math.pi, places=10)
        self.assertAlmostEqual(image.support_height(0.0), 2.0, places=10)

    def test_reflection_keeps_orientation(self):
        image = regular_polygon(6, 1.0).transformed([[1.0, 0.0], [0.0, -1.0]])
        self.assertAlmostEqual(image.area(), 3 * math.sqrt(3) / 2, places=12)

    def test_singular_map_rejected(self):
        with self.assertRaises(ValueError):
            square(1.0).transformed([[1.0, 2.0], [2.0, 4.0]])


class TestShorthand:
    """Tests for the kind:arg:arg parser."""

    def test_kinds(self):
        assert len(parse_shorthand("ngon:10:1").pieces) == 10
        assert parse_shorthand("square:2").area() == pytest.approx(4.0)
        assert parse_shorthand("ellipse:2:1:0.3").area() == pytest.approx(2 * math.pi)
        assert parse_shorthand("parallelogram:1:0:0.5:1").area() == pytest.approx(1.0)

    def test_make_named_matches_shorthand(self):
        assert make_named("ngon", 6, 1.0).to_dict() == parse_shorthand("ngon:6:1").to_dict()
        assert make_named("disk", 2.0).area() == pytest.approx(4 * math.pi)

    def test_odd_ngon(self):
        with pytest.raises(NotSymmetric):
            parse_shorthand("ngon:5:1")

    @pytest.mark.parametrize("text", ["blob:1", "disk:x", "disk:1:2", "disk:-1", "ngon:6.5:1"])
    def test_bad_shorthand(self, text):
        with pytest.raises(DomainParseError):
            parse_shorthand(text)


class TestDomainFiles:
    """Tests for JSON domain files."""

    def test_save_and_load(self, tmp_path):
        path = tmp_path / "hexagon.json"
        original = regular_polygon(6, 1.0, polygonize_n=64)
        save_domain(original, path)
        loaded = load_domain(path)
        assert loaded.to_dict() == original.to_dict()
        assert loaded.polygonize_n == 64

    def test_arc_file(self, tmp_path):
        path = tmp_path / "disk.json"
        save_domain(disk(2.0), path)
        assert load_domain(path).area() == pytest.approx(4 * math.pi)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(DomainParseError):
            load_domain(path)

    def test_unknown_piece_kind(self, tmp_path):
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"pieces": [{"spline": {}}]}))
        with pytest.raises(DomainParseError):
            load_domain(path)

    def test_file_wins_over_shorthand(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        save_domain(square(1.0), tmp_path / "disk:1")
        assert resolve_domain("disk:1").is_polygon
        assert isinstance(resolve_domain("disk:2"), Domain)
        assert not resolve_domain("disk:2").is_polygon


if __name__ == "__main__":
    unittest.main()
