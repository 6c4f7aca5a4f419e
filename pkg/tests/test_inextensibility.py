"""Tests for the inextensibility verdict, interspersion and extension witnesses."""

import math
import sys
import unittest
from pathlib import Path

# Add parent directory for imports
SCRIPT_DIR = Path(__file__).resolve().parent
PACKAGE_ROOT = SCRIPT_DIR.parent
if str(PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(PACKAGE_ROOT))

from analyzers.anchored import critical_determinant
from analyzers.inextensibility import (
    all_pairs_interspersed,
    circle_of_triangles_check,
    extension_witness,
    hull_superdomain,
    inextensibility_verdict,
    interspersion_check,
)
from domains import Arc, Segment, construct_domain, disk, domain_contains, regular_polygon, square
from geometry import Point
from utils.errors import InvalidTriple, NotApplicable, NotExtensible

SQRT3 = math.sqrt(3)


class TestVerdict(unittest.TestCase):
    """Tests for inextensibility_verdict."""

    def test_square_is_inextensible(self):
        verdict = inextensibility_verdict(square(1.0))
        self.assertTrue(verdict.inextensible)
        self.assertLess(verdict.relative_spread, 1e-9)
        self.assertIsNone(verdict.witness_theta)

    def test_regular_6n_plus_4_gons(self):
        for n in (10, 16):
            verdict = inextensibility_verdict(regular_polygon(n, 1.0))
            self.assertTrue(verdict.inextensible, f"{n}-gon")
            self.assertLess(verdict.relative_spread, 1e-7)

    def test_disk_is_inextensible(self):
        self.assertTrue(inextensibility_verdict(disk(1.0)).inextensible)

    def test_hexagon_is_extensible(self):
        verdict = inextensibility_verdict(regular_polygon(6, 1.0))
        self.assertFalse(verdict.inextensible)
        self.assertAlmostEqual(verdict.relative_spread, 0.25, places=6)
        self.assertAlmostEqual(verdict.a_max, 3 * SQRT3 / 4, places=9)
        self.assertAlmostEqual(math.cos(6 * verdict.witness_theta), -1.0, places=6)

    def test_grid_floor(self):
        with self.assertRaises(ValueError):
            inextensibility_verdict(square(1.0), n=180)

    def test_to_dict(self):
        data = inextensibility_verdict(square(1.0)).to_dict()
        self.assertTrue(data["inextensible"])
        self.assertIn("witness_theta_rad", data)


class TestInterspersion(unittest.TestCase):
    """Tests for interspersion_check."""

    def test_identical_triples(self):
        self.assertTrue(interspersion_check((0.1, 1.0, 2.0), (0.1, 1.0, 2.0)))

    def test_perfect_alternation(self):
        a = (0.0, 2 * math.pi / 3, 4 * math.pi / 3)
        b = (math.pi / 3, math.pi, 5 * math.pi / 3)
        self.assertTrue(interspersion_check(a, b))

    def test_clustered_triples(self):
        self.assertFalse(interspersion_check((0.0, 0.1, 0.2), (1.0, 1.1, 1.2)))

    def test_shifted_window(self):
        a = (0.0, 2 * math.pi / 3, 4 * math.pi / 3)
        b = (math.pi / 3 + 2 * math.pi, 3 * math.pi, 5 * math.pi / 3 + 2 * math.pi)
        self.assertTrue(interspersion_check(a, b))

    def test_invalid_triples(self):
        for bad in ((0.3, 0.2, 0.1), (0.1, 0.2), (0.0, 1.0, 7.0)):
            with self.assertRaises(InvalidTriple):
                interspersion_check(bad, (0.0, 1.0, 2.0))

    def test_all_pairs(self):
        self.assertTrue(all_pairs_interspersed(square(1.0)))
        self.assertTrue(all_pairs_interspersed(regular_polygon(10, 1.0)))
        self.assertTrue(all_pairs_interspersed(regular_polygon(16, 1.0)))

    def test_single_triangle_not_applicable(self):
        with self.assertRaises(NotApplicable):
            all_pairs_interspersed(regular_polygon(6, 1.0))


class TestCircleOfTriangles(unittest.TestCase):
    """Tests for circle_of_triangles_check."""

    def test_disk(self):
        self.assertTrue(circle_of_triangles_check(disk(1.0), 72))

    def test_hexagon(self):
        self.assertFalse(circle_of_triangles_check(regular_polygon(6, 1.0), 72))

    def test_agrees_with_verdict(self):
        for domain in (square(1.0), regular_polygon(6, 1.0), regular_polygon(10, 1.0)):
            verdict = inextensibility_verdict(domain)
            self.assertEqual(circle_of_triangles_check(domain, 72), verdict.inextensible)

    def test_too_few_points(self):
        with self.assertRaises(ValueError):
            circle_of_triangles_check(square(1.0), 12)


class TestExtension(unittest.TestCase):
    """Tests for hull_superdomain and extension_witness."""

    def test_parallelogram_superdomain_grows_delta(self):
        bigger = hull_superdomain(square(1.0), Point(0.6, 0.0))
        self.assertEqual(len(bigger.pieces), 6)
        self.assertAlmostEqual(bigger.area(), 1.1, places=12)
        # every symmetric hexagon tiles, so Δ equals its area
        self.assertAlmostEqual(critical_determinant(bigger), 1.1, places=9)

    def test_hexagon_witness(self):
        hexagon = regular_polygon(6, 1.0)
        witness = extension_witness(hexagon, 0.05)
        delta = critical_determinant(hexagon)
        self.assertLess(abs(witness.delta_change) / delta, 1e-6)
        self.assertGreaterEqual(witness.area_change, 1e-4)
        self.assertTrue(domain_contains(witness.superdomain, hexagon))

    def test_large_bump_raises_delta(self):
        witness = extension_witness(regular_polygon(6, 1.0), 1.0)
        self.assertGreater(witness.delta_change, 0.0)

    def test_curved_witness_contains_domain(self):
        # two unit half-disks joined by the segments y = ±1, |x| <= 1
        stadium = construct_domain(
            [
                Arc(Point(1.0, 0.0), 1.0, 1.0, 0.0, -math.pi / 2, math.pi / 2),
                Segment(Point(1.0, 1.0), Point(-1.0, 1.0)),
                Arc(Point(-1.0, 0.0), 1.0, 1.0, 0.0, math.pi / 2, 3 * math.pi / 2),
                Segment(Point(-1.0, -1.0), Point(1.0, -1.0)),
            ]
        )
        self.assertFalse(inextensibility_verdict(stadium).inextensible)
        witness = extension_witness(stadium, 1e-3)
        self.assertTrue(domain_contains(witness.superdomain, stadium))
        self.assertGreater(witness.area_change, 0.0)
        delta = critical_determinant(stadium)
        self.assertLess(abs(witness.delta_change), 1e-6 * delta)

    def test_curved_superdomain_keeps_pieces(self):
        bigger = hull_superdomain(disk(1.0), Point(1.1, 0.0))
        self.assertTrue(domain_contains(bigger, disk(1.0)))
        self.assertGreater(bigger.area(), math.pi)
        # two tangent segments through each of ±p
        self.assertEqual(sum(isinstance(p, Segment) for p in bigger.pieces), 4)
        self.assertTrue(bigger.contains(Point(1.1, 0.0)))

    def test_point_inside_is_rejected(self):
        with self.assertRaises(ValueError):
            hull_superdomain(disk(1.0), Point(0.5, 0.0))

    def test_square_has_no_witness(self):
        with self.assertRaises(NotExtensible):
            extension_witness(square(1.0), 0.05)

    def test_eps_must_be_positive(self):
        with self.assertRaises(ValueError):
            extension_witness(regular_polygon(6, 1.0), 0.0)


if __name__ == "__main__":
    unittest.main()
