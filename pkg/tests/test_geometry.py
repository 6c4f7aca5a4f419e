"""Tests for points, triangles, convex polygons and lattices."""

import itertools
import math
import sys
import unittest
from pathlib import Path

import numpy as np

# Add parent directory for imports
SCRIPT_DIR = Path(__file__).resolve().parent
PACKAGE_ROOT = SCRIPT_DIR.parent
if str(PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(PACKAGE_ROOT))

from geometry import (
    ConvexPolygon,
    Lattice,
    Point,
    Triangle,
    convex_hull,
    hausdorff_distance,
    lattice_determinant,
    triangle_area,
)
from utils.errors import DegenerateTriangle, EmptyPolygon, NotConvex, SingularLattice


class TestPoint(unittest.TestCase):
    """Tests for Point arithmetic."""

    def test_arithmetic(self):
        p, q = Point(1.0, 2.0), Point(3.0, -1.0)
        self.assertEqual(p + q, Point(4.0, 1.0))
        self.assertEqual(p - q, Point(-2.0, 3.0))
        self.assertEqual(-p, Point(-1.0, -2.0))
        self.assertEqual(p.cross(q), -7.0)
        self.assertEqual(p.dot(q), 1.0)

    def test_polar(self):
        p = Point.polar(2.0, math.pi / 2)
        self.assertAlmostEqual(p.x, 0.0, places=12)
        self.assertAlmostEqual(p.y, 2.0, places=12)

    def test_non_finite_rejected(self):
        with self.assertRaises(Exception):
            Point(float("nan"), 0.0)


class TestTriangle(unittest.TestCase):
    """Tests for Triangle canonicalization and areas."""

    def test_unit_right_triangle_area(self):
        self.assertEqual(triangle_area(Point(0, 0), Point(1, 0), Point(0, 1)), 0.5)

    def test_equilateral_on_unit_circle(self):
        a, b, c = (Point.polar(1.0, 2 * math.pi * k / 3) for k in range(3))
        self.assertAlmostEqual(triangle_area(a, b, c), 3 * math.sqrt(3) / 4, places=12)

    def test_clockwise_input_is_reordered(self):
        tri = Triangle(Point(0, 0), Point(0, 1), Point(1, 0))
        self.assertGreater(tri.area, 0.0)
        self.assertEqual(tri.a, Point(0, 0))
        self.assertEqual(tri.b, Point(1, 0))

    def test_degenerate_rejected(self):
        tri = Triangle(Point(0, 0), Point(1, 1), Point(2, 2))
        self.assertTrue(tri.is_degenerate())
        with self.assertRaises(DegenerateTriangle):
            tri.require_nondegenerate()

    def test_negated_same_area(self):
        tri = Triangle(Point(0.2, 0.1), Point(1, 0.3), Point(-0.4, 0.9))
        self.assertAlmostEqual(tri.negated().area, tri.area, places=14)

    def test_same_vertex_set_ignores_order(self):
        t1 = Triangle(Point(0, 0), Point(1, 0), Point(0, 1))
        t2 = Triangle(Point(1, 0), Point(0, 1), Point(0, 0))
        self.assertTrue(t1.same_vertex_set(t2))
        self.assertFalse(t1.same_vertex_set(t1.negated()))


class TestConvexPolygon(unittest.TestCase):
    """Tests for ConvexPolygon and convex_hull."""

    def setUp(self):
        self.square = ConvexPolygon([Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)])

    def test_area_and_support(self):
        self.assertAlmostEqual(self.square.area(), 4.0)
        self.assertAlmostEqual(self.square.support(0.0), 1.0)
        self.assertAlmostEqual(self.square.support(math.pi / 4), math.sqrt(2))

    def test_reflex_vertex_rejected(self):
        with self.assertRaises(NotConvex):
            ConvexPolygon([Point(0, 0), Point(2, 0), Point(1, 0.2), Point(1, 2)])

    def test_clockwise_rejected(self):
        with self.assertRaises(NotConvex):
            ConvexPolygon([Point(-1, 1), Point(1, 1), Point(1, -1), Point(-1, -1)])

    def test_empty_rejected(self):
        with self.assertRaises(EmptyPolygon):
            ConvexPolygon([])

    def test_contains(self):
        inside = self.square.contains(np.array([[0.0, 0.0], [1.0, 0.5], [1.5, 0.0]]))
        self.assertEqual(inside.tolist(), [True, True, False])

    def test_is_symmetric(self):
        self.assertTrue(self.square.is_symmetric())
        shifted = ConvexPolygon(self.square.coords + np.array([0.5, 0.0]))
        self.assertFalse(shifted.is_symmetric())

    def test_hull_drops_interior_and_collinear_points(self):
        pts = [Point(0, 0), Point(2, 0), Point(1, 0), Point(2, 2), Point(0, 2), Point(1, 1)]
        hull = convex_hull(pts)
        self.assertEqual(len(hull), 4)
        self.assertGreater(hull.signed_area(), 0.0)
        self.assertAlmostEqual(hull.area(), 4.0)

    def test_hull_of_nothing(self):
        with self.assertRaises(EmptyPolygon):
            convex_hull([])

    def test_hausdorff_distance(self):
        bigger = self.square.scaled(2.0)
        self.assertAlmostEqual(hausdorff_distance(self.square, bigger), math.sqrt(2))
        self.assertEqual(hausdorff_distance(self.square, self.square), 0.0)


class TestLattice(unittest.TestCase):
    """Tests for Lattice."""

    def test_determinant(self):
        lattice = Lattice([[2.0, 1.0], [0.0, 3.0]])
        self.assertAlmostEqual(lattice_determinant(lattice), 6.0)

    def test_singular_rejected(self):
        with self.assertRaises(SingularLattice):
            Lattice([[1.0, 2.0], [2.0, 4.0]])

    def test_generators_are_columns(self):
        lattice = Lattice.from_generators(Point(1.0, 0.0), Point(0.5, 1.0))
        g1, g2 = lattice.generators
        self.assertEqual(g1, Point(1.0, 0.0))
        self.assertEqual(g2, Point(0.5, 1.0))
        self.assertEqual(lattice.point(1, 2), Point(2.0, 2.0))

    def test_points_near(self):
        lattice = Lattice(np.eye(2))
        pts = lattice.points_near(np.zeros(2), 1.0)
        self.assertEqual(len(pts), 5)

    def test_reduced_keeps_determinant(self):
        lattice = Lattice.from_generators(Point(1.0, 0.0), Point(7.0, 1.0))
        reduced = lattice.reduced()
        self.assertAlmostEqual(reduced.determinant, lattice.determinant)
        g1, g2 = reduced.generators
        self.assertAlmostEqual(g1.norm(), 1.0)
        self.assertAlmostEqual(g2.norm(), 1.0)


def _random_unimodular(rng):
    """Integer matrix with determinant ±1, a product of random shears."""
    u = np.eye(2)
    for _ in range(4):
        k = float(rng.integers(-3, 4))
        u = u @ (np.array([[1.0, k], [0.0, 1.0]]) if rng.random() < 0.5 else np.array([[1.0, 0.0], [k, 1.0]]))
    if rng.random() < 0.5:
        u = u @ np.array([[0.0, 1.0], [1.0, 0.0]])
    return u


class TestRandomInvariants(unittest.TestCase):
    """Invariants checked on random inputs."""

    def setUp(self):
        self.rng = np.random.default_rng(20261018)

    def test_triangle_area_ignores_vertex_order(self):
        for _ in range(50):
            pts = [Point(*xy) for xy in self.rng.normal(size=(3, 2))]
            area = triangle_area(*pts)
            for perm in itertools.permutations(pts):
                self.assertAlmostEqual(triangle_area(*perm), area, delta=1e-12)

    def test_triangle_area_scales_by_determinant(self):
        for _ in range(50):
            pts = self.rng.normal(size=(3, 2))
            m = self.rng.normal(size=(2, 2))
            image = pts @ m.T
            expected = abs(np.linalg.det(m)) * triangle_area(*(Point(*xy) for xy in pts))
            area = triangle_area(*(Point(*xy) for xy in image))
            self.assertAlmostEqual(area, expected, delta=1e-9 * max(1.0, expected))

    def test_determinant_ignores_basis_choice(self):
        for _ in range(50):
            basis = self.rng.normal(size=(2, 2))
            if abs(np.linalg.det(basis)) < 1e-3:
                continue
            lattice = Lattice(basis)
            other = Lattice(basis @ _random_unimodular(self.rng))
            self.assertAlmostEqual(
                lattice_determinant(other) / lattice_determinant(lattice), 1.0, delta=1e-9
            )

    def test_hausdorff_triangle_inequality(self):
        for _ in range(30):
            p, q, r = (convex_hull(self.rng.normal(size=(8, 2))) for _ in range(3))
            self.assertLessEqual(
                hausdorff_distance(p, r), hausdorff_distance(p, q) + hausdorff_distance(q, r) + 1e-12
            )
            self.assertAlmostEqual(hausdorff_distance(p, q), hausdorff_distance(q, p), delta=1e-15)


if __name__ == "__main__":
    unittest.main()
