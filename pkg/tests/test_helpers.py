import json
import math
import tempfile
import unittest
from pathlib import Path

import numpy as np

from functions import (barycentric_lattice, circumcircle, circumsphere, count_curvature_sign_changes,
                       format_significant, is_coplanar, lattice_faces, least_variance_axis, load_control_points,
                       load_settings, smoothstep, three_point_curvature)


class TestSmoothstep(unittest.TestCase):

    def test_end_values(self):
        for order in range(1, 6):
            with self.subTest(order=order):
                self.assertEqual(smoothstep(0.0, order), 0.0)
                self.assertEqual(smoothstep(1.0, order), 1.0)
                self.assertAlmostEqual(smoothstep(0.5, order), 0.5, places=15)

    def test_symmetry(self):
        for lam in np.linspace(0.0, 1.0, 21):
            with self.subTest(lam=lam):
                self.assertAlmostEqual(smoothstep(lam, 3) + smoothstep(1.0 - lam, 3), 1.0, places=14)

    def test_flat_ends(self):
        """Test that the first derivative vanishes at the ends for order 2 and above."""
        h = 1e-6
        for order in (2, 3):
            with self.subTest(order=order):
                self.assertLess(smoothstep(h, order) / h, 1e-5)
                self.assertLess((1.0 - smoothstep(1.0 - h, order)) / h, 1e-5)
        self.assertAlmostEqual(smoothstep(h, 1) / h, 1.0, places=9)


class TestOracles(unittest.TestCase):

    def test_circumcircle(self):
        centre, radius = circumcircle((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (-1.0, 0.0, 0.0))
        np.testing.assert_allclose(centre, (0.0, 0.0, 0.0), atol=1e-15)
        self.assertAlmostEqual(radius, 1.0, places=15)
        centre, radius = circumcircle((0.0, 0.0, 2.0), (3.0, 0.0, 2.0), (0.0, 4.0, 2.0))
        np.testing.assert_allclose(centre, (1.5, 2.0, 2.0), atol=1e-14)
        self.assertAlmostEqual(radius, 2.5, places=14)

    def test_circumcircle_of_collinear_points(self):
        self.assertIsNone(circumcircle((0, 0, 0), (1, 1, 1), (3, 3, 3)))

    def test_circumsphere(self):
        centre, radius = circumsphere((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1))
        np.testing.assert_allclose(centre, (0.0, 0.0, 0.0), atol=1e-15)
        self.assertAlmostEqual(radius, 1.0, places=15)
        self.assertIsNone(circumsphere((0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 3, 0)))

    def test_three_point_curvature(self):
        points = [(2.0 * math.cos(t), 2.0 * math.sin(t), 0.0) for t in (0.1, 0.5, 1.3)]
        self.assertAlmostEqual(three_point_curvature(*points), 0.5, places=14)
        self.assertEqual(three_point_curvature((0, 0, 0), (1, 0, 0), (2, 0, 0)), 0.0)
        self.assertEqual(three_point_curvature((0, 0, 0), (0, 0, 0), (2, 0, 0)), 0.0)


class TestPointSetHelpers(unittest.TestCase):

    def test_is_coplanar(self):
        square = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
        self.assertTrue(is_coplanar(square))
        self.assertTrue(is_coplanar(square[:3]))
        self.assertFalse(is_coplanar(square + [(0.5, 0.5, 0.01)]))
        self.assertTrue(is_coplanar(square + [(0.5, 0.5, 1e-9)]))

    def test_least_variance_axis(self):
        self.assertEqual(least_variance_axis([(0, 5, 0), (1, 5, 2), (3, 5, -1)]), 1)
        self.assertEqual(least_variance_axis([(0, 0, 1), (4, 1, 1), (2, 7, 1)]), 2)

    def test_curvature_sign_changes(self):
        xs = np.linspace(0.1, 4.0 * math.pi - 0.1, 400)
        wave = [(x, math.sin(x), 0.0) for x in xs]
        self.assertEqual(count_curvature_sign_changes(wave), 3)

        circle = [(math.cos(t), math.sin(t), 0.0) for t in np.linspace(0.0, 6.0, 200)]
        self.assertEqual(count_curvature_sign_changes(circle), 0)
        self.assertEqual(count_curvature_sign_changes(circle[:3]), 0)

    def test_shallow_dip_is_not_an_inflection(self):
        """Test a parabola with one slightly reversed turn, about 7e-4 of the largest turn."""
        xs = np.linspace(-1.0, 1.0, 41)
        ys = xs ** 2
        ys[20] += 0.0025025
        parabola = [(x, y, 0.0) for x, y in zip(xs, ys)]
        self.assertEqual(count_curvature_sign_changes(parabola), 0)
        self.assertEqual(count_curvature_sign_changes(parabola, tolerance=1e-9), 2)


class TestBarycentricLattice(unittest.TestCase):

    def test_counts(self):
        for n in (1, 2, 4, 16):
            with self.subTest(n=n):
                self.assertEqual(len(barycentric_lattice(n)), (n + 1) * (n + 2) // 2)
                self.assertEqual(len(lattice_faces(n)), n * n)

    def test_vertex_order(self):
        weights = barycentric_lattice(2)
        self.assertEqual(weights[0], (1.0, 0.0, 0.0))
        self.assertEqual(weights[2], (0.0, 1.0, 0.0))
        self.assertEqual(weights[-1], (0.0, 0.0, 1.0))
        for w in weights:
            self.assertAlmostEqual(sum(w), 1.0, places=15)

    def test_faces(self):
        self.assertEqual(lattice_faces(1), [(0, 1, 2)])
        self.assertEqual(lattice_faces(2), [(0, 1, 3), (1, 4, 3), (1, 2, 4), (3, 4, 5)])
        used = {index for face in lattice_faces(5) for index in face}
        self.assertEqual(used, set(range(21)))

    def test_invalid_subdivision(self):
        with self.assertRaises(ValueError):
            barycentric_lattice(0)
        with self.assertRaises(ValueError):
            lattice_faces(-1)


class TestFormatSignificant(unittest.TestCase):

    def test_formatting(self):
        self.assertEqual(format_significant(1.0), "1")
        self.assertEqual(format_significant(1.0 / 3.0), "0.333333333333")
        self.assertEqual(format_significant(-2.5), "-2.5")
        self.assertEqual(format_significant(1e-20, 3), "1e-20")

    def test_negative_zero(self):
        self.assertEqual(format_significant(-0.0), "0")


class TestLoadControlPoints(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / "points.json"

    def tearDown(self):
        self.directory.cleanup()

    def write(self, content):
        self.path.write_text(content if isinstance(content, str) else json.dumps(content), encoding="utf-8")
        return self.path

    def test_points_and_apexes(self):
        points, apexes = load_control_points(self.write({"points": [[0, 0, 0], [1, 2.5, -3]],
                                                         "apexes": [[0, 0, 1]]}))
        self.assertEqual(points, [(0.0, 0.0, 0.0), (1.0, 2.5, -3.0)])
        self.assertEqual(apexes, [(0.0, 0.0, 1.0)])

    def test_apexes_are_optional(self):
        _, apexes = load_control_points(self.write({"points": [[0, 0, 0]]}))
        self.assertEqual(apexes, [])

    def test_malformed_files(self):
        cases = {
            "syntax": "{\"points\": [",
            "no points": {"apexes": []},
            "not a list": {"points": {"x": 1}},
            "short triple": {"points": [[0, 0]]},
            "text coordinate": {"points": [[0, "1", 0]]},
            "boolean coordinate": {"points": [[0, True, 0]]},
            "non-finite": "{\"points\": [[0, NaN, 0]]}",
        }
        for name, content in cases.items():
            with self.subTest(case=name):
                with self.assertRaises(ValueError):
                    load_control_points(self.write(content))

    def test_missing_file(self):
        with self.assertRaises(OSError):
            load_control_points(Path(self.directory.name) / "missing.json")


class TestLoadSettings(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / "config.json"

    def tearDown(self):
        self.directory.cleanup()

    def test_missing_file(self):
        self.assertEqual(load_settings(self.path), {})

    def test_known_keys(self):
        self.path.write_text(json.dumps({"samples": 12, "continuity": "g3"}), encoding="utf-8")
        self.assertEqual(load_settings(self.path), {"samples": 12, "continuity": "g3"})

    def test_unknown_keys_are_dropped(self):
        self.path.write_text(json.dumps({"subdiv": 4, "colour": "red"}), encoding="utf-8")
        with self.assertLogs("circle_spline.settings", level="WARNING") as logs:
            self.assertEqual(load_settings(self.path), {"subdiv": 4})
        self.assertIn("colour", logs.output[0])

    def test_malformed_file(self):
        for content in ("not json", "[1, 2, 3]"):
            self.path.write_text(content, encoding="utf-8")
            with self.subTest(content=content):
                with self.assertLogs("circle_spline.settings", level="WARNING"):
                    self.assertEqual(load_settings(self.path), {})


if __name__ == "__main__":
    unittest.main()
