import math
import unittest

import numpy as np

from modules.conformal import (N_BAR, N_INF, ConformalPoint, Euclidean3, dot, embed_point, extract_point,
                               normalize_point, point_distance, transform_point, translation_rotor)
from modules.exceptions import InputError, NonNullVector, PointAtInfinity
from modules.ga_core import E1, Multivector, apply_rotor, compose_rotors


class TestEmbedding(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_origin(self):
        """Test that the origin embeds as -nbar."""
        self.assertTrue(embed_point((0.0, 0.0, 0.0)).vec.allclose(-N_BAR))

    def test_embedded_points_are_null(self):
        for case in range(100000):
            point = embed_point(self.rng.uniform(-10.0, 10.0, size=3))
            with self.subTest(case=case):
                self.assertLessEqual(abs(dot(point, point)), 1e-12 * point.vec.norm() ** 2)

    def test_round_trip(self):
        """Test extract(embed(x)) = x, independent of the scale of X."""
        for case in range(100000):
            x = self.rng.uniform(-5.0, 5.0, size=3)
            point = embed_point(x)
            with self.subTest(case=case):
                np.testing.assert_allclose(extract_point(point).as_array(), x, rtol=1e-12, atol=1e-12)
                np.testing.assert_allclose(extract_point(point.vec * 3.7).as_array(), x, rtol=1e-12, atol=1e-12)

    def test_distance_formula(self):
        """Test |x - y|^2 = -2 X.Y / (X.n Y.n) against the Euclidean distance."""
        for case in range(100000):
            x, y = self.rng.uniform(-5.0, 5.0, size=(2, 3))
            expected = float(np.linalg.norm(x - y))
            with self.subTest(case=case):
                self.assertAlmostEqual(point_distance(embed_point(x), embed_point(y)), expected,
                                       delta=1e-9 * expected)

    def test_normalize_point(self):
        point = embed_point((1.0, -2.0, 0.5))
        self.assertTrue(normalize_point(point.vec * 5.0).vec.allclose(point.vec))
        self.assertTrue(normalize_point(point.vec * -0.25).vec.allclose(point.vec))

    def test_normalize_rejects_non_null_and_infinity(self):
        with self.assertRaises(NonNullVector):
            normalize_point(E1)
        with self.assertRaises(PointAtInfinity):
            normalize_point(N_INF)

    def test_extract_infinity(self):
        with self.assertRaises(PointAtInfinity):
            extract_point(N_INF)


class TestConformalPoint(unittest.TestCase):

    def test_infinity_is_admitted(self):
        self.assertTrue(ConformalPoint(N_INF).at_infinity)
        self.assertFalse(embed_point((1.0, 2.0, 3.0)).at_infinity)

    def test_from_vector_flips_sign(self):
        point = embed_point((0.5, 0.5, 0.5))
        flipped = ConformalPoint.from_vector(-point.vec)
        self.assertTrue(flipped.vec.allclose(point.vec))

    def test_rejects_non_null_and_negative_scale(self):
        with self.assertRaises(NonNullVector):
            ConformalPoint(E1)
        with self.assertRaises(NonNullVector):
            ConformalPoint(-embed_point((1.0, 0.0, 0.0)).vec)
        with self.assertRaises(NonNullVector):
            ConformalPoint(Multivector())

    def test_euclidean3_validation(self):
        self.assertEqual(Euclidean3.of([1, 2, 3]), Euclidean3(1.0, 2.0, 3.0))
        with self.assertRaises(InputError):
            Euclidean3.of([1.0, 2.0])
        with self.assertRaises(InputError):
            Euclidean3.of([1.0, math.nan, 0.0])


class TestTranslation(unittest.TestCase):

    def test_translation_carries_x_onto_y(self):
        x, y, z = (1.0, 2.0, -1.0), (-0.5, 0.0, 3.0), (4.0, 4.0, 4.0)
        rotor = translation_rotor(embed_point(x), embed_point(y))
        np.testing.assert_allclose(transform_point(rotor, embed_point(x)).euclidean(), y, atol=1e-12)
        shifted = np.add(z, np.subtract(y, x))
        np.testing.assert_allclose(transform_point(rotor, embed_point(z)).euclidean(), shifted, atol=1e-12)

    def test_composed_translations_add(self):
        origin = embed_point((0.0, 0.0, 0.0))
        first = translation_rotor(origin, embed_point((1.0, 0.0, 0.0)))
        second = translation_rotor(origin, embed_point((0.0, 2.0, 0.0)))
        combined = compose_rotors(first, second)
        np.testing.assert_allclose(transform_point(combined, origin).euclidean(), (1.0, 2.0, 0.0), atol=1e-12)

    def test_translation_chain(self):
        """Test that T(X, Y) followed by T(Y, Z) carries X onto Z."""
        rng = np.random.default_rng(23)
        for case in range(100):
            x, y, z = (embed_point(p) for p in rng.uniform(-5.0, 5.0, size=(3, 3)))
            chained = compose_rotors(translation_rotor(x, y), translation_rotor(y, z))
            with self.subTest(case=case):
                np.testing.assert_allclose(transform_point(chained, x).euclidean(), z.euclidean(), atol=1e-10)

    def test_translation_fixes_infinity(self):
        rotor = translation_rotor(embed_point((0.0, 0.0, 0.0)), embed_point((1.0, -3.0, 2.0)))
        moved = apply_rotor(rotor, N_INF)
        factor = dot(moved, N_BAR) / dot(N_INF, N_BAR)
        self.assertGreater(factor, 0.0)
        self.assertTrue(moved.allclose(N_INF * factor, 1e-12))

    def test_translation_to_infinity_is_rejected(self):
        with self.assertRaises(PointAtInfinity):
            translation_rotor(embed_point((0.0, 0.0, 0.0)), ConformalPoint(N_INF))


if __name__ == "__main__":
    unittest.main()
