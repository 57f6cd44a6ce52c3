"""
Euclidean points as null vectors: X = 2x + x^2 n - nbar.
"""
import math
from typing import NamedTuple

import numpy as np

from config import Constants
from .exceptions import InputError, NonNullVector, PointAtInfinity
from .ga_core import E0, E4, Multivector, Rotor, apply_rotor, geometric_product, inner_product

N_INF = E4 + E0
N_BAR = E4 - E0


class Euclidean3(NamedTuple):
    x: float
    y: float
    z: float

    @classmethod
    def of(cls, values):
        values = [float(v) for v in values]
        if len(values) != 3:
            raise InputError(f"expected 3 coordinates, got {len(values)}")
        if not all(math.isfinite(v) for v in values):
            raise InputError(f"non-finite coordinates {values}")
        return cls(*values)

    def as_array(self):
        return np.array(self, dtype=float)


def as_vector(point):
    return point.vec if isinstance(point, ConformalPoint) else point


def dot(a, b):
    """
    Scalar inner product of two vectors.
    """
    return inner_product(as_vector(a), as_vector(b)).scalar_part


def dot_n(point):
    return dot(point, N_INF)


def _is_null(vec):
    return abs(dot(vec, vec)) <= Constants.NULL_TOLERANCE * vec.norm() ** 2


def _at_infinity(vec):
    return abs(dot_n(vec)) <= Constants.INFINITY_TOLERANCE * vec.norm()


class ConformalPoint:
    """
    Null vector with a positive e0 coefficient. The point at infinity n is admitted
    and reported through `at_infinity`.
    """

    __slots__ = ("vec",)

    def __init__(self, vec):
        if vec.norm() == 0.0 or not vec.is_homogeneous() or vec.dominant_grade() != 1:
            raise NonNullVector("a conformal point must be a nonzero vector")
        if not _is_null(vec):
            raise NonNullVector(f"vector is not null: X.X = {dot(vec, vec):.3e}")
        if vec[1] <= 0.0:
            raise NonNullVector("a conformal point needs a positive e0 component")
        self.vec = vec.grade(1)

    @classmethod
    def from_vector(cls, vec):
        """
        Wrap a null vector, flipping its overall sign when the e0 component is negative.
        """
        return cls(-vec if vec[1] < 0.0 else vec)

    @property
    def at_infinity(self):
        return _at_infinity(self.vec)

    def euclidean(self):
        return extract_point(self.vec)

    def __repr__(self):
        if self.at_infinity:
            return "ConformalPoint(infinity)"
        return f"ConformalPoint{tuple(round(c, 12) for c in self.euclidean())}"


def embed_point(p):
    p = p if isinstance(p, Euclidean3) else Euclidean3.of(p)
    x = p.as_array()
    square = float(np.dot(x, x))
    components = [square + 1.0, 2.0 * x[0], 2.0 * x[1], 2.0 * x[2], square - 1.0]
    return ConformalPoint(Multivector.vector(components))


def extract_point(point):
    """
    Recover x_i = -X.e_i / X.n; the result does not depend on the scale of X.
    """
    vec = as_vector(point)
    scale = dot_n(vec)
    if abs(scale) <= Constants.INFINITY_TOLERANCE * vec.norm():
        raise PointAtInfinity("cannot extract a Euclidean point from the point at infinity")
    return Euclidean3(-vec[2] / scale, -vec[4] / scale, -vec[8] / scale)


def normalize_point(vec):
    """
    Standard form -2A/(A.n) of a null vector.
    """
    vec = as_vector(vec)
    if not _is_null(vec):
        raise NonNullVector(f"cannot normalize a non-null vector (A.A = {dot(vec, vec):.3e})")
    scale = dot_n(vec)
    if abs(scale) <= Constants.INFINITY_TOLERANCE * vec.norm():
        raise PointAtInfinity("cannot normalize the point at infinity")
    return ConformalPoint(vec * (-2.0 / scale))


def point_distance(x, y):
    """
    |x - y|^2 = -2 X.Y / (X.n Y.n)
    """
    x, y = as_vector(x), as_vector(y)
    if _at_infinity(x) or _at_infinity(y):
        raise PointAtInfinity("distance to the point at infinity is undefined")
    square = -2.0 * dot(x, y) / (dot_n(x) * dot_n(y))
    return math.sqrt(max(square, 0.0))


def translation_rotor(x, y):
    """
    Rotor (n.Y) n X + (n.X) Y n carrying the point X onto Y.
    """
    x, y = as_vector(x), as_vector(y)
    if _at_infinity(x) or _at_infinity(y):
        raise PointAtInfinity("translation endpoints must be finite points")
    versor = dot_n(y) * geometric_product(N_INF, x) + dot_n(x) * geometric_product(y, N_INF)
    return Rotor(versor)


def transform_point(rotor, point):
    """
    Apply a rotor to a point and return it as a ConformalPoint.
    """
    return ConformalPoint.from_vector(apply_rotor(rotor, as_vector(point)))
