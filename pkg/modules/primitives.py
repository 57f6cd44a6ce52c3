"""
Round objects of the conformal model as graded blades.

PointPair (grade 2), Circle/Line (grade 3) and Sphere/Plane (grade 4). Flat
objects contain the point at infinity n.
"""
import math

import numpy as np

from config import Constants
from functions import get_logger
from .conformal import N_BAR, N_INF, ConformalPoint, as_vector
from .exceptions import (DegenerateCircle, DegenerateSphere, InfiniteRadius, InvalidGrade, NoRealPoints,
                         TangentPoint)
from .ga_core import E0, E1, E2, E3, Multivector, dual, geometric_product, inner_product, magnitude, outer_product

logger = get_logger("circle_spline.primitives")

# blade masks of e0 e_i e4, which carry the direction of a line trivector
_LINE_DIRECTION_MASKS = (0b10011, 0b10101, 0b11001)


class RoundObject:
    GRADE = None
    REAL_SIGN = 1
    DEGENERATE = DegenerateCircle

    __slots__ = ("blade",)

    def __init__(self, blade):
        if blade.norm() > 0.0 and (not blade.is_homogeneous() or blade.dominant_grade() != self.GRADE):
            raise InvalidGrade(f"{type(self).__name__} needs a grade-{self.GRADE} blade, "
                               f"got grades {sorted(blade.grades())}")
        self.blade = blade.grade(self.GRADE)

    def __repr__(self):
        return f"{type(self).__name__}({self.blade!r})"

    def __neg__(self):
        return type(self)(-self.blade)

    def __add__(self, other):
        return type(self)(self.blade + other.blade)

    def __sub__(self, other):
        return type(self)(self.blade - other.blade)

    def scaled(self, factor):
        return type(self)(self.blade * factor)

    def square(self):
        return geometric_product(self.blade, self.blade).scalar_part

    def is_zero(self, scale=None):
        return self.blade.norm() == 0.0 or self.blade.is_zero(scale)

    def normalized(self):
        """
        Divide by sqrt(|<A ~A>_0|); returns (unit object, sign of <A ~A>_0).
        """
        mag, sign = magnitude(self.blade)
        if sign == 0:
            raise self.DEGENERATE(f"{type(self).__name__} has zero magnitude")
        return type(self)(self.blade / mag), sign


class PointPair(RoundObject):
    GRADE = 2
    DEGENERATE = NoRealPoints


class Circle(RoundObject):
    GRADE = 3
    DEGENERATE = DegenerateCircle


class Sphere(RoundObject):
    GRADE = 4
    REAL_SIGN = -1
    DEGENERATE = DegenerateSphere


def _wedge_all(*points):
    blade = as_vector(points[0])
    for point in points[1:]:
        blade = outer_product(blade, as_vector(point))
    return blade


def _input_scale(*points):
    return math.prod(as_vector(p).norm() for p in points)


def circle_through(x1, x2, x3):
    blade = _wedge_all(x1, x2, x3)
    if blade.is_zero(_input_scale(x1, x2, x3)):
        raise DegenerateCircle("circle through coincident points")
    return Circle(blade)


def line_through(x1, x2):
    blade = _wedge_all(x1, x2, N_INF)
    if blade.is_zero(_input_scale(x1, x2, N_INF)):
        raise DegenerateCircle("line through coincident points")
    return Circle(blade)


def sphere_through(x1, x2, x3, x4):
    blade = _wedge_all(x1, x2, x3, x4)
    if blade.is_zero(_input_scale(x1, x2, x3, x4)):
        raise DegenerateSphere("points are cocircular or coincident")
    return Sphere(blade)


def plane_through(x1, x2, x3):
    blade = _wedge_all(x1, x2, x3, N_INF)
    if blade.is_zero(_input_scale(x1, x2, x3, N_INF)):
        raise DegenerateSphere("plane through collinear points")
    return Sphere(blade)


def is_flat(obj):
    """
    True when obj ^ n vanishes relative to obj.
    """
    scale = obj.blade.norm()
    if scale == 0.0:
        raise obj.DEGENERATE(f"zero {type(obj).__name__} has no shape")
    return outer_product(obj.blade, N_INF).norm() / scale < Constants.FLAT_TOLERANCE


def is_blade(obj, tolerance=1e-9):
    """
    Factorization test: a bivector B is a blade iff B ^ B = 0; trivectors are tested through their dual.
    """
    blade = obj.blade
    if obj.GRADE == 3:
        blade = dual(blade)
    if obj.GRADE in (2, 3):
        return outer_product(blade, blade).norm() <= tolerance * blade.norm() ** 2
    return True


def incidence_residual(obj, point):
    """
    |obj ^ X| relative to |obj||X|.
    """
    vec = as_vector(point)
    return outer_product(obj.blade, vec).norm() / (obj.blade.norm() * vec.norm())


def _flat_ratio(obj):
    flat = outer_product(obj.blade, N_INF)
    return obj.square(), geometric_product(flat, flat).scalar_part


def circle_radius(circle):
    """
    rho^2 = -L^2 / (L ^ n)^2
    """
    if is_flat(circle):
        raise InfiniteRadius("a line has no finite radius")
    square, flat_square = _flat_ratio(circle)
    value = -square / flat_square
    if value <= 0.0:
        raise DegenerateCircle("imaginary circle has no real radius")
    return math.sqrt(value)


def sphere_radius(sphere):
    """
    rho^2 = S^2 / (S ^ n)^2
    """
    if is_flat(sphere):
        raise InfiniteRadius("a plane has no finite radius")
    square, flat_square = _flat_ratio(sphere)
    value = square / flat_square
    if value <= 0.0:
        raise DegenerateSphere("imaginary sphere has no real radius")
    return math.sqrt(value)


def center_of(obj):
    """
    Centre A n A of a circle or sphere.
    """
    if is_flat(obj):
        raise InfiniteRadius(f"a flat {type(obj).__name__.lower()} has no centre")
    centre = geometric_product(geometric_product(obj.blade, N_INF), obj.blade).grade(1)
    return ConformalPoint.from_vector(centre)


def circle_plane(circle):
    return Sphere(outer_product(circle.blade, N_INF))


def angle_between(first, second):
    """
    Angle from <A1 ~A2>_0 over the magnitudes, signed so that equal objects give 0.
    """
    mag1, sign = magnitude(first.blade)
    mag2, _ = magnitude(second.blade)
    if mag1 == 0.0 or mag2 == 0.0:
        raise first.DEGENERATE(f"angle with a degenerate {type(first).__name__.lower()}")
    cosine = sign * geometric_product(first.blade, ~second.blade).scalar_part / (mag1 * mag2)
    return math.acos(float(np.clip(cosine, -1.0, 1.0)))


def meet(first, second):
    """
    Intersection of two spheres, (I S1).S2, or of a circle with a sphere, (I C).S.
    """
    if isinstance(first, Sphere) and isinstance(second, Circle):
        first, second = second, first
    if not isinstance(second, Sphere) or not isinstance(first, (Sphere, Circle)):
        raise InvalidGrade("meet takes two spheres or a circle and a sphere")

    blade = inner_product(dual(first.blade), second.blade)
    result_type = Circle if isinstance(first, Sphere) else PointPair
    blade = blade.grade(result_type.GRADE)
    if blade.is_zero(first.blade.norm() * second.blade.norm()):
        blade = Multivector()
    return result_type(blade)


def classify_round(obj):
    """
    "real", "tangent", "imaginary" or "zero", by the sign of the scalar square.
    """
    scale = obj.blade.norm()
    if scale == 0.0:
        return "zero"
    relative = obj.square() * obj.REAL_SIGN / scale ** 2
    if abs(relative) <= Constants.NULL_TOLERANCE:
        return "tangent"
    return "real" if relative > 0.0 else "imaginary"


_PROBES = (N_INF, N_BAR, E1, E2, E3, E0)


def split_point_pair(pair):
    """
    Factor B = X_f ^ X_i into its two points, ordered so that X_f ^ X_i is a positive multiple of B.

    On the plane of B the map v -> v.B has eigenvalue +beta on X_f and -beta on X_i,
    beta = sqrt(B^2); probing with a few vectors picks out both eigenvectors.
    """
    blade = pair.blade
    square = pair.square()
    if abs(square) <= Constants.NULL_TOLERANCE * blade.norm() ** 2:
        raise TangentPoint("point pair degenerates to a single tangent point")
    if square < 0.0:
        raise NoRealPoints("point pair has no real points")
    beta = math.sqrt(square)

    best_first, best_second = None, None
    for probe in _PROBES:
        u = inner_product(probe, blade).grade(1)
        v = inner_product(u, blade).grade(1) / beta
        first, second = u + v, u - v
        if best_first is None or first.norm() > best_first.norm():
            best_first = first
        if best_second is None or second.norm() > best_second.norm():
            best_second = second

    return ConformalPoint.from_vector(best_first), ConformalPoint.from_vector(best_second)


def bisector_plane(x1, x2):
    """
    Plane I((X1 ^ X2).n) of points equidistant from X1 and X2, normal pointing from X1 toward X2.
    """
    pair = outer_product(as_vector(x1), as_vector(x2))
    if pair.is_zero(_input_scale(x1, x2)):
        raise DegenerateSphere("bisector of coincident points")
    return Sphere(dual(inner_product(pair, N_INF).grade(1)))


def oriented_meet_circle_plane(circle, plane):
    """
    B = I(C P + P C); splitting B yields the crossing from the negative to the positive side first.
    """
    symmetric = geometric_product(circle.blade, plane.blade) + geometric_product(plane.blade, circle.blade)
    return PointPair(dual(symmetric).grade(2))


def tangent_line(circle, point):
    """
    Tangent line -(C.X) ^ n of a circle at one of its points.
    """
    contraction = inner_product(circle.blade, as_vector(point)).grade(2)
    line = -outer_product(contraction, N_INF)
    if line.is_zero(circle.blade.norm() * as_vector(point).norm()):
        raise DegenerateCircle("point is not on the circle or the circle is degenerate")
    return Circle(line)


def line_direction(line):
    """
    Unit direction of a straight line, read from its e0 e_i e4 coefficients.
    """
    if not is_flat(line):
        raise InfiniteRadius("direction is only defined for straight lines")
    direction = np.array([line.blade[mask] for mask in _LINE_DIRECTION_MASKS])
    length = np.linalg.norm(direction)
    if length <= Constants.ZERO_TOLERANCE * line.blade.norm():
        raise DegenerateCircle("line has no direction")
    return direction / length
