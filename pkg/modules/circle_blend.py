"""
Circle splines: blend the through-circles of neighbouring control points by angle
and carry the chord between two control points onto the blended circle with a rotor.
"""
import concurrent.futures
import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from config import Constants
from functions import get_logger, smoothstep
from .conformal import N_INF, ConformalPoint, Euclidean3, as_vector, dot_n, embed_point, normalize_point
from .exceptions import (DegenerateBlend, DegenerateSphere, InvalidSpline, OppositeObjects, ParameterOutOfRange,
                         PathologicalConfiguration)
from .ga_core import Rotor, apply_rotor, exp_bivector, geometric_product, inner_product, magnitude, outer_product
from .primitives import (Circle, bisector_plane, circle_through, incidence_residual, is_flat, line_through,
                         oriented_meet_circle_plane, split_point_pair)

logger = get_logger("circle_spline.circle_blend")


def _check_parameter(lam):
    if not 0.0 <= lam <= 1.0:
        raise ParameterOutOfRange(f"blend parameter {lam} outside [0, 1]")


@dataclass(frozen=True)
class BlendProfile:
    """
    Reparameterisation p(lambda) of the blend angle. Order k makes derivatives
    1..k-1 vanish at both ends, which gives G_k continuity at the junctions.
    """
    order: int = 2

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InvalidSpline(f"continuity order must be a positive integer, got {self.order!r}")

    def __call__(self, lam):
        _check_parameter(lam)
        return smoothstep(lam, self.order)

    @classmethod
    def from_continuity(cls, name):
        """
        Profile for a continuity name such as "g2".
        """
        try:
            return cls(Constants.CONTINUITY_ORDERS[name.lower()])
        except KeyError:
            raise InvalidSpline(f"unknown continuity {name!r}; "
                                f"expected one of {', '.join(Constants.CONTINUITY_ORDERS)}") from None


def blend_profile_eval(profile, lam):
    return profile(lam)


@dataclass(frozen=True)
class Segment:
    """
    Piece of a spline between two control points.

    c1 and c2 are the normalized incoming and outgoing through-circles, mid the
    orientation-resolved mid-circle and chord the normalized line X1 ^ X2 ^ n.
    theta lies in [0, 2pi) without pi; it exceeds pi when the blend runs the long way round.
    """
    x1: ConformalPoint
    x2: ConformalPoint
    c1: Circle
    c2: Circle
    theta: float
    mid: Circle
    chord: Circle = field(repr=False)


def _normalized_pair(c1, c2):
    unit1, sign1 = c1.normalized()
    unit2, sign2 = c2.normalized()
    if sign1 != sign2:
        raise DegenerateBlend("cannot blend a real circle with an imaginary one")
    return unit1, unit2, sign1


def _angle(unit1, unit2):
    """
    Angle in [0, pi] between two unit circles from the half-angle magnitudes
    |C1 - C2| = 2 sin(theta/2) and |C1 + C2| = 2 cos(theta/2), accurate near 0.
    """
    half_sin, _ = magnitude(unit1.blade - unit2.blade)
    half_cos, _ = magnitude(unit1.blade + unit2.blade)
    return 2.0 * math.atan2(half_sin, half_cos)


def arc_midpoint(circle, x1, x2):
    """
    Midpoint of the arc of circle that runs from x1 to x2 along the circle's orientation.
    """
    plane = bisector_plane(x1, x2)
    first, _ = split_point_pair(oriented_meet_circle_plane(circle, plane))
    return first


def _resolve_mid(unit1, unit2, x1, x2):
    """
    Return (mid-circle, True if it is +(C1 + C2)).

    The sign is chosen so that the mid-circle's arc between x1 and x2 lies on the
    side of the two arc midpoints of C1 and C2.
    """
    summed = unit1.blade + unit2.blade
    if summed.is_zero(unit1.blade.norm() + unit2.blade.norm(), Constants.PATHOLOGICAL_TOLERANCE):
        raise PathologicalConfiguration("circles are opposite (theta = pi); refine the control points")
    summed = Circle(summed)

    m1 = normalize_point(arc_midpoint(unit1, x1, x2))
    m2 = normalize_point(arc_midpoint(unit2, x1, x2))
    q = dot_n(m1) * m2.vec + dot_n(m2) * m1.vec
    qn = outer_product(q, N_INF)
    pair = oriented_meet_circle_plane(summed, bisector_plane(x1, x2))
    alpha = inner_product(qn, pair.blade).scalar_part

    if abs(alpha) <= Constants.PATHOLOGICAL_TOLERANCE * qn.norm() * pair.blade.norm():
        raise PathologicalConfiguration("mid-circle side test is undecidable (alpha = 0)")
    unit, _ = summed.normalized()
    if alpha < 0.0:
        return unit, True
    return -unit, False


def mid_circle(c1, c2, x1, x2):
    """
    Orientation-resolved bisecting circle +-(C1 + C2) of two circles through x1 and x2.
    """
    unit1, unit2, _ = _normalized_pair(c1, c2)
    mid, _ = _resolve_mid(unit1, unit2, x1, x2)
    return mid


def make_segment(x1, x2, c1, c2):
    """
    Normalize the two through-circles, check that both carry x1 and x2, resolve the
    mid-circle and the blend angle.
    """
    for circle in (c1, c2):
        for point in (x1, x2):
            if incidence_residual(circle, point) > Constants.INCIDENCE_TOLERANCE:
                raise DegenerateBlend("segment endpoints do not lie on both circles")

    unit1, unit2, _ = _normalized_pair(c1, c2)
    mid, positive = _resolve_mid(unit1, unit2, x1, x2)
    theta = _angle(unit1, unit2)
    if not positive:
        theta = 2.0 * math.pi - theta
        if theta > 2.0 * math.pi - Constants.SMALL_ANGLE:
            raise PathologicalConfiguration("blend would run a full turn round the circle")

    chord, _ = line_through(x1, x2).normalized()
    logger.debug(f"segment: theta={theta:.6g}, mid-circle sign {'+' if positive else '-'}")
    return Segment(x1, x2, unit1, unit2, theta, mid, chord)


def circle_slerp(seg, profile, lam):
    """
    Angle blend of the segment's circles, sin((1-p)theta) C1 + sin(p theta) C2 over sin(theta).
    """
    p = profile(lam)
    theta = seg.theta
    if theta < Constants.SMALL_ANGLE:
        logger.debug(f"theta={theta:.3e} below threshold, linear circle blend")
        return Circle((1.0 - p) * seg.c1.blade + p * seg.c2.blade)
    return Circle((math.sin((1.0 - p) * theta) * seg.c1.blade + math.sin(p * theta) * seg.c2.blade)
                  / math.sin(theta))


def chord_point(x1, x2, lam):
    """
    Point of the straight chord, -(1-l) X2.n X1 - l X1.n X2 + l(1-l) X1.X2 n.
    """
    _check_parameter(lam)
    v1, v2 = as_vector(x1), as_vector(x2)
    cross_term = inner_product(v1, v2).scalar_part
    y = -(1.0 - lam) * dot_n(v2) * v1 - lam * dot_n(v1) * v2 + lam * (1.0 - lam) * cross_term * N_INF
    return normalize_point(y)


def segment_rotor(blend, chord):
    """
    Normalized rotor 1 + C L taking the chord line onto the blended circle.
    """
    unit_blend, _ = blend.normalized()
    unit_chord, _ = chord.normalized()
    versor = 1.0 + geometric_product(unit_blend.blade, unit_chord.blade)
    scale = geometric_product(versor, ~versor).scalar_part
    if scale <= Constants.ROTOR_TOLERANCE:
        raise OppositeObjects("blended circle is opposite to the chord line")
    return Rotor(versor).normalized()


def evaluate_segment(seg, profile, lam):
    """
    X(lambda) = R Y R~: the chord point transported onto the blended circle.
    The control points themselves are returned at lambda = 0 and 1.
    """
    _check_parameter(lam)
    if lam == 0.0:
        return seg.x1
    if lam == 1.0:
        return seg.x2
    rotor = segment_rotor(circle_slerp(seg, profile, lam), seg.chord)
    return normalize_point(apply_rotor(rotor, chord_point(seg.x1, seg.x2, lam).vec))


def segment_midpoint(seg):
    """
    lambda = 1/2 point of a segment straight from its mid-circle, with no trigonometry.
    """
    rotor = segment_rotor(seg.mid, seg.chord)
    return normalize_point(apply_rotor(rotor, chord_point(seg.x1, seg.x2, 0.5).vec))


def pathological_generator(x1, x2, plane):
    """
    Bivector (X1 ^ X2) P generating the planar motion that fixes X1 and X2.
    """
    if not is_flat(plane):
        raise DegenerateSphere("pathological generator needs a flat plane")
    product = geometric_product(outer_product(as_vector(x1), as_vector(x2)), plane.blade)
    generator = product.grade(2)
    if (product - generator).norm() > Constants.INCIDENCE_TOLERANCE * product.norm():
        raise DegenerateSphere("points do not lie on the plane")
    return generator


def pathological_rotor(x1, x2, plane, tau):
    """
    exp(-tau B / 2) for the unit pathological generator B.
    """
    generator = pathological_generator(x1, x2, plane)
    mag, _ = magnitude(generator)
    if mag == 0.0:
        raise DegenerateSphere("pathological generator vanishes")
    return exp_bivector(generator * (-0.5 * tau / mag))


@dataclass(frozen=True)
class SplineSpec:
    control_points: tuple
    closed: bool = False
    profile: BlendProfile = BlendProfile()
    samples_per_segment: int = Constants.DEFAULT_SAMPLES
    refine_depth: int = Constants.DEFAULT_REFINE

    def __post_init__(self):
        points = tuple(p if isinstance(p, Euclidean3) else Euclidean3.of(p) for p in self.control_points)
        object.__setattr__(self, "control_points", points)

        minimum = 3 if self.closed else 4
        if len(points) < minimum:
            kind = "closed" if self.closed else "open"
            raise InvalidSpline(f"an {kind} spline needs at least {minimum} control points, got {len(points)}")
        if not isinstance(self.samples_per_segment, int) or self.samples_per_segment < 1:
            raise InvalidSpline(f"samples per segment must be a positive integer, got {self.samples_per_segment!r}")
        if not isinstance(self.refine_depth, int) or self.refine_depth < 0:
            raise InvalidSpline(f"refine depth must be a non-negative integer, got {self.refine_depth!r}")

        pairs = list(zip(points, points[1:]))
        if self.closed:
            pairs.append((points[-1], points[0]))
        for index, (a, b) in enumerate(pairs):
            if a == b:
                raise InvalidSpline(f"control points {index} and {(index + 1) % len(points)} coincide")

    @property
    def segment_count(self):
        count = len(self.control_points)
        return count if self.closed else count - 1


class SplineSample(NamedTuple):
    segment: int
    lam: float
    point: Euclidean3


class UnitFrame(NamedTuple):
    """
    Similarity x -> (x - centre) / scale putting the control points in the unit ball
    around their centroid. Curves commute with similarities, so sampling happens there.
    """
    centre: np.ndarray
    scale: float

    @classmethod
    def around(cls, points):
        coords = np.array([tuple(p) for p in points], dtype=float)
        centre = coords.mean(axis=0)
        scale = float(np.max(np.linalg.norm(coords - centre, axis=1)))
        return cls(centre, scale if scale > 0.0 else 1.0)

    def to_unit(self, point):
        return Euclidean3(*((np.asarray(point, dtype=float) - self.centre) / self.scale).tolist())

    def from_unit(self, point):
        return Euclidean3(*(np.asarray(point, dtype=float) * self.scale + self.centre).tolist())

    def localize(self, spec):
        return replace(spec, control_points=tuple(self.to_unit(p) for p in spec.control_points))


def spline_segments(spec):
    """
    Segments of a spline. Control point i carries the circle through its two
    neighbours; open end segments reuse the one circle they touch.
    """
    points = [embed_point(p) for p in spec.control_points]
    count = len(points)

    if spec.closed:
        circles = [circle_through(points[i - 1], points[i], points[(i + 1) % count]) for i in range(count)]
        ends = [(i, (i + 1) % count, circles[i], circles[(i + 1) % count]) for i in range(count)]
    else:
        last = count - 1
        circles = [None] + [circle_through(points[i - 1], points[i], points[i + 1]) for i in range(1, last)]
        ends = [(i, i + 1, circles[max(i, 1)], circles[min(i + 1, last - 1)]) for i in range(last)]

    segments = []
    for index, (a, b, c_in, c_out) in enumerate(ends):
        try:
            segments.append(make_segment(points[a], points[b], c_in, c_out))
        except PathologicalConfiguration as e:
            raise e.with_segment(index) from e
    return segments


class SplineSampler:
    """
    Samples the segments of a spline concurrently and merges them by segment index.
    """

    __slots__ = ("profile", "samples", "progress_callback", "max_workers")

    def __init__(self, profile, samples, progress_callback=None, max_workers=None):
        """
        :param profile: BlendProfile used for every segment.
        :param samples: Number of lambda steps per segment.
        :param progress_callback: Callable or None to report progress.
        :param max_workers: Thread count, or None for the executor default.
        """
        self.profile = profile
        self.samples = samples
        self.progress_callback = progress_callback
        self.max_workers = max_workers

    def sample(self, segments):
        """
        :return: one list of (lambda, Euclidean3) per segment, in segment order.
        """
        total = len(segments)
        results = [None] * total
        processed = 0

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_map = {executor.submit(self._sample_segment, seg): index for index, seg in enumerate(segments)}

            for future in concurrent.futures.as_completed(future_map):
                index = future_map[future]
                try:
                    results[index] = future.result()
                except PathologicalConfiguration as e:
                    raise e.with_segment(index) from e
                processed += 1
                if self.progress_callback:
                    self.progress_callback(processed, total)

        return results

    def _sample_segment(self, seg):
        samples = []
        for k in range(self.samples + 1):
            lam = k / self.samples
            samples.append((lam, evaluate_segment(seg, self.profile, lam).euclidean()))
        return samples


def build_spline(spec, progress_callback=None, max_workers=None):
    """
    Sample a spline at uniform lambda per segment.

    Junction samples are emitted once, so the result has
    segment_count * samples_per_segment + 1 rows; a closed curve ends on its first point.
    """
    if spec.refine_depth > 0:
        spec = refine_midpoints(spec)

    frame = UnitFrame.around(spec.control_points)
    segments = spline_segments(frame.localize(spec))
    sampler = SplineSampler(spec.profile, spec.samples_per_segment, progress_callback, max_workers)
    per_segment = sampler.sample(segments)

    points = spec.control_points
    samples = []
    for index, rows in enumerate(per_segment):
        start = 0 if index == 0 else 1
        for lam, point in rows[start:]:
            if lam == 0.0:
                point = points[index]
            elif lam == 1.0:
                point = points[(index + 1) % len(points)]
            else:
                point = frame.from_unit(point)
            samples.append(SplineSample(index, lam, point))

    logger.info(f"Sampled {len(segments)} segments into {len(samples)} points")
    return samples


def _insert_midpoints(spec):
    frame = UnitFrame.around(spec.control_points)
    points = []
    for point, seg in zip(spec.control_points, spline_segments(frame.localize(spec))):
        points.append(point)
        points.append(frame.from_unit(segment_midpoint(seg).euclidean()))
    if not spec.closed:
        points.append(spec.control_points[-1])
    return tuple(points)


def refine_midpoints(spec):
    """
    Insert each segment's midpoint as a new control point, refine_depth times.
    The returned spec has refine_depth 0.
    """
    if spec.refine_depth == 0:
        return spec
    current = spec
    for level in range(spec.refine_depth):
        current = replace(current, control_points=_insert_midpoints(current), refine_depth=0)
        logger.debug(f"refinement level {level + 1}: {len(current.control_points)} control points")
    return current


def subdivide(spec, depth):
    """
    Control polygon after depth levels of midpoint insertion, as a polyline.
    A closed polygon repeats its first point at the end.
    """
    if depth < 0:
        raise InvalidSpline(f"subdivision depth must be non-negative, got {depth}")
    current = replace(spec, refine_depth=0)
    for _ in range(depth):
        current = replace(current, control_points=_insert_midpoints(current))
    points = list(current.control_points)
    if current.closed:
        points.append(points[0])
    return points
