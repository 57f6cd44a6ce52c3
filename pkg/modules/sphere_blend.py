"""
Triangular surface patches from three corner spheres.

Each corner sphere passes through the triangle's vertices and one apex control
point. The spheres are blended linearly over barycentric coordinates and the flat
triangle is carried onto the blended sphere by the rotor 1 - S P.
"""
import concurrent.futures
import math
from dataclasses import dataclass
from typing import NamedTuple

from config import Constants
from functions import barycentric_lattice, get_logger, lattice_faces
from .conformal import ConformalPoint, Euclidean3, embed_point, normalize_point
from .exceptions import DegenerateBlend, DegenerateSphere, InvalidPatch, OppositeObjects, ParameterOutOfRange
from .ga_core import Rotor, apply_rotor, geometric_product
from .primitives import Sphere, is_flat, plane_through, sphere_through

logger = get_logger("circle_spline.sphere_blend")

_WEIGHT_TOLERANCE = 1e-12


def _as_point(point):
    return point if isinstance(point, ConformalPoint) else embed_point(point)


@dataclass(frozen=True)
class Barycentric:
    lam: float
    mu: float
    nu: float

    def __post_init__(self):
        weights = (self.lam, self.mu, self.nu)
        if not all(math.isfinite(w) and -_WEIGHT_TOLERANCE <= w <= 1.0 + _WEIGHT_TOLERANCE for w in weights):
            raise ParameterOutOfRange(f"barycentric weights {weights} outside [0, 1]")
        if abs(sum(weights) - 1.0) > _WEIGHT_TOLERANCE:
            raise ParameterOutOfRange(f"barycentric weights {weights} do not sum to 1")

    def corner(self):
        """
        Index 0..2 of the vertex this coordinate sits on exactly, or None.
        """
        for index, weight in enumerate((self.lam, self.mu, self.nu)):
            if weight == 1.0:
                return index
        return None


@dataclass(frozen=True)
class TrianglePatch:
    vertices: tuple
    apexes: tuple
    spheres: tuple
    plane: Sphere

    @property
    def x1(self):
        return self.vertices[0]

    @property
    def x2(self):
        return self.vertices[1]

    @property
    def x3(self):
        return self.vertices[2]


def _corner_rotor_scale(sphere, plane):
    rotor = 1.0 - geometric_product(sphere.blade, plane.blade)
    return geometric_product(rotor, ~rotor).scalar_part


def make_patch(x1, x2, x3, a1, a2, a3):
    """
    Build a patch from three vertices and three apex controls.

    The corner spheres S_i = A_i ^ X1 ^ X2 ^ X3 and the plane X1 ^ X2 ^ X3 ^ n are normalized.
    An apex in the triangle's plane gives the plane itself. Inside the circumcircle it comes
    out as +P, outside as -P; either way the corner is stored as +P, the same plane.
    """
    vertices = tuple(_as_point(x) for x in (x1, x2, x3))
    apexes = tuple(_as_point(a) for a in (a1, a2, a3))

    try:
        plane, _ = plane_through(*vertices).normalized()
    except DegenerateSphere as e:
        raise InvalidPatch("triangle vertices are collinear") from e

    spheres = []
    signs = set()
    for index, apex in enumerate(apexes, start=1):
        try:
            sphere, sign = sphere_through(apex, *vertices).normalized()
        except DegenerateSphere as e:
            raise InvalidPatch(f"apex {index} lies on the circumcircle of the triangle") from e
        if is_flat(sphere):
            logger.debug(f"apex {index} lies in the triangle's plane; corner sphere is the plane")
            sphere = plane
        elif _corner_rotor_scale(sphere, plane) <= Constants.ROTOR_TOLERANCE:
            raise InvalidPatch(f"corner sphere {index} is opposite to the triangle's plane")
        spheres.append(sphere)
        signs.add(sign)

    if len(signs) != 1:
        raise InvalidPatch("corner spheres mix real and imaginary spheres")

    logger.debug("patch built with corner spheres " + ", ".join(repr(s) for s in spheres))
    return TrianglePatch(vertices, apexes, tuple(spheres), plane)


def barycentric_point(patch, b):
    """
    Embedded point lam x1 + mu x2 + nu x3 of the flat triangle.
    """
    corner = b.corner()
    if corner is not None:
        return patch.vertices[corner]
    coords = [v.euclidean().as_array() for v in patch.vertices]
    return embed_point(Euclidean3.of(b.lam * coords[0] + b.mu * coords[1] + b.nu * coords[2]))


def blend_spheres(patch, b):
    """
    Linear sphere blend lam S1 + mu S2 + nu S3.
    """
    s1, s2, s3 = (s.blade for s in patch.spheres)
    blade = b.lam * s1 + b.mu * s2 + b.nu * s3
    if blade.is_zero(max(s.norm() for s in (s1, s2, s3))):
        raise DegenerateBlend(f"blended sphere vanishes at {b}")
    return Sphere(blade)


def evaluate_surface(patch, b):
    """
    X = R Y R~ with R = 1 - S P; corners return the vertices themselves.
    """
    corner = b.corner()
    if corner is not None:
        return patch.vertices[corner]

    sphere, _ = blend_spheres(patch, b).normalized()
    versor = 1.0 - geometric_product(sphere.blade, patch.plane.blade)
    scale = geometric_product(versor, ~versor).scalar_part
    if scale <= Constants.ROTOR_TOLERANCE:
        raise OppositeObjects(f"blended sphere is opposite to the triangle plane at {b}")
    rotor = Rotor(versor).normalized()
    return normalize_point(apply_rotor(rotor, barycentric_point(patch, b).vec))


class TriangleMesh(NamedTuple):
    vertices: list
    weights: list
    faces: list


class MeshSampler:
    """
    Evaluates the lattice rows of a patch concurrently and merges them by row.
    """

    __slots__ = ("patch", "progress_callback", "max_workers")

    def __init__(self, patch, progress_callback=None, max_workers=None):
        self.patch = patch
        self.progress_callback = progress_callback
        self.max_workers = max_workers

    def sample(self, rows):
        total = len(rows)
        results = [None] * total
        processed = 0

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_map = {executor.submit(self._sample_row, row): index for index, row in enumerate(rows)}

            for future in concurrent.futures.as_completed(future_map):
                results[future_map[future]] = future.result()
                processed += 1
                if self.progress_callback:
                    self.progress_callback(processed, total)

        return [point for row in results for point in row]

    def _sample_row(self, row):
        return [evaluate_surface(self.patch, Barycentric(*weights)).euclidean() for weights in row]


def sample_mesh(patch, n, progress_callback=None, max_workers=None):
    """
    Evaluate the patch on the regular barycentric lattice with n subdivisions.
    :return: TriangleMesh with (n+1)(n+2)/2 vertices and n^2 faces.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidPatch(f"subdivision count must be a positive integer, got {n!r}")

    weights = barycentric_lattice(n)
    rows, start = [], 0
    for i in range(n + 1):
        length = n + 1 - i
        rows.append(weights[start:start + length])
        start += length

    vertices = MeshSampler(patch, progress_callback, max_workers).sample(rows)
    faces = lattice_faces(n)
    logger.info(f"Sampled patch into {len(vertices)} vertices and {len(faces)} faces")
    return TriangleMesh(vertices, weights, faces)
