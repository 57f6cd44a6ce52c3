"""
Dense geometric algebra of the signature-(4,1) space spanned by e0..e4.

Blades are indexed by bitmask (bit i set means e_i is a factor); the canonical
blade writes its generators in ascending order. e0 squares to -1, e1..e4 to +1.
"""
import math
import operator

import numpy as np

from config import Constants
from functions import get_logger
from .exceptions import InvalidGrade, InvalidRotor, NonHomogeneous, SeriesDivergence

logger = get_logger("circle_spline.ga_core")

DIMENSION = 5
BLADE_COUNT = 1 << DIMENSION
METRIC = (-1.0, 1.0, 1.0, 1.0, 1.0)


def _reordering_sign(a, b):
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def _blade_product(a, b):
    sign = _reordering_sign(a, b)
    common = a & b
    for i in range(DIMENSION):
        if common & (1 << i):
            sign *= METRIC[i]
    return a ^ b, sign


def _build_tables():
    grades = np.array([bin(mask).count("1") for mask in range(BLADE_COUNT)])
    geometric = np.zeros((BLADE_COUNT, BLADE_COUNT, BLADE_COUNT))
    outer = np.zeros_like(geometric)
    inner = np.zeros_like(geometric)

    for i in range(BLADE_COUNT):
        for j in range(BLADE_COUNT):
            k, sign = _blade_product(i, j)
            geometric[i, j, k] = sign
            if grades[k] == grades[i] + grades[j]:
                outer[i, j, k] = sign
            if grades[k] == abs(grades[i] - grades[j]):
                inner[i, j, k] = sign

    shape = (BLADE_COUNT * BLADE_COUNT, BLADE_COUNT)
    return grades, geometric.reshape(shape), outer.reshape(shape), inner.reshape(shape)


GRADES, _GEOMETRIC, _OUTER, _INNER = _build_tables()
REVERSE_SIGNS = np.where((GRADES * (GRADES - 1) // 2) % 2 == 0, 1.0, -1.0)
# <e_A reverse(e_A)>_0 for every basis blade
_SELF_NORM_SIGNS = np.array([_blade_product(mask, mask)[1] for mask in range(BLADE_COUNT)]) * REVERSE_SIGNS
_EVEN = GRADES % 2 == 0


def blade_name(mask):
    if mask == 0:
        return "1"
    return "e" + "".join(str(i) for i in range(DIMENSION) if mask & (1 << i))


class GradeIndex(int):
    """
    A grade of the algebra, 0..5.
    """

    def __new__(cls, value):
        value = operator.index(value)
        if not 0 <= value <= DIMENSION:
            raise InvalidGrade(f"grade {value} outside 0..{DIMENSION}")
        return super().__new__(cls, value)


class Multivector:
    """
    Immutable element of G(4,1) stored as 32 blade coefficients.

    Operators: `*` geometric product, `^` outer product, `|` inner product,
    `~` reversion. Numbers mix in as scalars.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            array = np.zeros(BLADE_COUNT)
        else:
            array = np.array(coeffs, dtype=float)
        if array.shape != (BLADE_COUNT,):
            raise ValueError(f"expected {BLADE_COUNT} coefficients, got shape {array.shape}")
        array.setflags(write=False)
        self.coeffs = array

    @classmethod
    def scalar(cls, value):
        coeffs = np.zeros(BLADE_COUNT)
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def blade(cls, mask, value=1.0):
        coeffs = np.zeros(BLADE_COUNT)
        coeffs[mask] = value
        return cls(coeffs)

    @classmethod
    def basis(cls, index):
        return cls.blade(1 << index)

    @classmethod
    def vector(cls, components):
        """
        Grade-1 element from its five components on e0..e4.
        """
        coeffs = np.zeros(BLADE_COUNT)
        for i, value in enumerate(components):
            coeffs[1 << i] = value
        return cls(coeffs)

    @staticmethod
    def _wrap(value):
        if isinstance(value, Multivector):
            return value
        if isinstance(value, (int, float, np.floating, np.integer)):
            return Multivector.scalar(float(value))
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return Multivector(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return Multivector(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return Multivector(other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return outer_product(self, other)

    def __rxor__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return outer_product(other, self)

    def __or__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return inner_product(self, other)

    def __ror__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return inner_product(other, self)

    def __invert__(self):
        return reverse(self)

    def __getitem__(self, mask):
        return float(self.coeffs[mask])

    def __repr__(self):
        terms = [f"{value:+.6g}*{blade_name(mask)}" for mask, value in enumerate(self.coeffs) if value != 0.0]
        return f"Multivector({' '.join(terms) if terms else '0'})"

    @property
    def scalar_part(self):
        return float(self.coeffs[0])

    def grade(self, k):
        return grade_project(self, k)

    def grades(self):
        """
        Set of grades carrying a nonzero coefficient.
        """
        return {int(g) for g in np.unique(GRADES[self.coeffs != 0.0])}

    def norm(self):
        """
        Euclidean norm of the coefficient vector, used as the scale for relative tolerances.
        """
        return float(np.linalg.norm(self.coeffs))

    def is_zero(self, scale=None, tolerance=Constants.ZERO_TOLERANCE):
        reference = self.norm() if scale is None else scale
        return float(np.max(np.abs(self.coeffs))) <= tolerance * max(reference, np.finfo(float).tiny)

    def dominant_grade(self):
        """
        The grade with the largest coefficient mass.
        """
        weights = np.bincount(GRADES, weights=self.coeffs ** 2, minlength=DIMENSION + 1)
        return int(np.argmax(weights))

    def is_homogeneous(self, tolerance=Constants.ZERO_TOLERANCE):
        total = self.norm()
        if total == 0.0:
            return True
        main = self.dominant_grade()
        rest = np.linalg.norm(self.coeffs[GRADES != main])
        return rest <= tolerance * total

    def allclose(self, other, tolerance=1e-12):
        other = self._wrap(other)
        scale = max(self.norm(), other.norm(), 1.0)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tolerance * scale)


def geometric_product(a, b):
    return Multivector(np.outer(a.coeffs, b.coeffs).reshape(-1) @ _GEOMETRIC)


def outer_product(a, b):
    return Multivector(np.outer(a.coeffs, b.coeffs).reshape(-1) @ _OUTER)


def inner_product(a, b):
    """
    Grade-lowering product <A_r B_s>_{|r-s|} summed over the grade parts of a and b.
    """
    return Multivector(np.outer(a.coeffs, b.coeffs).reshape(-1) @ _INNER)


def grade_project(a, k):
    k = GradeIndex(k)
    return Multivector(np.where(GRADES == k, a.coeffs, 0.0))


def reverse(a):
    return Multivector(a.coeffs * REVERSE_SIGNS)


E0, E1, E2, E3, E4 = (Multivector.basis(i) for i in range(DIMENSION))
PSEUDOSCALAR = Multivector.blade(BLADE_COUNT - 1)


def dual(a):
    return geometric_product(PSEUDOSCALAR, a)


def self_norm(a):
    """
    Scalar part of a * reverse(a).
    """
    return float(np.dot(a.coeffs ** 2, _SELF_NORM_SIGNS))


def magnitude(a):
    """
    Return (sqrt(|<a ~a>_0|), sign of <a ~a>_0) for a homogeneous multivector.
    """
    if not a.is_homogeneous():
        raise NonHomogeneous(f"magnitude needs a single grade, got grades {sorted(a.grades())}")
    value = self_norm(a)
    if abs(value) <= Constants.ZERO_TOLERANCE * a.norm() ** 2:
        return 0.0, 0
    return math.sqrt(abs(value)), 1 if value > 0 else -1


class Rotor:
    """
    Even multivector R with scalar R ~R > 0, acting by sandwiching.

    Residuals of R ~R are measured against the squared coefficient norm |R|^2, the
    size of the rounding noise in the product; R ~R itself can be far smaller.
    """

    __slots__ = ("even", "norm2")

    def __init__(self, value):
        even = value.even if isinstance(value, Rotor) else Multivector._wrap(value)
        if even is NotImplemented:
            raise InvalidRotor(f"cannot build a rotor from {type(value).__name__}")

        scale = even.norm()
        if np.any(np.abs(even.coeffs[~_EVEN]) > Constants.ROTOR_TOLERANCE * scale):
            raise InvalidRotor("rotor has odd-grade components")

        product = geometric_product(even, reverse(even))
        norm2 = product.scalar_part
        if norm2 <= Constants.ZERO_TOLERANCE * scale ** 2:
            raise InvalidRotor(f"R ~R = {norm2:.3e} is not positive")
        if np.max(np.abs(product.coeffs[1:])) > Constants.ROTOR_TOLERANCE * scale ** 2:
            raise InvalidRotor("R ~R has a non-scalar part")

        self.even = Multivector(np.where(_EVEN, even.coeffs, 0.0))
        self.norm2 = norm2

    @classmethod
    def _known(cls, even, norm2):
        """
        Rotor whose R ~R is known exactly, e.g. an exponential or a product of rotors.
        """
        rotor = cls.__new__(cls)
        rotor.even = Multivector(np.where(_EVEN, even.coeffs, 0.0))
        rotor.norm2 = norm2
        return rotor

    def __repr__(self):
        return f"Rotor({self.even!r})"

    def normalized(self):
        return Rotor._known(self.even / math.sqrt(self.norm2), 1.0)

    def reversed(self):
        return Rotor._known(reverse(self.even), self.norm2)

    def then(self, other):
        """
        Rotor applying self first and other second.
        """
        return Rotor._known(geometric_product(other.even, self.even), self.norm2 * other.norm2)


def apply_rotor(rotor, a):
    """
    Sandwich a between rotor and its reverse. The result keeps the grades of a.
    """
    rotor = rotor if isinstance(rotor, Rotor) else Rotor(rotor)
    result = geometric_product(geometric_product(rotor.even, a), reverse(rotor.even))
    present = a.grades()
    if not present:
        return result
    return Multivector(np.where(np.isin(GRADES, list(present)), result.coeffs, 0.0))


def compose_rotors(first, second):
    return first.then(second)


def exp_bivector(bivector):
    """
    Exponential of a pure bivector by scaling and squaring of the power series.
    """
    scale = bivector.norm()
    if scale > 0.0 and np.any(np.abs(bivector.coeffs[GRADES != 2]) > Constants.ZERO_TOLERANCE * scale):
        raise InvalidGrade("exp_bivector needs a pure grade-2 argument")
    if scale == 0.0:
        return Rotor(1.0)

    squarings = 0
    if scale > Constants.EXP_SCALING_NORM:
        squarings = math.ceil(math.log2(scale / Constants.EXP_SCALING_NORM))
    scaled = bivector / (2.0 ** squarings)

    term = Multivector.scalar(1.0)
    total = term
    for k in range(1, Constants.EXP_SERIES_TERMS + 1):
        term = geometric_product(term, scaled) / k
        total = total + term
        if term.norm() <= Constants.EXP_SERIES_TOLERANCE * total.norm():
            break
    else:
        raise SeriesDivergence(f"exp series did not converge in {Constants.EXP_SERIES_TERMS} terms")

    for _ in range(squarings):
        total = geometric_product(total, total)

    logger.debug(f"exp_bivector: |B|={scale:.3e}, squarings={squarings}")
    return Rotor._known(total, 1.0)
