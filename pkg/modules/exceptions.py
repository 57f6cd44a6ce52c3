class GeometryError(ValueError):
    """
    Base class for every geometric failure raised by the kernel.
    """


class PointAtInfinity(GeometryError):
    pass


class NonNullVector(GeometryError):
    pass


class InvalidGrade(GeometryError):
    pass


class NonHomogeneous(GeometryError):
    pass


class SeriesDivergence(GeometryError):
    pass


class InvalidRotor(GeometryError):
    pass


class DegenerateCircle(GeometryError):
    pass


class DegenerateSphere(GeometryError):
    pass


class InfiniteRadius(GeometryError):
    pass


class NoRealPoints(GeometryError):
    pass


class TangentPoint(GeometryError):
    pass


class ParameterOutOfRange(GeometryError):
    pass


class OppositeObjects(GeometryError):
    pass


class DegenerateBlend(GeometryError):
    pass


class InvalidSpline(GeometryError):
    pass


class InvalidPatch(GeometryError):
    pass


class PathologicalConfiguration(GeometryError):
    """
    Raised for the θ = π blend and for an undecidable mid-circle side test.
    """

    def __init__(self, message, segment=None):
        self.detail = message
        self.segment = segment
        if segment is not None:
            message = f"segment {segment}: {message}"
        super().__init__(message)

    def with_segment(self, segment):
        """
        Return a copy of this error tagged with the index of the failing segment.
        """
        return PathologicalConfiguration(self.detail, segment=segment)


class InputError(ValueError):
    """
    Malformed control-point files or arguments.
    """
