import numpy as np


def circumcircle(a, b, c):
    """
    Centre and radius of the circle through three points in space.
    :return: (centre as numpy array, radius), or None for collinear points.
    """
    a, b, c = (np.asarray(p, dtype=float) for p in (a, b, c))
    ab, ac = b - a, c - a
    normal = np.cross(ab, ac)
    denominator = 2.0 * np.dot(normal, normal)
    if denominator <= 1e-24 * max(np.dot(ab, ab), np.dot(ac, ac)) ** 2:
        return None
    offset = (np.dot(ab, ab) * np.cross(ac, normal) + np.dot(ac, ac) * np.cross(normal, ab)) / denominator
    return a + offset, float(np.linalg.norm(offset))
