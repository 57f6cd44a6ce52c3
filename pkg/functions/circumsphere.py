import numpy as np


def circumsphere(a, b, c, d):
    """
    Centre and radius of the sphere through four points, from the linear system
    2 (p_i - a) . centre = |p_i|^2 - |a|^2.
    :return: (centre as numpy array, radius), or None for coplanar points.
    """
    points = np.array([a, b, c, d], dtype=float)
    matrix = 2.0 * (points[1:] - points[0])
    rhs = np.sum(points[1:] ** 2, axis=1) - np.dot(points[0], points[0])
    scale = max(float(np.max(np.abs(matrix))), 1e-300)
    if abs(np.linalg.det(matrix / scale)) <= 1e-12:
        return None
    centre = np.linalg.solve(matrix, rhs)
    return centre, float(np.linalg.norm(points[0] - centre))
