import numpy as np


def three_point_curvature(a, b, c):
    """
    Curvature 1/rho of the circle through three consecutive samples; 0 for collinear samples.
    """
    a, b, c = (np.asarray(p, dtype=float) for p in (a, b, c))
    lengths = np.linalg.norm(b - a) * np.linalg.norm(c - b) * np.linalg.norm(c - a)
    if lengths == 0.0:
        return 0.0
    return float(2.0 * np.linalg.norm(np.cross(b - a, c - a)) / lengths)
