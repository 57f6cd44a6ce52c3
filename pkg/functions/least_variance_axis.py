import numpy as np


def least_variance_axis(points):
    """
    Index (0, 1 or 2) of the coordinate axis along which the points vary least.
    """
    values = np.asarray(points, dtype=float)
    return int(np.argmin(np.var(values, axis=0)))
