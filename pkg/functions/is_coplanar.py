import numpy as np


def is_coplanar(points, tolerance=1e-6):
    """
    True when every point lies within tolerance * (bounding scale) of a common plane.

    The plane is the least-squares fit; its normal is the last right singular vector.
    """
    values = np.asarray(points, dtype=float)
    if len(values) <= 3:
        return True
    centred = values - values.mean(axis=0)
    scale = float(np.max(np.ptp(values, axis=0)))
    if scale == 0.0:
        return True
    normal = np.linalg.svd(centred)[2][-1]
    return float(np.max(np.abs(centred @ normal))) <= tolerance * scale
