import numpy as np

from config import Constants


def count_curvature_sign_changes(points, tolerance=Constants.CURVATURE_SIGN_CUTOFF):
    """
    Count sign changes of the signed curvature along a planar polyline.

    The sign of each turn is measured against the normal of the best-fit plane.
    Turns below tolerance * (largest turn) count as straight, so shallow dips well under
    the curve's own bending are not reported; pass a tiny tolerance to count every flip.
    """
    values = np.asarray(points, dtype=float)
    if len(values) < 4:
        return 0
    centred = values - values.mean(axis=0)
    normal = np.linalg.svd(centred)[2][-1]

    incoming = values[1:-1] - values[:-2]
    outgoing = values[2:] - values[1:-1]
    chords = values[2:] - values[:-2]
    lengths = (np.linalg.norm(incoming, axis=1) * np.linalg.norm(outgoing, axis=1)
               * np.linalg.norm(chords, axis=1))
    turns = np.cross(incoming, outgoing) @ normal
    curvature = np.divide(2.0 * turns, lengths, out=np.zeros_like(turns), where=lengths > 0.0)

    cutoff = tolerance * float(np.max(np.abs(curvature), initial=0.0))
    signs = np.sign(curvature[np.abs(curvature) > cutoff])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
