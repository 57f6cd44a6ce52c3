def _row_start(row, n):
    return row * (n + 1) - row * (row - 1) // 2


def barycentric_lattice(n):
    """
    Regular barycentric lattice of a triangle with n subdivisions per edge.

    Vertices are listed row by row: row i (0..n) holds nu = i/n and mu = j/n for
    j = 0..n-i, with lambda = 1 - mu - nu. The first vertex is the first corner,
    row 0 ends at the second corner and the last vertex is the third corner.
    :return: list of (lambda, mu, nu) tuples, (n+1)(n+2)/2 of them.
    """
    if n < 1:
        raise ValueError(f"subdivision count must be at least 1, got {n}")
    weights = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            weights.append(((n - i - j) / n, j / n, i / n))
    return weights


def lattice_faces(n):
    """
    Triangles of the lattice as 0-based vertex index triples, n^2 of them.

    Each face winds counter-clockwise when viewed against the normal
    (X2 - X1) x (X3 - X1) of the corner triangle.
    """
    if n < 1:
        raise ValueError(f"subdivision count must be at least 1, got {n}")
    faces = []
    for i in range(n):
        row, next_row = _row_start(i, n), _row_start(i + 1, n)
        for j in range(n - i):
            faces.append((row + j, row + j + 1, next_row + j))
            if j < n - i - 1:
                faces.append((row + j + 1, next_row + j + 1, next_row + j))
    return faces
