"""Named complexes used throughout the tests and the command line examples."""
from __future__ import annotations

from itertools import combinations

from .errors import DomainError
from .simplicial import SimplicialComplex, complex_from_missing_faces


def projective_plane_6() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex(6, [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
    ])


def square_boundary() -> SimplicialComplex:
    """The 4-gon; its two missing faces are the disjoint diagonals."""
    return SimplicialComplex(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def seven_vertex_golod() -> SimplicialComplex:
    """Seven vertices, ten 4-element missing faces, all through vertex 7.

    Every pair of missing faces meets (in vertex 7 at least), and the
    diagonal complement realizes a coordinate complement on six vertices.
    """
    return complex_from_missing_faces(7, [
        (1, 2, 3, 7), (1, 2, 4, 7), (1, 3, 5, 7), (1, 4, 6, 7), (1, 5, 6, 7),
        (2, 3, 6, 7), (2, 4, 5, 7), (2, 5, 6, 7), (3, 4, 5, 7), (3, 4, 6, 7),
    ])


def k_equal_complex(m: int, k: int) -> SimplicialComplex:
    """The (k-2)-skeleton of the full simplex on [m].

    Its missing faces are exactly the k-subsets, so its diagonal
    arrangement consists of all subspaces forcing some k coordinates
    equal.
    """
    if k < 2 or k > m:
        raise DomainError(f"need 2 <= k <= m, got k={k}, m={m}")
    return SimplicialComplex(m, combinations(range(1, m + 1), k - 1))
