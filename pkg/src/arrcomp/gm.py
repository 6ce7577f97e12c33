"""Cohomology of arrangement complements, by three independent routes.

The main route sums interval homology over the intersection lattice: a
stratum u contributes reduced H_j of its open lower interval to H^q of the
complement at q = N - d(u) - (j + 2), and the bottom stratum contributes Z
in degree 0.  The two other routes, available when all missing faces of K
pairwise intersect, read the answer off the Alexander dual (links) or the
full subcomplexes of K (a Hochster-style sum); they share no code with the
lattice route beyond the homology engine.
"""
from __future__ import annotations

from itertools import combinations

from .abelian import GradedAbelianGroup
from .chains import reduced_cohomology, reduced_homology
from .errors import DomainError, IntegrityError
from .lattice import (
    IntersectionLattice,
    coordinate_lattice,
    diagonal_lattice,
    interval_pair_homology,
    interval_reduced_homology,
)
from .simplicial import SimplicialComplex


def _interval_worker(args):
    L, i = args
    return i, interval_reduced_homology(L, L.elements[i])


def _collect_interval_homology(L: IntersectionLattice, jobs):
    idxs = list(range(1, len(L.elements)))
    if jobs and jobs > 1 and len(idxs) > 3:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            got = list(pool.map(_interval_worker, [(L, i) for i in idxs], chunksize=4))
        got.sort()
        return [(L.elements[i], H) for i, H in got]
    return [(L.elements[i], interval_reduced_homology(L, L.elements[i])) for i in idxs]


def gm_cohomology(L: IntersectionLattice, max_q: int | None = None,
                  oracle: bool = False, jobs: int | None = None) -> GradedAbelianGroup:
    """H^* of the arrangement complement from the intersection lattice."""
    N = L.N
    if max_q is None:
        max_q = N
    parts: dict[int, list] = {0: [1, []]}  # bottom stratum: Z in degree 0
    q_floor = 1 if L.ambient == "complex" else 0
    q_ceiling = N - 1 if L.kind == "coordinate" else N - L.c - 1
    for u, H in _collect_interval_homology(L, jobs):
        if oracle:
            pair = interval_pair_homology(L, u)
            if pair != H.shifted(2):
                raise IntegrityError(
                    f"pair homology disagrees with open-interval homology at {u!r}")
        for j in H.degrees():
            rank, tors = H.part(j)
            q = N - L.d(u) - (j + 2)
            if q < q_floor or q > q_ceiling:
                raise IntegrityError(
                    f"contribution of {u!r} lands at degree {q}, outside [{q_floor}, {q_ceiling}]")
            slot = parts.setdefault(q, [0, []])
            slot[0] += rank
            slot[1].extend(tors)
    out = GradedAbelianGroup({q: (r, tuple(t)) for q, (r, t) in parts.items()})
    return out.restricted(max_q)


def diagonal_cohomology(K: SimplicialComplex, ambient: str = "complex",
                        max_q: int | None = None, oracle: bool = False,
                        jobs: int | None = None) -> GradedAbelianGroup:
    return gm_cohomology(diagonal_lattice(K, ambient), max_q=max_q,
                         oracle=oracle, jobs=jobs)


def _require_diagonal_closed_form(K: SimplicialComplex) -> None:
    ghosts = frozenset(range(1, K.m + 1)) - K.vertices
    if ghosts:
        raise DomainError(f"ghost vertices not allowed here: {sorted(ghosts)}")
    if not K.common_vertex_predicate():
        raise DomainError("missing faces must pairwise intersect")


def diagonal_cohomology_via_links(K: SimplicialComplex,
                                  max_q: int | None = None) -> GradedAbelianGroup:
    """H^*(D(K)) summed over links in the Alexander dual (complex ambient).

    Each dual face F, the empty face included, contributes reduced H_j of
    link(F) in the dual at degree q = 2m - 2|F| - 4 - j.
    """
    _require_diagonal_closed_form(K)
    m = K.m
    if max_q is None:
        max_q = 2 * m
    dual = K.alexander_dual()
    parts: dict[int, list] = {0: [1, []]}
    if not dual.is_void:
        for F in sorted(dual.faces(), key=lambda s: (len(s), tuple(sorted(s)))):
            H = reduced_homology(dual.link(F))
            for j in H.degrees():
                rank, tors = H.part(j)
                q = 2 * m - 2 * len(F) - 4 - j
                if q < 1:
                    raise IntegrityError(f"link of {sorted(F)} contributes below degree 1")
                slot = parts.setdefault(q, [0, []])
                slot[0] += rank
                slot[1].extend(tors)
    out = GradedAbelianGroup({q: (r, tuple(t)) for q, (r, t) in parts.items()})
    return out.restricted(max_q)


def diagonal_cohomology_via_subcomplexes(K: SimplicialComplex,
                                         max_q: int | None = None) -> GradedAbelianGroup:
    """H^*(D(K)) as the sum of shifted reduced cohomology of full subcomplexes.

    A nonempty subset I contributes reduced H^{q - |I| + 1} of K restricted
    to I; the degree-0 unit is supplied separately.
    """
    _require_diagonal_closed_form(K)
    m = K.m
    if max_q is None:
        max_q = 2 * m
    total = GradedAbelianGroup({0: (1, ())})
    for size in range(1, m + 1):
        for I in combinations(range(1, m + 1), size):
            H = reduced_cohomology(K.full_subcomplex(I))
            if not H.is_zero:
                total = total + H.shifted(size - 1)
    return total.restricted(max_q)


def hochster_coordinate_cohomology(K: SimplicialComplex, ambient: str = "complex",
                                   max_q: int | None = None) -> GradedAbelianGroup:
    """H^*(U(K)) by the subcomplex sum; the lattice-free coordinate oracle.

    Complex ambient shifts the contribution of I up by |I| + 1; the real
    ambient shifts every contribution by 1.
    """
    if K.is_void:
        raise DomainError("the void complex has no coordinate arrangement")
    if ambient not in ("real", "complex"):
        raise DomainError(f"ambient must be real or complex, got {ambient!r}")
    m = K.m
    if m > 16:
        raise DomainError("subset enumeration capped at 16 vertices")
    c = 2 if ambient == "complex" else 1
    if max_q is None:
        max_q = c * m
    total = GradedAbelianGroup({0: (1, ())})
    for size in range(1, m + 1):
        for I in combinations(range(1, m + 1), size):
            H = reduced_cohomology(K.full_subcomplex(I))
            if not H.is_zero:
                total = total + H.shifted(size + 1 if ambient == "complex" else 1)
    return total.restricted(max_q)


def coordinate_cohomology(K: SimplicialComplex, ambient: str = "complex",
                          max_q: int | None = None, oracle: bool = False,
                          jobs: int | None = None) -> GradedAbelianGroup:
    """H^*(U(K)) (complex) or of its real analogue via the lattice route."""
    L = coordinate_lattice(K, ambient)
    out = gm_cohomology(L, max_q=max_q, oracle=oracle, jobs=jobs)
    if oracle:
        check = hochster_coordinate_cohomology(K, ambient, max_q=max_q)
        if check != out:
            raise IntegrityError("lattice route and subcomplex sum disagree")
    return out
