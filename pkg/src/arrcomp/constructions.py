"""Structural relations between coordinate and diagonal complements.

Covers the passage in both directions (cone extension and its inverse),
the wedge decomposition of the coordinate complement by full subcomplexes,
closed forms for skeleta of the simplex, and the suspension and cone
consistency checks that tie the two arrangement families together.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

from .abelian import GradedAbelianGroup
from .catalog import k_equal_complex
from .chains import reduced_cohomology
from .errors import DomainError
from .gm import coordinate_cohomology, diagonal_cohomology
from .simplicial import SimplicialComplex


def complex_info(K: SimplicialComplex) -> dict:
    """Dimension and neighbourliness summary.

    K is j-neighbourly when every j+1 vertices span a face; the report
    carries the largest such j (-1 when even a vertex is missing).
    """
    if K.is_void:
        return {"m": K.m, "dimension": -2, "max_neighbourly": None}
    best = -1
    for j in range(K.m):
        if all(K.has_face(frozenset(c))
               for c in combinations(range(1, K.m + 1), j + 1)):
            best = j
        else:
            break
    return {"m": K.m, "dimension": K.dimension, "max_neighbourly": best}


def realize_as_coordinate(L: SimplicialComplex) -> SimplicialComplex | None:
    """Invert the cone extension when possible.

    If some m-1 vertices span a face, the complement of the remaining
    vertex v links to a complex K with D(L) and U(K) cohomologically the
    same space; returns K on m-1 vertices, or None when no such face
    exists.  The largest eligible v is chosen, so composing with the cone
    extension gives back the original complex exactly.
    """
    if L.is_void:
        raise DomainError("the void complex has no diagonal arrangement")
    ghosts = frozenset(range(1, L.m + 1)) - L.vertices
    if ghosts:
        raise DomainError(f"ghost vertices not allowed here: {sorted(ghosts)}")
    ground = frozenset(range(1, L.m + 1))
    for v in range(L.m, 0, -1):
        F = ground - {v}
        if L.has_face(F):
            return L.link(frozenset({v})).full_subcomplex(sorted(F))
    return None


def bbcg_summands(K: SimplicialComplex) -> list[tuple[frozenset, GradedAbelianGroup]]:
    """Nonzero wedge summands of the coordinate complement, one per subset.

    Each nonempty I contributes the reduced cohomology of K restricted to
    I, raised by |I|+1; subsets with contractible restriction are omitted.
    Summing every contribution and a unit in degree 0 reproduces
    H^*(U(K)) for every K.
    """
    if K.is_void:
        raise DomainError("the void complex has no coordinate arrangement")
    out = []
    for size in range(1, K.m + 1):
        for I in combinations(range(1, K.m + 1), size):
            H = reduced_cohomology(K.full_subcomplex(I))
            if not H.is_zero:
                out.append((frozenset(I), H.shifted(size + 1)))
    return out


def bbcg_report(K: SimplicialComplex) -> dict:
    """Wedge summary of the summands plus the aggregation identity check."""
    summands = bbcg_summands(K)
    spheres: dict[int, int] = {}
    others = []
    for I, G in summands:
        degs = G.degrees()
        rank, tors = G.part(degs[0]) if degs else (0, ())
        if len(degs) == 1 and not tors:
            spheres[degs[0]] = spheres.get(degs[0], 0) + rank
        else:
            others.append((I, G))
    pieces = []
    for d in sorted(spheres):
        n = spheres[d]
        pieces.append(f"S^{d}" if n == 1 else f"(S^{d})^{n}")
    for I, G in sorted(others, key=lambda p: (len(p[0]), sorted(p[0]))):
        label = ",".join(str(v) for v in sorted(I))
        pieces.append(f"Sigma^{len(I) + 1}|K[{label}]|")
    aggregate = GradedAbelianGroup({0: (1, ())})
    for _, G in summands:
        aggregate = aggregate + G
    expected = coordinate_cohomology(K)
    return {
        "summands": [{"I": sorted(I), "shift": len(I) + 1, "group": G}
                     for I, G in summands],
        "spheres": spheres,
        "other_summands": [{"I": sorted(I), "group": G} for I, G in others],
        "wedge": " v ".join(pieces) if pieces else "point",
        "all_spheres": not others,
        "aggregate": aggregate,
        "matches_coordinate_cohomology": aggregate == expected,
    }


def kequal_closed_form(m: int, k: int, ambient: str = "complex") -> dict:
    """Cohomology of the k-equal arrangement complement by three routes.

    Reports the printed closed form (only inside the range k < m < 2k),
    the desuspended wedge of spheres, and the direct lattice computation.
    The complex-ambient printed coefficient disagrees with the other two
    routes, which agree with each other; both readings are reported and
    the discrepancy is flagged rather than resolved silently.
    """
    if ambient not in ("real", "complex"):
        raise DomainError(f"ambient must be real or complex, got {ambient!r}")
    K = k_equal_complex(m, k)
    in_range = k < m < 2 * k
    warnings = ["skeleton convention: the complex lives on m vertices, so the"
                " arrangement sits in ambient dimension m"]
    wedge_counts = {l: comb(m, l) * comb(l - 1, k - 1) for l in range(k, m + 1)}
    s = sum(wedge_counts.values())

    def free_group(ranks: dict[int, int]) -> GradedAbelianGroup:
        return GradedAbelianGroup({q: (r, ()) for q, r in ranks.items() if r})

    if ambient == "real":
        ranks = {0: 1}
        ranks[k - 2] = ranks.get(k - 2, 0) + s  # k = 2 lands on the unit degree
        wedge_form = free_group(ranks)
    else:
        ranks = {0: 1}
        for l, n in wedge_counts.items():
            q = k + l - 3
            ranks[q] = ranks.get(q, 0) + n
        wedge_form = free_group(ranks)

    closed_form = None
    if in_range:
        if ambient == "real":
            closed_form = wedge_form
        else:
            ranks = {0: 1}
            for q in range(2 * k - 3, m + k - 2):
                t = comb(m, q - k + 1) * comb(q - k, k - 1)
                ranks[q] = ranks.get(q, 0) + t
            closed_form = free_group(ranks)
    else:
        warnings.append("parameters outside the closed-form range k < m < 2k;"
                        " closed form suppressed, computational routes still run")

    gm = diagonal_cohomology(K, ambient)
    if closed_form is not None and ambient == "complex" and closed_form != wedge_form:
        warnings.append("printed closed-form coefficient t(q) disagrees with the"
                        " desuspended wedge ranks; both are reported, the wedge"
                        " route matches the lattice computation")
    return {
        "m": m, "k": k, "ambient": ambient, "in_range": in_range,
        "s": s, "wedge_counts": wedge_counts,
        "closed_form": closed_form, "wedge_form": wedge_form, "gm": gm,
        "gm_matches_wedge": gm == wedge_form,
        "gm_matches_closed_form": None if closed_form is None else gm == closed_form,
        "closed_form_matches_wedge": None if closed_form is None else closed_form == wedge_form,
        "warnings": warnings,
    }


def _degree_comparison(left: GradedAbelianGroup, right: GradedAbelianGroup) -> list[dict]:
    rows = []
    for q in sorted(set(left.degrees()) | set(right.degrees())):
        a, b = left.part(q), right.part(q)
        rows.append({"q": q, "left": [a[0], list(a[1])],
                     "right": [b[0], list(b[1])], "equal": a == b})
    return rows


def suspension_relation_check(K: SimplicialComplex) -> dict:
    """Coordinate vs diagonal complement through one or two suspensions.

    Requires every pair of missing faces to share a vertex; under that
    hypothesis H^q of the coordinate complement must equal reduced
    H^{q-2} (complex) or H^{q-1} (real) of the diagonal one.
    """
    if not K.common_vertex_predicate():
        raise DomainError("missing faces must pairwise intersect")
    U2 = coordinate_cohomology(K, "complex")
    D2 = diagonal_cohomology(K, "complex")
    UR = coordinate_cohomology(K, "real")
    DR = diagonal_cohomology(K, "real")
    sus2 = D2.reduced_at_zero().shifted(2) + GradedAbelianGroup({0: (1, ())})
    sus1 = DR.reduced_at_zero().shifted(1) + GradedAbelianGroup({0: (1, ())})
    cx_match = U2 == sus2
    re_match = UR == sus1
    verdict = ("cohomology-consistent with the double (complex) and single"
               " (real) suspension relation" if cx_match and re_match
               else "MISMATCH against the suspension relation")
    return {
        "common_vertex": True,
        "complex": {"U": U2, "D": D2, "match": cx_match,
                    "degrees": _degree_comparison(U2, sus2)},
        "real": {"U": UR, "D": DR, "match": re_match,
                 "degrees": _degree_comparison(UR, sus1)},
        "match": cx_match and re_match,
        "verdict": verdict,
    }


def cone_equivalence_check(K: SimplicialComplex) -> dict:
    """Coordinate complement of K against the diagonal complement of its cone.

    No hypothesis on K beyond having a coordinate arrangement; the two
    sides must agree degreewise in both ambients.
    """
    L = K.cone_extension()
    out: dict = {"cone_m": L.m}
    ok = True
    for ambient in ("complex", "real"):
        U = coordinate_cohomology(K, ambient)
        D = diagonal_cohomology(L, ambient)
        match = U == D
        ok = ok and match
        out[ambient] = {"U": U, "D_cone": D, "match": match,
                        "degrees": _degree_comparison(U, D)}
    out["match"] = ok
    out["verdict"] = ("cohomology-consistent with the cone relation" if ok
                      else "MISMATCH against the cone relation")
    return out
