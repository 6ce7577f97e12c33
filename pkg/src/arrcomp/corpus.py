"""Complex corpora: exhaustive enumeration on few vertices, seeded sampling.

Complexes are generated through their antichains of missing faces, which
range over every complex on a fixed vertex set except the void one.
Enumeration deduplicates up to vertex relabeling by default, since every
quantity this package computes is invariant under it.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .simplicial import SimplicialComplex, complex_from_missing_faces


def iso_canonical_form(K: SimplicialComplex) -> tuple:
    """Smallest facet encoding over all relabelings of [m]."""
    faces = [tuple(sorted(f)) for f in K.facets]
    best = None
    for perm in permutations(range(1, K.m + 1)):
        image = tuple(sorted(tuple(sorted(perm[v - 1] for v in f)) for f in faces))
        if best is None or image < best:
            best = image
    return (K.m, best)


def _antichains(universe, compatible):
    chosen: list = []

    def rec(start):
        yield tuple(chosen)
        for i in range(start, len(universe)):
            s = universe[i]
            if any(s <= t or t <= s for t in chosen):
                continue
            if not compatible(s, chosen):
                continue
            chosen.append(s)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def all_complexes(m: int, *, allow_ghosts: bool = True,
                  common_vertex_only: bool = False,
                  up_to_iso: bool = True) -> list[SimplicialComplex]:
    """Every complex on [m] (except the void one), via missing-face antichains.

    Singleton missing faces create ghost vertices; forbid them when the
    diagonal arrangement must exist.  The common-vertex filter keeps only
    complexes whose missing faces pairwise intersect.
    """
    min_size = 1 if allow_ghosts else 2
    universe = [frozenset(c) for size in range(min_size, m + 1)
                for c in combinations(range(1, m + 1), size)]
    if common_vertex_only:
        def compatible(s, chosen):
            return all(s & t for t in chosen)
    else:
        def compatible(s, chosen):
            return True
    out = []
    seen = set()
    for mf in _antichains(universe, compatible):
        K = complex_from_missing_faces(m, mf)
        if up_to_iso:
            key = iso_canonical_form(K)
            if key in seen:
                continue
            seen.add(key)
        out.append(K)
    return out


def random_mf_complex(m: int, rng, *, max_missing: int = 6, min_size: int = 1,
                      common_vertex_only: bool = False) -> SimplicialComplex:
    """One seeded-random complex on [m], at most max_missing missing faces."""
    count = rng.randint(1, max_missing)
    chosen: list = []
    tries = 0
    while len(chosen) < count and tries < 60:
        tries += 1
        size = rng.randint(min_size, m)
        cand = frozenset(rng.sample(range(1, m + 1), size))
        if any(cand <= c or c <= cand for c in chosen):
            continue
        if common_vertex_only and any(not (cand & c) for c in chosen):
            continue
        chosen.append(cand)
    return complex_from_missing_faces(m, chosen)
