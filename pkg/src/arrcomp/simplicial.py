"""Finite simplicial complexes on a ground set {1, ..., m}.

A complex is stored by its facets (maximal faces).  Vertices of the ground
set that lie in no face are allowed; they matter for the combinatorics of
minimal non-faces and Alexander duality, so m is part of the data.

Two degenerate complexes are kept distinct: the empty complex on m vertices
has the single face {} (facets == {frozenset()}), while the void complex has
no faces at all (facets == frozenset()).  The void complex only ever shows
up as the Alexander dual of the full simplex.
"""
from __future__ import annotations

from itertools import chain, combinations

from .errors import DomainError, InputError


def _clean_face(face) -> frozenset[int]:
    return frozenset(int(v) for v in face)


class SimplicialComplex:
    """Simplicial complex given by facets on ground set {1, ..., m}."""

    __slots__ = ("m", "facets", "_faces_cache")

    def __init__(self, m: int, faces):
        m = int(m)
        if m < 0:
            raise DomainError("ground set size must be nonnegative")
        self.m = m
        gens = [_clean_face(f) for f in faces]
        for f in gens:
            for v in f:
                if not 1 <= v <= m:
                    raise DomainError(f"vertex {v} outside ground set [1, {m}]")
        # drop faces contained in other faces
        uniq = set(gens)
        facets = [f for f in uniq if not any(f < g for g in uniq)]
        if not gens:
            facets = [frozenset()]  # plain constructor builds the empty complex
        self.facets = frozenset(facets)
        self._faces_cache = None

    @classmethod
    def void(cls, m: int) -> "SimplicialComplex":
        out = cls(m, [frozenset()])
        out.facets = frozenset()
        out._faces_cache = frozenset()
        return out

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, [range(1, m + 1)])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset([frozenset()])

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == frozenset([frozenset(range(1, self.m + 1))])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.m, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex.void({self.m})"
        shown = sorted(tuple(sorted(f)) for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets={shown})"

    # -- basic queries ----------------------------------------------------

    def faces(self) -> frozenset[frozenset[int]]:
        """All faces, the empty face included (unless void)."""
        if self._faces_cache is None:
            out = set()
            for f in self.facets:
                k = len(f)
                out.update(frozenset(s) for s in chain.from_iterable(
                    combinations(sorted(f), r) for r in range(k + 1)))
            self._faces_cache = frozenset(out)
        return self._faces_cache

    def has_face(self, face) -> bool:
        f = _clean_face(face)
        return any(f <= g for g in self.facets)

    def faces_of_dimension(self, d: int) -> list[frozenset[int]]:
        return sorted((f for f in self.faces() if len(f) == d + 1),
                      key=lambda s: tuple(sorted(s)))

    @property
    def dimension(self) -> int:
        """max |F| - 1 over faces; the void complex has dimension -2 by convention here."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> frozenset[int]:
        """Vertices actually used by some face (ghosts of the ground set excluded)."""
        out: set[int] = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic (the empty face counts with sign -1)."""
        if self.is_void:
            return 0
        return sum(1 if len(f) % 2 else -1 for f in self.faces())

    # -- non-faces and duality -------------------------------------------

    def missing_faces(self) -> frozenset[frozenset[int]]:
        """Minimal non-faces within the ground set; {{}} for the void complex."""
        if self.is_void:
            return frozenset([frozenset()])
        out = []
        found = self.faces()

        def grow(prefix: tuple[int, ...], start: int) -> None:
            for v in range(start, self.m + 1):
                cand = prefix + (v,)
                fc = frozenset(cand)
                if fc in found:
                    grow(cand, v + 1)
                elif all(frozenset(cand[:i] + cand[i + 1:]) in found for i in range(len(cand))):
                    out.append(fc)

        grow((), 1)
        return frozenset(out)

    def alexander_dual(self) -> "SimplicialComplex":
        """Complex whose facets are complements of the minimal non-faces."""
        ground = frozenset(range(1, self.m + 1))
        mf = self.missing_faces()
        if not mf:
            return SimplicialComplex.void(self.m)
        facets = [ground - nf for nf in mf]
        if any(f == ground for f in facets):
            # only happens for the void complex (MF = {{}})
            return SimplicialComplex.simplex(self.m)
        return SimplicialComplex(self.m, facets)

    def common_vertex_predicate(self) -> bool:
        """Whether every pair of minimal non-faces shares a vertex."""
        mf = sorted(self.missing_faces(), key=lambda s: tuple(sorted(s)))
        return all(a & b for i, a in enumerate(mf) for b in mf[i + 1:])

    # -- subcomplex constructions ----------------------------------------

    def link(self, face) -> "SimplicialComplex":
        """link(I) = {F - I : I <= F in K}, on the same ground set."""
        f = _clean_face(face)
        if not self.has_face(f):
            raise DomainError(f"link of a non-face {sorted(f)}")
        return SimplicialComplex(self.m, [g - f for g in self.facets if f <= g])

    def full_subcomplex(self, subset) -> "SimplicialComplex":
        """K restricted to a vertex subset J.

        The result lives on a ground set of size |J|, with J reindexed in
        sorted order, so its minimal non-faces and dual are computed relative
        to J alone.
        """
        j = sorted(_clean_face(subset))
        for v in j:
            if not 1 <= v <= self.m:
                raise DomainError(f"vertex {v} outside ground set")
        index = {v: i + 1 for i, v in enumerate(j)}
        jset = frozenset(j)
        gens = [frozenset(index[v] for v in (f & jset)) for f in self.facets]
        if not gens:
            return SimplicialComplex.void(len(j))
        return SimplicialComplex(len(j), gens)

    def skeleton(self, d: int) -> "SimplicialComplex":
        if self.is_void:
            return SimplicialComplex.void(self.m)
        if d < -1:
            raise DomainError("skeleton dimension below -1")
        gens = [f for f in self.faces() if len(f) <= d + 1]
        return SimplicialComplex(self.m, gens if gens else [frozenset()])

    def cone_extension(self) -> "SimplicialComplex":
        """Add vertex m+1 to every minimal non-face.

        Faces of the result on {1..m+1}: all of 2^[m] plus {I + (m+1) : I in K}.
        Equivalently its minimal non-faces are {M + (m+1) : M in MF(K)}.
        """
        mf = self.missing_faces()
        mm = self.m + 1
        if not mf:
            # the full simplex extends to the full simplex minus nothing: no
            # non-faces means the extension is the simplex on m+1 vertices
            return SimplicialComplex.simplex(mm)
        # build from facets: faces are 2^[m] union cone over K at vertex m+1;
        # for the void complex the cone part is empty and m+1 stays a ghost
        gens = [frozenset(range(1, self.m + 1))]
        new = frozenset([mm])
        gens.extend(f | new for f in self.facets)
        return SimplicialComplex(mm, gens)

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """Order complex of the poset of nonempty faces, on a fresh ground set."""
        if self.is_void:
            return SimplicialComplex.void(0)
        nonempty = sorted((f for f in self.faces() if f), key=lambda s: (len(s), tuple(sorted(s))))
        if not nonempty:
            return SimplicialComplex(0, [frozenset()])
        index = {f: i + 1 for i, f in enumerate(nonempty)}
        gens: list[frozenset[int]] = []

        # maximal chains: saturated paths from singletons to facets; in a face
        # poset every cover adds exactly one vertex
        def climb(chain_ids: tuple[int, ...], top: frozenset[int]) -> None:
            extended = False
            for g in nonempty:
                if top < g and len(g) == len(top) + 1:
                    climb(chain_ids + (index[g],), g)
                    extended = True
            if not extended:
                gens.append(frozenset(chain_ids))

        for f in nonempty:
            if len(f) == 1:
                climb((index[f],), f)
        return SimplicialComplex(len(nonempty), gens)

    # -- serialization and canonical form --------------------------------

    def canonical_key(self) -> tuple:
        """Deterministic hashable key for caching; not relabeling-invariant."""
        return (self.m, tuple(sorted(tuple(sorted(f)) for f in self.facets)))

    def to_json(self) -> dict:
        if self.is_void:
            raise DomainError("the void complex has no facet encoding")
        return {"m": self.m, "facets": sorted(sorted(f) for f in self.facets if f)}

    @classmethod
    def from_json(cls, obj) -> "SimplicialComplex":
        if not isinstance(obj, dict):
            raise InputError("expected an object with keys m and facets or missing_faces")
        if "m" not in obj:
            raise InputError("missing key: m")
        try:
            m = int(obj["m"])
        except (TypeError, ValueError):
            raise InputError("m must be an integer") from None
        if m < 0:
            raise InputError("m must be nonnegative")
        has_f = "facets" in obj
        has_mf = "missing_faces" in obj
        if has_f == has_mf:
            raise InputError("provide exactly one of facets or missing_faces")
        if has_f:
            faces = obj["facets"]
            if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
                raise InputError("facets must be a list of vertex lists")
            try:
                out = cls(m, faces)
            except DomainError as e:
                raise InputError(str(e)) from None
            return out
        mf = obj["missing_faces"]
        if not isinstance(mf, list) or not all(isinstance(f, list) for f in mf):
            raise InputError("missing_faces must be a list of vertex lists")
        sets = [frozenset(int(v) for v in f) for f in mf]
        for s in sets:
            if not s:
                raise InputError("missing_faces entries must be nonempty")
            for v in s:
                if not 1 <= v <= m:
                    raise InputError(f"vertex {v} outside ground set [1, {m}]")
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if a <= b or b <= a:
                    raise InputError("missing_faces must form an antichain")
        out = complex_from_missing_faces(m, sets)
        return out


def complex_from_missing_faces(m: int, missing) -> SimplicialComplex:
    """The complex on [m] whose faces are the sets containing no listed set.

    The list must be an antichain of nonempty sets; it then equals the
    minimal non-face collection of the result.
    """
    sets = [_clean_face(f) for f in missing]
    if any(not s for s in sets):
        raise DomainError("missing faces must be nonempty")
    ground = frozenset(range(1, m + 1))
    for s in sets:
        if not s <= ground:
            raise DomainError("missing face outside ground set")
    # facets = maximal subsets containing no forbidden set; build by pruning
    # from the top.  Candidates: complements of transversals; small m only.
    out: list[frozenset[int]] = []
    stack = [ground]
    seen = set()
    while stack:
        cand = stack.pop()
        if cand in seen:
            continue
        seen.add(cand)
        bad = next((s for s in sets if s <= cand), None)
        if bad is None:
            if not any(cand < f for f in out):
                out = [f for f in out if not f < cand]
                out.append(cand)
        else:
            for v in bad:
                stack.append(cand - frozenset([v]))
    result = SimplicialComplex(m, [frozenset()])
    final = [f for f in out if not any(f < g for g in out)]
    result.facets = frozenset(final)
    return result


def join_complex(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; b's vertices are shifted by a.m."""
    if a.is_void or b.is_void:
        return SimplicialComplex.void(a.m + b.m)
    gens = [f | frozenset(v + a.m for v in g) for f in a.facets for g in b.facets]
    return SimplicialComplex(a.m + b.m, gens)
