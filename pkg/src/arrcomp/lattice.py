"""Intersection lattices of diagonal and coordinate subspace arrangements.

Strata are canonical combinatorial objects: a diagonal stratum is a set of
disjoint blocks of equalized indices (each of size at least 2), a coordinate
stratum is the index set of vanishing coordinates.  The lattice is generated
from the minimal non-faces of a complex by closing under join (intersection
of subspaces, which is the union/merge of index data).

The rank function d is always a real dimension; a complex ambient doubles
the count.  Order complexes of lower intervals and their reduced homology
are what the arrangement-complement computations consume; interval homology
is memoized under a relabeling-invariant-enough key so that isomorphic
intervals from different lattices share work.
"""
from __future__ import annotations

import hashlib
import json
import os
from collections import namedtuple

from .abelian import GradedAbelianGroup
from .chains import reduced_homology, relative_chain_complex
from .errors import DomainError, IntegrityError
from .simplicial import SimplicialComplex


class DiagonalStratum:
    """Blocks of coordinates forced equal; the empty block set is the bottom."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        cleaned = []
        seen: set[int] = set()
        for b in blocks:
            bt = tuple(sorted(int(v) for v in b))
            if len(bt) < 2:
                raise DomainError("diagonal blocks need at least 2 indices")
            if seen & set(bt):
                raise DomainError("diagonal blocks must be disjoint")
            seen.update(bt)
            cleaned.append(bt)
        cleaned.sort()
        self.blocks = tuple(cleaned)

    @classmethod
    def bottom(cls) -> "DiagonalStratum":
        return cls(())

    @classmethod
    def single(cls, indices) -> "DiagonalStratum":
        return cls((indices,))

    @property
    def is_bottom(self) -> bool:
        return not self.blocks

    @property
    def weight(self) -> int:
        """Real codimension per ambient factor: sum of (|B| - 1)."""
        return sum(len(b) - 1 for b in self.blocks)

    @property
    def key(self):
        return self.blocks

    def support(self) -> frozenset[int]:
        return frozenset(v for b in self.blocks for v in b)

    def leq(self, other: "DiagonalStratum") -> bool:
        """Reverse inclusion of subspaces: every block sits inside one of other's."""
        obs = [set(b) for b in other.blocks]
        return all(any(set(b) <= ob for ob in obs) for b in self.blocks)

    def join(self, other: "DiagonalStratum") -> "DiagonalStratum":
        """Intersection of the subspaces: merge overlapping blocks."""
        groups = [set(b) for b in self.blocks]
        for b in other.blocks:
            cur = set(b)
            merged = []
            rest = []
            for g in groups:
                (merged if g & cur else rest).append(g)
            for g in merged:
                cur |= g
            rest.append(cur)
            groups = rest
        return DiagonalStratum(tuple(tuple(sorted(g)) for g in groups))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagonalStratum):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(("D", self.blocks))

    def __repr__(self) -> str:
        if self.is_bottom:
            return "D(bottom)"
        return "D(" + "|".join("".join(map(str, b)) if max(b) < 10 else ",".join(map(str, b))
                               for b in self.blocks) + ")"

    def to_json(self):
        return [list(b) for b in self.blocks]


class CoordinateStratum:
    """Index set of coordinates forced to zero; the empty set is the bottom."""

    __slots__ = ("zeros",)

    def __init__(self, zeros):
        self.zeros = tuple(sorted(int(v) for v in set(zeros)))

    @classmethod
    def bottom(cls) -> "CoordinateStratum":
        return cls(())

    @property
    def is_bottom(self) -> bool:
        return not self.zeros

    @property
    def weight(self) -> int:
        return len(self.zeros)

    @property
    def key(self):
        return self.zeros

    def support(self) -> frozenset[int]:
        return frozenset(self.zeros)

    def leq(self, other: "CoordinateStratum") -> bool:
        return set(self.zeros) <= set(other.zeros)

    def join(self, other: "CoordinateStratum") -> "CoordinateStratum":
        return CoordinateStratum(self.zeros + other.zeros)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoordinateStratum):
            return NotImplemented
        return self.zeros == other.zeros

    def __hash__(self) -> int:
        return hash(("C", self.zeros))

    def __repr__(self) -> str:
        if self.is_bottom:
            return "C(bottom)"
        return "C(" + ("".join(map(str, self.zeros)) if max(self.zeros) < 10
                       else ",".join(map(str, self.zeros))) + ")"

    def to_json(self):
        return list(self.zeros)


_AMBIENT_FACTOR = {"real": 1, "complex": 2}


class IntersectionLattice:
    """Join-closed set of strata with bottom, rank function, and intervals."""

    __slots__ = ("kind", "ambient", "m", "elements", "_index", "_join_cache")

    def __init__(self, kind: str, ambient: str, m: int, elements):
        if kind not in ("diagonal", "coordinate"):
            raise DomainError(f"unknown lattice kind {kind!r}")
        if ambient not in _AMBIENT_FACTOR:
            raise DomainError(f"ambient must be real or complex, got {ambient!r}")
        self.kind = kind
        self.ambient = ambient
        self.m = int(m)
        els = list(elements)
        if not any(u.is_bottom for u in els):
            raise IntegrityError("lattice without bottom element")
        els.sort(key=lambda u: (u.weight, u.key))
        self.elements = tuple(els)
        self._index = {u: i for i, u in enumerate(els)}
        if len(self._index) != len(els):
            raise IntegrityError("duplicate strata in lattice")
        self._join_cache: dict[tuple[int, int], int] = {}

    @property
    def c(self) -> int:
        return _AMBIENT_FACTOR[self.ambient]

    @property
    def N(self) -> int:
        return self.c * self.m

    @property
    def bottom(self):
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u) -> bool:
        return u in self._index

    def d(self, u) -> int:
        """Real dimension of the stratum."""
        return self.c * (self.m - u.weight)

    def leq(self, u, v) -> bool:
        return u.leq(v)

    def join(self, u, v):
        i, j = self._index[u], self._index[v]
        if i > j:
            i, j = j, i
        cached = self._join_cache.get((i, j))
        if cached is not None:
            return self.elements[cached]
        w = u.join(v)
        k = self._index.get(w)
        if k is None:
            raise IntegrityError("join escaped the lattice; closure incomplete")
        self._join_cache[(i, j)] = k
        return w

    def codimension_condition(self, u, v) -> bool:
        """d(u) + d(v) - d(join) = N, in weight form (ambient-independent)."""
        return u.weight + v.weight == self.join(u, v).weight

    def closed_interval(self, u) -> list:
        """Elements of [bottom, u] in linear-extension order."""
        if u not in self._index:
            raise DomainError("stratum not in lattice")
        return [v for v in self.elements if v.leq(u)]

    def open_interval(self, u) -> list:
        return [v for v in self.closed_interval(u) if not v.is_bottom and v != u]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges as element index pairs (lower, upper)."""
        out = []
        els = self.elements
        n = len(els)
        for i in range(n):
            for j in range(n):
                if i == j or not els[i].leq(els[j]):
                    continue
                if any(k != i and k != j and els[i].leq(els[k]) and els[k].leq(els[j])
                       for k in range(n)):
                    continue
                out.append((i, j))
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ambient": self.ambient,
            "m": self.m,
            "N": self.N,
            "strata": [
                {"blocks" if self.kind == "diagonal" else "zeros": u.to_json(),
                 "d": self.d(u)}
                for u in self.elements
            ],
            "hasse": [list(e) for e in self.covers()],
        }


def _close_under_join(bottom, generators, max_elements: int):
    elems = {bottom}
    work = []
    for g in generators:
        if g not in elems:
            elems.add(g)
            work.append(g)
    i = 0
    while i < len(work):
        u = work[i]
        i += 1
        for v in work[:i]:
            w = u.join(v)
            if w not in elems:
                elems.add(w)
                work.append(w)
                if len(elems) > max_elements:
                    raise DomainError(
                        f"lattice closure exceeded {max_elements} elements")
    return elems


def diagonal_lattice(K: SimplicialComplex, ambient: str = "complex",
                     max_elements: int = 5000) -> IntersectionLattice:
    """Intersection lattice generated by the diagonal subspaces of MF(K)."""
    ghosts = frozenset(range(1, K.m + 1)) - K.vertices
    if ghosts:
        raise DomainError(f"ghost vertices not allowed here: {sorted(ghosts)}")
    gens = [DiagonalStratum.single(M) for M in K.missing_faces()]
    elems = _close_under_join(DiagonalStratum.bottom(), gens, max_elements)
    return IntersectionLattice("diagonal", ambient, K.m, elems)


def coordinate_lattice(K: SimplicialComplex, ambient: str = "complex",
                       max_elements: int = 5000) -> IntersectionLattice:
    """Intersection lattice generated by the coordinate subspaces of MF(K)."""
    if K.is_void:
        raise DomainError("the void complex has no coordinate arrangement")
    gens = [CoordinateStratum(M) for M in K.missing_faces()]
    elems = _close_under_join(CoordinateStratum.bottom(), gens, max_elements)
    return IntersectionLattice("coordinate", ambient, K.m, elems)


def enumerate_nonfaces(K: SimplicialComplex) -> list[frozenset[int]]:
    """All non-faces of K (supersets of minimal non-faces), smallest first."""
    if K.m > 16:
        raise DomainError("non-face enumeration capped at 16 vertices")
    mf = K.missing_faces()
    out = []
    for code in range(1 << K.m):
        s = frozenset(v + 1 for v in range(K.m) if code >> v & 1)
        if any(M <= s for M in mf):
            out.append(s)
    out.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return out


def lattice_isomorphic_to_dual(K: SimplicialComplex):
    """Check that the diagonal intersection poset is the non-face poset of K,
    matching faces of the Alexander dual under complementation.

    Only meaningful when all pairs of missing faces intersect; returns
    (flag, mapping from stratum to dual face).
    """
    if not K.common_vertex_predicate():
        raise DomainError("missing faces must pairwise intersect")
    nonfaces = enumerate_nonfaces(K)
    nf_set = set(nonfaces)
    strata = [DiagonalStratum.single(s) for s in nonfaces]
    # join-closedness with single-block joins is what makes the poset match
    for i, u in enumerate(strata):
        for v in strata[:i]:
            w = u.join(v)
            if len(w.blocks) != 1 or frozenset(w.blocks[0]) not in nf_set:
                return False, {}
    ground = frozenset(range(1, K.m + 1))
    dual_faces = K.alexander_dual().faces()
    mapping = {}
    for u in strata:
        comp = ground - frozenset(u.blocks[0])
        if comp not in dual_faces:
            return False, {}
        mapping[u] = comp
    if len(dual_faces) != len(nonfaces):
        return False, {}
    return True, mapping


IntervalComplexes = namedtuple("IntervalComplexes", "closed boundary_union open labels")


def interval_order_complex(L: IntersectionLattice, u) -> IntervalComplexes:
    """Order complexes of [bottom, u]: closed, the union of the two half-open
    boundaries, and the open interval, on a shared ground set.

    Vertex i of each complex is labels[i-1].  The two smaller complexes keep
    the full ground set, so endpoints appear there as ghost vertices.
    """
    els = L.closed_interval(u)
    labels = tuple(els)
    pos = {v: i for i, v in enumerate(els)}
    n = len(els)
    below = [[] for _ in range(n)]  # covers within the interval
    for i in range(n):
        for j in range(n):
            if i == j or not els[i].leq(els[j]):
                continue
            if any(k != i and k != j and els[i].leq(els[k]) and els[k].leq(els[j])
                   for k in range(n)):
                continue
            below[i].append(j)
    maximal: list[tuple[int, ...]] = []

    def climb(path: tuple[int, ...], at: int) -> None:
        if not below[at]:
            maximal.append(path)
            return
        for j in below[at]:
            climb(path + (j,), j)

    climb((pos[L.bottom],), pos[L.bottom])
    chains = [tuple(i + 1 for i in ch) for ch in maximal]
    closed = SimplicialComplex(n, chains)
    b, t = pos[L.bottom] + 1, pos[u] + 1
    if b == t:  # u is the bottom; both boundaries are empty complexes
        return IntervalComplexes(closed, SimplicialComplex(n, []),
                                 SimplicialComplex(n, []), labels)
    bd_gens = [tuple(x for x in ch if x != b) for ch in chains]
    bd_gens += [tuple(x for x in ch if x != t) for ch in chains]
    open_gens = [tuple(x for x in ch if x != b and x != t) for ch in chains]
    boundary = SimplicialComplex(n, bd_gens)
    open_cx = SimplicialComplex(n, open_gens)
    return IntervalComplexes(closed, boundary, open_cx, labels)


# memoized reduced homology of open intervals, shared across lattices.
_INTERVAL_MEMO: dict = {}


def _interval_signature(elements) -> tuple:
    """Relabeling-normalized encoding of an open interval's elements.

    Coordinate strata and single-block diagonal strata get the same
    encoding, and indices present in every element are stripped first, so
    intervals that only differ by an apex vertex share cache entries.
    """
    fams = []
    for u in elements:
        if isinstance(u, CoordinateStratum):
            fams.append((frozenset(u.zeros),))
        else:
            fams.append(tuple(frozenset(b) for b in u.blocks))
    if all(len(f) == 1 for f in fams):
        common = frozenset.intersection(*(f[0] for f in fams)) if fams else frozenset()
        fams = [(f[0] - common,) for f in fams]
    pts = sorted(set().union(*[set().union(*f) for f in fams])) if fams else []
    rel = {p: i + 1 for i, p in enumerate(pts)}
    enc = sorted(tuple(sorted(tuple(sorted(rel[v] for v in b)) for b in f)) for f in fams)
    return tuple(enc)


def _cache_dir():
    return os.environ.get("ARRCOMP_CACHE_DIR")


def _disk_cache_path(sig) -> str:
    digest = hashlib.sha256(repr(sig).encode()).hexdigest()
    return os.path.join(_cache_dir(), f"interval-{digest[:32]}.json")


def interval_reduced_homology(L: IntersectionLattice, u) -> GradedAbelianGroup:
    """Reduced homology of the open interval (bottom, u).

    For u = bottom the open interval is the void poset and the answer is the
    empty complex's homology, Z in degree -1; gm treats bottom separately.
    """
    els = L.open_interval(u)
    if not els:
        return GradedAbelianGroup({-1: (1, ())})
    # an element comparable to everything makes the order complex a cone
    for e in els:
        if all(e == f or e.leq(f) or f.leq(e) for f in els):
            return GradedAbelianGroup.zero()
    sig = _interval_signature(els)
    hit = _INTERVAL_MEMO.get(sig)
    if hit is not None:
        return hit
    if _cache_dir():
        path = _disk_cache_path(sig)
        if os.path.exists(path):
            with open(path) as fh:
                got = GradedAbelianGroup.from_json(json.load(fh))
            _INTERVAL_MEMO[sig] = got
            return got
    cx = interval_order_complex(L, u)
    out = reduced_homology(cx.open)
    _INTERVAL_MEMO[sig] = out
    if _cache_dir():
        os.makedirs(_cache_dir(), exist_ok=True)
        tmp = _disk_cache_path(sig) + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(out.to_json(), fh)
        os.replace(tmp, _disk_cache_path(sig))
    return out


def interval_pair_homology(L: IntersectionLattice, u) -> GradedAbelianGroup:
    """Homology of the pair (closed interval, boundary union), direct route.

    Independent of the open-interval shortcut; used as an oracle for the
    degree identity H_k(pair) = reduced H_{k-2}(open).
    """
    cx = interval_order_complex(L, u)
    return relative_chain_complex(cx.closed, cx.boundary_union).homology()
