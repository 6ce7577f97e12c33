"""Integer chain complexes, homology, and homology-class coordinates.

Boundary matrices are stored column-major and sparsely: column j of the
degree-k boundary is a dict {row index in basis[k-1]: coefficient} giving
the boundary of basis[k][j].  Composability (boundary of boundary is zero)
is checked at construction time.
"""
from __future__ import annotations

from .abelian import GradedAbelianGroup, normalize_torsion
from .errors import DomainError, IntegrityError
from .simplicial import SimplicialComplex
from .snf import (
    IntegerMatrix,
    elementary_divisors,
    rank_mod_p,
    rank_over_q,
    smith_normal_form,
)


class ChainComplex:
    """Finitely generated chain complex of free abelian groups."""

    __slots__ = ("basis", "boundaries", "index")

    def __init__(self, basis: dict[int, list], boundaries: dict[int, list[dict[int, int]]],
                 check: bool = True):
        self.basis = {k: list(v) for k, v in basis.items() if v}
        self.boundaries = {}
        self.index = {k: {lab: i for i, lab in enumerate(v)} for k, v in self.basis.items()}
        for k, cols in boundaries.items():
            if k not in self.basis:
                if any(col for col in cols):
                    raise IntegrityError(f"boundary in degree {k} without basis")
                continue
            if len(cols) != len(self.basis[k]):
                raise IntegrityError(f"boundary column count mismatch in degree {k}")
            below = len(self.basis.get(k - 1, []))
            cleaned = []
            for col in cols:
                c = {int(i): int(v) for i, v in col.items() if v}
                if any(not 0 <= i < below for i in c):
                    raise IntegrityError(f"boundary row index out of range in degree {k}")
                cleaned.append(c)
            self.boundaries[k] = cleaned
        for k in self.basis:
            if k not in self.boundaries:
                self.boundaries[k] = [{} for _ in self.basis[k]]
        if check:
            self._check_composability()

    def _check_composability(self) -> None:
        for k, cols in self.boundaries.items():
            lower = self.boundaries.get(k - 1)
            if not lower:
                continue
            for j, col in enumerate(cols):
                acc: dict[int, int] = {}
                for i, v in col.items():
                    for r, w in lower[i].items():
                        acc[r] = acc.get(r, 0) + v * w
                if any(acc.values()):
                    raise IntegrityError(
                        f"boundary of boundary nonzero at degree {k}, column {j}")

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, k: int) -> int:
        return len(self.basis.get(k, []))

    def boundary_columns(self, k: int) -> list[dict[int, int]]:
        return self.boundaries.get(k, [{} for _ in self.basis.get(k, [])])

    def boundary_of(self, k: int, chain: dict) -> dict:
        """Boundary of a chain given as {label: coefficient} in degree k."""
        cols = self.boundary_columns(k)
        idx = self.index.get(k, {})
        lower = self.basis.get(k - 1, [])
        acc: dict[int, int] = {}
        for lab, v in chain.items():
            if not v:
                continue
            if lab not in idx:
                raise DomainError(f"label {lab!r} not in degree {k} basis")
            for i, w in cols[idx[lab]].items():
                acc[i] = acc.get(i, 0) + v * w
        return {lower[i]: v for i, v in acc.items() if v}

    def homology_at(self, k: int) -> tuple[int, tuple[int, ...]]:
        """(rank, invariant factors > 1) of H_k."""
        n = self.dim(k)
        if n == 0:
            return 0, ()
        d1 = elementary_divisors(self.dim(k - 1), n, self.boundary_columns(k))
        d2 = elementary_divisors(n, self.dim(k + 1), self.boundary_columns(k + 1))
        r1 = sum(1 for d in d1 if d)
        r2 = sum(1 for d in d2 if d)
        rank = n - r1 - r2
        if rank < 0:
            raise IntegrityError("negative homology rank")
        return rank, normalize_torsion([d for d in d2 if d > 1])

    def homology(self) -> GradedAbelianGroup:
        parts = {}
        for k in self.degrees():
            rank, tors = self.homology_at(k)
            if rank or tors:
                parts[k] = (rank, tors)
        return GradedAbelianGroup(parts)


def simplicial_chain_complex(K: SimplicialComplex, augmented: bool = True) -> ChainComplex:
    """Chains of K with the usual alternating-sign boundary.

    With augmented set, the empty face generates degree -1 and vertices
    map onto it, so homology is reduced homology.
    """
    if K.is_void:
        return ChainComplex({}, {})
    by_deg: dict[int, list[tuple[int, ...]]] = {}
    for f in K.faces():
        k = len(f) - 1
        if k == -1 and not augmented:
            continue
        by_deg.setdefault(k, []).append(tuple(sorted(f)))
    for v in by_deg.values():
        v.sort()
    index = {k: {lab: i for i, lab in enumerate(v)} for k, v in by_deg.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    for k, labs in by_deg.items():
        if k - 1 not in by_deg:
            boundaries[k] = [{} for _ in labs]
            continue
        low = index[k - 1]
        cols = []
        for lab in labs:
            col: dict[int, int] = {}
            for i in range(len(lab)):
                face = lab[:i] + lab[i + 1:]
                col[low[face]] = 1 if i % 2 == 0 else -1
            cols.append(col)
        boundaries[k] = cols
    return ChainComplex(by_deg, boundaries)


def relative_chain_complex(K: SimplicialComplex, L: SimplicialComplex) -> ChainComplex:
    """Chains of the pair (K, L): faces of K not in L, boundary terms in L dropped.

    L must be a subcomplex of K on the same ground set.  The empty face is
    never part of the relative basis, so with L having no nonempty faces
    this computes unreduced homology of K.
    """
    if K.m != L.m and not L.is_void:
        raise DomainError("pair must share a ground set")
    if K.is_void:
        return ChainComplex({}, {})
    lfaces = L.faces() if not L.is_void else frozenset()
    if not lfaces <= K.faces():
        raise DomainError("second complex is not a subcomplex of the first")
    by_deg: dict[int, list[tuple[int, ...]]] = {}
    for f in K.faces():
        if f and f not in lfaces:
            by_deg.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for v in by_deg.values():
        v.sort()
    index = {k: {lab: i for i, lab in enumerate(v)} for k, v in by_deg.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    for k, labs in by_deg.items():
        low = index.get(k - 1, {})
        cols = []
        for lab in labs:
            col: dict[int, int] = {}
            for i in range(len(lab)):
                face = lab[:i] + lab[i + 1:]
                if face in low:
                    col[low[face]] = 1 if i % 2 == 0 else -1
            cols.append(col)
        boundaries[k] = cols
    return ChainComplex(by_deg, boundaries)


def _has_cone_vertex(K: SimplicialComplex) -> bool:
    if K.is_void or K.is_empty_complex:
        return False
    return bool(frozenset.intersection(*K.facets))


def reduced_homology(K: SimplicialComplex, use_cone_shortcut: bool = True) -> GradedAbelianGroup:
    """Reduced simplicial homology of K as a graded group."""
    if K.is_void:
        return GradedAbelianGroup.zero()
    if use_cone_shortcut and _has_cone_vertex(K):
        return GradedAbelianGroup.zero()
    return simplicial_chain_complex(K).homology()


def pair_homology(K: SimplicialComplex, L: SimplicialComplex) -> GradedAbelianGroup:
    return relative_chain_complex(K, L).homology()


def cohomology_from_homology(H: GradedAbelianGroup) -> GradedAbelianGroup:
    """Universal coefficients: free part from degree q, torsion from degree q - 1."""
    parts: dict[int, tuple[int, tuple[int, ...]]] = {}
    for q in H.degrees():
        rank, _ = H.part(q)
        if rank:
            parts[q] = (rank, ())
    for q in H.degrees():
        _, tors = H.part(q)
        if tors:
            r, t = parts.get(q + 1, (0, ()))
            parts[q + 1] = (r, normalize_torsion(list(t) + list(tors)))
    return GradedAbelianGroup(parts)


def reduced_cohomology(K: SimplicialComplex) -> GradedAbelianGroup:
    return cohomology_from_homology(reduced_homology(K))


def _field_betti(cc: ChainComplex, rank_fn) -> dict[int, int]:
    ranks: dict[int, int] = {}
    for k in cc.degrees():
        for kk in (k, k + 1):
            if kk not in ranks:
                ranks[kk] = rank_fn(cc.dim(kk - 1), cc.dim(kk), cc.boundary_columns(kk))
    out = {}
    for k in cc.degrees():
        b = cc.dim(k) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if b:
            out[k] = b
    return out


def betti_numbers_mod_p(cc: ChainComplex, p: int) -> dict[int, int]:
    """Dimensions of homology with mod-p coefficients, degree by degree."""
    return _field_betti(cc, lambda r, c, cols: rank_mod_p(r, c, cols, p))


def betti_numbers_rational(cc: ChainComplex) -> dict[int, int]:
    return _field_betti(cc, rank_over_q)


class HomologyData:
    """H_k of a chain complex with explicit coordinates for cycles.

    Smith transforms of the two boundary maps around degree k give a basis
    of the kernel and a presentation of the homology group; class_of turns
    a cycle into its coefficient tuple over the summands (torsion summands
    first, then free), and generators() returns matching representative
    chains.
    """

    __slots__ = ("cc", "k", "_n", "_r1", "_Vinv", "_V", "_U2", "_U2inv",
                 "_r2", "_divisors", "_summands")

    def __init__(self, cc: ChainComplex, k: int):
        self.cc = cc
        self.k = k
        n = cc.dim(k)
        self._n = n
        rows = cc.dim(k - 1)
        A1 = IntegerMatrix.from_columns(rows, cc.boundary_columns(k))
        res1 = smith_normal_form(A1)
        self._r1 = res1.rank
        self._Vinv = res1.Vinv
        self._V = res1.V
        nk = n - self._r1
        cols2 = cc.boundary_columns(k + 1)
        kcols = []
        for col in cols2:
            dense = [0] * n
            for i, v in col.items():
                dense[i] = v
            c = self._Vinv.matvec(dense)
            if any(c[:self._r1]):
                raise IntegrityError("boundary image not contained in the kernel")
            kcols.append({i: v for i, v in enumerate(c[self._r1:]) if v})
        M = IntegerMatrix.from_columns(nk, kcols)
        res2 = smith_normal_form(M)
        self._U2 = res2.U
        self._U2inv = res2.Uinv
        self._r2 = res2.rank
        self._divisors = res2.diag
        summands = []
        for i in range(nk):
            d = self._divisors[i] if i < len(self._divisors) else 0
            if i < self._r2:
                if d > 1:
                    summands.append((i, d))
            else:
                summands.append((i, 0))
        self._summands = tuple(summands)  # (kernel coordinate, modulus or 0 for free)

    @property
    def group(self) -> tuple[int, tuple[int, ...]]:
        rank = sum(1 for _, d in self._summands if d == 0)
        tors = normalize_torsion([d for _, d in self._summands if d > 1])
        return rank, tors

    def _vector_of(self, chain: dict) -> list[int]:
        idx = self.cc.index.get(self.k, {})
        vec = [0] * self._n
        for lab, v in chain.items():
            if not v:
                continue
            if lab not in idx:
                raise DomainError(f"label {lab!r} not in degree {self.k} basis")
            vec[idx[lab]] += v
        return vec

    def class_of(self, chain: dict) -> tuple[int, ...]:
        """Coordinates of the homology class of a cycle, per summand."""
        c = self._Vinv.matvec(self._vector_of(chain))
        if any(c[:self._r1]):
            raise DomainError("chain is not a cycle")
        y = self._U2.matvec(c[self._r1:])
        out = []
        for i, d in self._summands:
            out.append(y[i] % d if d else y[i])
        return tuple(out)

    def is_boundary(self, chain: dict) -> bool:
        return all(v == 0 for v in self.class_of(chain))

    def generators(self) -> list[dict]:
        """Representative cycles for the summands, in class_of order."""
        labs = self.cc.basis.get(self.k, [])
        out = []
        for i, _ in self._summands:
            kern = self._U2inv.column(i)
            full = [0] * self._r1 + kern
            vec = self._V.matvec(full)
            out.append({labs[j]: v for j, v in enumerate(vec) if v})
        return out
