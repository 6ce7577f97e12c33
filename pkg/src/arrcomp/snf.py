"""Exact integer matrix algebra: Smith normal form, ranks, determinants.

All arithmetic is over Python ints, so no overflow is possible.  The Smith
form D = U * A * V is computed by minimal-absolute-value pivoting with row
and column operations; U, V and their inverses are tracked when requested.
Large boundary matrices (no transforms needed) go through a sparse
elimination that only recovers the diagonal.
"""
from __future__ import annotations

from fractions import Fraction

from .abelian import normalize_torsion
from .errors import DomainError, IntegrityError

_SPARSE_CUTOFF = 96  # dense elimination below this size, sparse above


class IntegerMatrix:
    """Dense row-major integer matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = int(rows)
        self.cols = int(cols)
        if self.rows < 0 or self.cols < 0:
            raise DomainError("matrix dimensions must be nonnegative")
        if data is None:
            self.data = [[0] * self.cols for _ in range(self.rows)]
        else:
            self.data = [[int(x) for x in row] for row in data]
            if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
                raise DomainError("matrix data does not match declared shape")

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        out = cls(n, n)
        for i in range(n):
            out.data[i][i] = 1
        return out

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries) -> "IntegerMatrix":
        out = cls(rows, cols)
        for i, j, v in entries:
            out.data[i][j] += int(v)
        return out

    @classmethod
    def from_columns(cls, rows: int, columns: list[dict[int, int]]) -> "IntegerMatrix":
        out = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                out.data[i][j] = int(v)
        return out

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DomainError("incompatible shapes for product")
        out = IntegerMatrix(self.rows, other.cols)
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(arow):
                if a:
                    brow = bdata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return out

    def matvec(self, vec: list[int]) -> list[int]:
        if len(vec) != self.cols:
            raise DomainError("vector length does not match column count")
        return [sum(a * x for a, x in zip(row, vec) if a and x) for row in self.data]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows and self.cols else None)

    @property
    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": [list(r) for r in self.data]}

    @classmethod
    def from_json(cls, obj) -> "IntegerMatrix":
        return cls(obj["rows"], obj["cols"], obj["data"])

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols})"


class SNFResult:
    """Smith form of A: diag with d_1 | d_2 | ..., and D = U * A * V."""

    __slots__ = ("rows", "cols", "diag", "U", "V", "Uinv", "Vinv")

    def __init__(self, rows, cols, diag, U=None, V=None, Uinv=None, Vinv=None):
        self.rows = rows
        self.cols = cols
        self.diag = tuple(diag)
        self.U = U
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diag if d > 1)

    @property
    def D(self) -> IntegerMatrix:
        out = IntegerMatrix(self.rows, self.cols)
        for i, d in enumerate(self.diag):
            out.data[i][i] = d
        return out


class _DenseSNF:
    """Minimal-absolute-value pivot elimination with optional transforms."""

    def __init__(self, A: IntegerMatrix, transforms: bool):
        self.r = A.rows
        self.c = A.cols
        self.M = [row[:] for row in A.data]
        self.transforms = transforms
        if transforms:
            self.U = IntegerMatrix.identity(self.r).data
            self.Uinv = IntegerMatrix.identity(self.r).data
            self.V = IntegerMatrix.identity(self.c).data
            self.Vinv = IntegerMatrix.identity(self.c).data

    # elementary operations; each keeps M = U*A*V, Uinv = U^-1, Vinv = V^-1

    def row_add(self, dst: int, src: int, q: int) -> None:
        if not q:
            return
        M, r = self.M, q
        mdst, msrc = M[dst], M[src]
        for j, v in enumerate(msrc):
            if v:
                mdst[j] += r * v
        if self.transforms:
            udst, usrc = self.U[dst], self.U[src]
            for j, v in enumerate(usrc):
                if v:
                    udst[j] += r * v
            for row in self.Uinv:  # column src -= q * column dst of U^-1
                row[src] -= r * row[dst]

    def col_add(self, dst: int, src: int, q: int) -> None:
        if not q:
            return
        for row in self.M:
            v = row[src]
            if v:
                row[dst] += q * v
        if self.transforms:
            for row in self.V:
                v = row[src]
                if v:
                    row[dst] += q * v
            vsrc, vdst = self.Vinv[src], self.Vinv[dst]
            for j, v in enumerate(vdst):
                if v:
                    vsrc[j] -= q * v

    def row_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        self.M[a], self.M[b] = self.M[b], self.M[a]
        if self.transforms:
            self.U[a], self.U[b] = self.U[b], self.U[a]
            for row in self.Uinv:
                row[a], row[b] = row[b], row[a]

    def col_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        for row in self.M:
            row[a], row[b] = row[b], row[a]
        if self.transforms:
            for row in self.V:
                row[a], row[b] = row[b], row[a]
            self.Vinv[a], self.Vinv[b] = self.Vinv[b], self.Vinv[a]

    def row_negate(self, i: int) -> None:
        self.M[i] = [-v for v in self.M[i]]
        if self.transforms:
            self.U[i] = [-v for v in self.U[i]]
            for row in self.Uinv:
                row[i] = -row[i]

    def _find_pivot(self, t: int):
        best = None
        best_abs = None
        for i in range(t, self.r):
            row = self.M[i]
            for j in range(t, self.c):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if best_abs is None or a < best_abs:
                        best, best_abs = (i, j), a
                        if a == 1:
                            return best
        return best

    def _clear_position(self, t: int) -> None:
        """Euclid until row t and column t are zero off the diagonal."""
        while True:
            if self.M[t][t] < 0:
                self.row_negate(t)
            p = self.M[t][t]
            dirty = False
            for i in range(t + 1, self.r):
                v = self.M[i][t]
                if v:
                    self.row_add(i, t, -(v // p))
                    if self.M[i][t]:  # remainder; pivot shrinks after swap
                        self.row_swap(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, self.c):
                v = self.M[t][j]
                if v:
                    self.col_add(j, t, -(v // p))
                    if self.M[t][j]:
                        self.col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            if all(not self.M[i][t] for i in range(t + 1, self.r)) and all(
                not self.M[t][j] for j in range(t + 1, self.c)
            ):
                return

    def run(self) -> SNFResult:
        n = min(self.r, self.c)
        t = 0
        while t < n:
            piv = self._find_pivot(t)
            if piv is None:
                break
            self.row_swap(t, piv[0])
            self.col_swap(t, piv[1])
            self._clear_position(t)
            t += 1
        rank = t
        # enforce the divisibility chain d_i | d_{i+1}
        guard = 0
        while True:
            violation = None
            for i in range(rank - 1):
                if self.M[i + 1][i + 1] % self.M[i][i]:
                    violation = i
                    break
            if violation is None:
                break
            guard += 1
            if guard > 10000:
                raise IntegrityError("divisibility fix did not terminate")
            i = violation
            self.col_add(i, i + 1, 1)  # puts d_{i+1} at (i+1, i)
            self._clear_position(i)
        for i in range(rank):
            if self.M[i][i] < 0:
                self.row_negate(i)
        diag = [self.M[i][i] for i in range(n)]
        if self.transforms:
            res = SNFResult(
                self.r,
                self.c,
                diag,
                U=IntegerMatrix(self.r, self.r, self.U),
                V=IntegerMatrix(self.c, self.c, self.V),
                Uinv=IntegerMatrix(self.r, self.r, self.Uinv),
                Vinv=IntegerMatrix(self.c, self.c, self.Vinv),
            )
        else:
            res = SNFResult(self.r, self.c, diag)
        return res


def _sparse_diagonal(rows: int, cols: int, columns: list[dict[int, int]]) -> list[int]:
    """Diagonal entries of an equivalent diagonal form, unordered; no transforms.

    Row and column operations only, so the multiset of invariant factors of
    the result equals that of the input.
    """
    rowmap: dict[int, dict[int, int]] = {}
    colocc: dict[int, set[int]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rowmap.setdefault(i, {})[j] = v
                colocc.setdefault(j, set()).add(i)

    def kill(i: int, j: int) -> None:
        row = rowmap.get(i)
        if row is not None and row.pop(j, None) is not None:
            if not row:
                del rowmap[i]
            colocc[j].discard(i)
            if not colocc[j]:
                del colocc[j]

    def put(i: int, j: int, v: int) -> None:
        if v:
            rowmap.setdefault(i, {})[j] = v
            colocc.setdefault(j, set()).add(i)
        else:
            kill(i, j)

    def row_add(dst: int, src: int, q: int) -> None:
        for j, v in list(rowmap.get(src, {}).items()):
            put(dst, j, rowmap.get(dst, {}).get(j, 0) + q * v)

    def col_add(dst: int, src: int, q: int) -> None:
        for i in list(colocc.get(src, set())):
            put(i, dst, rowmap[i].get(dst, 0) + q * rowmap[i][src])

    diag: list[int] = []
    while rowmap:
        best = None
        best_score = None
        for i, row in rowmap.items():
            rl = len(row)
            for j, v in row.items():
                a = v if v > 0 else -v
                score = (a, rl + len(colocc[j]))
                if best_score is None or score < best_score:
                    best, best_score = (i, j), score
            if best_score is not None and best_score[0] == 1 and best_score[1] <= 4:
                break
        pi, pj = best
        while True:
            p = rowmap[pi][pj]
            if p < 0:
                for j in list(rowmap[pi]):
                    put(pi, j, -rowmap[pi][j])
                p = -p
            moved = False
            for i in list(colocc.get(pj, set())):
                if i == pi:
                    continue
                v = rowmap[i][pj]
                row_add(i, pi, -(v // p))
                if rowmap.get(i, {}).get(pj):
                    pi = i  # remainder is the new, smaller pivot
                    moved = True
                    break
            if moved:
                continue
            for j in list(rowmap.get(pi, {})):
                if j == pj:
                    continue
                v = rowmap[pi][j]
                col_add(j, pj, -(v // p))
                if rowmap.get(pi, {}).get(j):
                    pj = j
                    moved = True
                    break
            if not moved:
                break
        diag.append(rowmap[pi][pj])
        kill(pi, pj)
        if pi in rowmap or pj in colocc:
            raise IntegrityError("pivot row or column not fully cleared")
    return diag


def smith_normal_form(A: IntegerMatrix, transforms: bool = True) -> SNFResult:
    """Smith normal form with minimal-absolute-value pivoting.

    Returns diag (d_1 | d_2 | ..., then zeros) and, when transforms is set,
    unimodular U, V with D = U * A * V plus their inverses.
    """
    return _DenseSNF(A, transforms).run()


def elementary_divisors(rows: int, cols: int, columns: list[dict[int, int]]) -> tuple[int, ...]:
    """Invariant factors (length min(rows, cols), zeros trailing) of a sparse matrix."""
    n = min(rows, cols)
    if max(rows, cols) <= _SPARSE_CUTOFF:
        res = smith_normal_form(IntegerMatrix.from_columns(rows, columns), transforms=False)
        return res.diag
    entries = [abs(d) for d in _sparse_diagonal(rows, cols, columns)]
    if len(entries) > n:
        raise IntegrityError("rank exceeds matrix dimensions")
    tors = normalize_torsion([e for e in entries if e > 1])
    ones = len(entries) - len(tors)
    return tuple([1] * ones + list(tors) + [0] * (n - len(entries)))


def bareiss_determinant(A: IntegerMatrix) -> int:
    """Fraction-free exact determinant (independent of the SNF code path)."""
    if A.rows != A.cols:
        raise DomainError("determinant requires a square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(A: IntegerMatrix) -> bool:
    return A.rows == A.cols and abs(bareiss_determinant(A)) == 1


def rank_over_q(rows: int, cols: int, columns: list[dict[int, int]]) -> int:
    """Rational rank by Gaussian elimination over Fraction; SNF-independent oracle."""
    mat = [[Fraction(0)] * cols for _ in range(rows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            mat[i][j] = Fraction(v)
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, rows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for i in range(rows):
            if i != row and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[row])]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


def rank_mod_p(rows: int, cols: int, columns: list[dict[int, int]], p: int) -> int:
    """Rank over the field with p elements by Gaussian elimination."""
    if p < 2:
        raise DomainError("p must be at least 2")
    mat = []
    for j, col in enumerate(columns):
        dense = [0] * rows
        for i, v in col.items():
            dense[i] = v % p
        mat.append(dense)
    # eliminate column vectors against each other
    rank = 0
    pivots: list[tuple[int, list[int]]] = []
    for vec in mat:
        vec = vec[:]
        for pi, pvec in pivots:
            f = vec[pi]
            if f:
                vec = [(a - f * b) % p for a, b in zip(vec, pvec)]
        lead = next((i for i, a in enumerate(vec) if a), None)
        if lead is not None:
            inv = pow(vec[lead], -1, p)
            vec = [(a * inv) % p for a in vec]
            pivots.append((lead, vec))
            rank += 1
    return rank
