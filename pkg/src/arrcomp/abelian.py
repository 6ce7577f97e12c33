"""Finitely generated graded abelian groups.

A group is stored degreewise as a free rank plus a tuple of torsion
coefficients kept in invariant-factor form (each divides the next).  Direct
sums renormalize the torsion, so Z_2 + Z_3 compares equal to Z_6.
"""
from __future__ import annotations

from .errors import IntegrityError


def _factorize(n: int) -> dict[int, int]:
    # trial division; torsion coefficients at desk scale are tiny
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normalize_torsion(coeffs) -> tuple[int, ...]:
    """Invariant-factor form d_1 | d_2 | ... of a multiset of cyclic orders >= 2."""
    per_prime: dict[int, list[int]] = {}
    for c in coeffs:
        c = int(c)
        if c < 2:
            raise IntegrityError(f"torsion coefficient {c} < 2")
        for p, e in _factorize(c).items():
            per_prime.setdefault(p, []).append(e)
    if not per_prime:
        return ()
    for exps in per_prime.values():
        exps.sort(reverse=True)
    depth = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(depth):
        d = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    factors.reverse()
    return tuple(factors)


class GradedAbelianGroup:
    """Immutable map degree -> (rank, torsion coefficients)."""

    __slots__ = ("_parts",)

    def __init__(self, parts=None):
        data: dict[int, tuple[int, tuple[int, ...]]] = {}
        for q, part in dict(parts or {}).items():
            rank, torsion = part
            rank = int(rank)
            if rank < 0:
                raise IntegrityError(f"negative rank {rank} in degree {q}")
            torsion = normalize_torsion(torsion)
            if rank or torsion:
                data[int(q)] = (rank, torsion)
        self._parts = data

    @classmethod
    def zero(cls) -> "GradedAbelianGroup":
        return cls({})

    @classmethod
    def free(cls, degree: int, rank: int = 1) -> "GradedAbelianGroup":
        return cls({degree: (rank, ())})

    def part(self, q: int) -> tuple[int, tuple[int, ...]]:
        return self._parts.get(q, (0, ()))

    def rank(self, q: int) -> int:
        return self.part(q)[0]

    def torsion(self, q: int) -> tuple[int, ...]:
        return self.part(q)[1]

    def degrees(self) -> list[int]:
        return sorted(self._parts)

    @property
    def is_zero(self) -> bool:
        return not self._parts

    def total_rank(self) -> int:
        return sum(r for r, _ in self._parts.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedAbelianGroup):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(frozenset(self._parts.items()))

    def __add__(self, other: "GradedAbelianGroup") -> "GradedAbelianGroup":
        acc: dict[int, tuple[int, tuple[int, ...]]] = dict(self._parts)
        for q, (r, t) in other._parts.items():
            r0, t0 = acc.get(q, (0, ()))
            acc[q] = (r0 + r, t0 + t)
        return GradedAbelianGroup(acc)

    @classmethod
    def direct_sum(cls, groups) -> "GradedAbelianGroup":
        acc: dict[int, tuple[int, tuple[int, ...]]] = {}
        for g in groups:
            for q, (r, t) in g._parts.items():
                r0, t0 = acc.get(q, (0, ()))
                acc[q] = (r0 + r, t0 + t)
        return cls(acc)

    def shifted(self, s: int) -> "GradedAbelianGroup":
        return GradedAbelianGroup({q + s: part for q, part in self._parts.items()})

    def restricted(self, max_degree: int | None = None, min_degree: int | None = None):
        parts = {
            q: p
            for q, p in self._parts.items()
            if (max_degree is None or q <= max_degree)
            and (min_degree is None or q >= min_degree)
        }
        return GradedAbelianGroup(parts)

    def reduced_at_zero(self) -> "GradedAbelianGroup":
        """Drop one Z in degree 0 (unreduced -> reduced for a nonempty space)."""
        r0, t0 = self.part(0)
        if r0 < 1:
            raise IntegrityError("degree-0 rank < 1; not the cohomology of a nonempty space")
        parts = dict(self._parts)
        parts[0] = (r0 - 1, t0)
        return GradedAbelianGroup(parts)

    def describe(self, q: int) -> str:
        r, tors = self.part(q)
        if not r and not tors:
            return "0"
        pieces = []
        if r == 1:
            pieces.append("Z")
        elif r:
            pieces.append(f"Z^{r}")
        i = 0
        while i < len(tors):
            j = i
            while j < len(tors) and tors[j] == tors[i]:
                j += 1
            count = j - i
            pieces.append(f"Z_{tors[i]}" + (f"^{count}" if count > 1 else ""))
            i = j
        return " + ".join(pieces)

    def lines(self, label: str = "H") -> list[str]:
        return [f"{label}^{q} = {self.describe(q)}" for q in self.degrees()]

    def to_json(self) -> list[dict]:
        return [
            {"degree": q, "rank": r, "torsion": list(t)}
            for q, (r, t) in sorted(self._parts.items())
        ]

    @classmethod
    def from_json(cls, data) -> "GradedAbelianGroup":
        return cls({row["degree"]: (row["rank"], tuple(row["torsion"])) for row in data})

    def __repr__(self) -> str:
        if self.is_zero:
            return "GradedAbelianGroup(0)"
        body = ", ".join(f"{q}: {self.describe(q)}" for q in self.degrees())
        return f"GradedAbelianGroup({body})"
