"""Abelianization through the integer Smith normal form of the relation matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .presentation import Presentation
    from .word import Word


class IntMatrix:
    """Rectangular matrix of Python ints (arbitrary precision)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int | None = None):
        rows = [list(map(int, r)) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal length")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.rows == other.rows

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                         other.ncols)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.ncols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"IntMatrix({self.rows!r})"

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    @property
    def trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def exponent_vector(w: "Word") -> list[int]:
    v = [0] * len(w.alphabet)
    for x in w.code:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def relation_matrix(p: "Presentation") -> IntMatrix:
    return IntMatrix([exponent_vector(r) for r in p.relators], len(p.alphabet))


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``S = U m V`` diagonal, ``d1 | d2 | ...``, ``d_i >= 0``.

    Pivoting on the smallest nonzero entry; ``U`` and ``V`` are built from
    elementary operations so both are unimodular.
    """
    rows, cols = m.shape
    a = m.tolist()
    u = IntMatrix.identity(rows).rows
    v = IntMatrix.identity(cols).rows

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(a[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return IntMatrix(a, cols), IntMatrix(u, rows), IntMatrix(v, cols)


def invariant_factors(m: IntMatrix) -> list[int]:
    s, _, _ = smith_normal_form(m)
    return [s[i, i] for i in range(min(s.shape)) if s[i, i]]


def abelianize(p: "Presentation") -> AbelianInvariants:
    factors = invariant_factors(relation_matrix(p))
    return AbelianInvariants(tuple(d for d in factors if d != 1),
                             len(p.alphabet) - len(factors))


def in_row_lattice(m: IntMatrix, vector: Sequence[int]) -> bool:
    """True iff ``vector`` is an integer combination of the rows of ``m``."""
    if m.nrows == 0:
        return not any(vector)
    s, _, v = smith_normal_form(m)
    w = (IntMatrix([list(vector)], m.ncols) @ v).rows[0]
    # x m = vector  <=>  y s = vector V with y = x U^-1
    for j, x in enumerate(w):
        d = s[j, j] if j < min(s.shape) else 0
        if d == 0:
            if x:
                return False
        elif x % d:
            return False
    return True
