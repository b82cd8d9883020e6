"""Gluing matrices of log transforms on H_1(T^3).

Matrices act on column vectors in the ordered basis (a, b, c): column ``j``
is the image of the ``j``-th basis circle.
"""

from __future__ import annotations

from dataclasses import dataclass

Rows = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True)
class GluingMatrix:
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("gluing matrices are 3x3")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> "GluingMatrix":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __matmul__(self, other: "GluingMatrix") -> "GluingMatrix":
        return compose(self, other)

    def apply(self, vector) -> tuple[int, int, int]:
        return tuple(sum(self.rows[i][j] * vector[j] for j in range(3)) for i in range(3))

    def image(self, basis: str) -> tuple[int, int, int]:
        """Image of basis circle ``'a'``, ``'b'`` or ``'c'``."""
        j = "abc".index(basis)
        return tuple(self.rows[i][j] for i in range(3))

    def is_unimodular(self) -> bool:
        return determinant(self) in (1, -1)

    def __str__(self):
        return "\n".join(" ".join(f"{x:3d}" for x in r) for r in self.rows)


def log_transform_matrix(p: int) -> GluingMatrix:
    return GluingMatrix(((1, 0, 0), (0, p, -1), (0, 1, 0)))


def is_luttinger(p: int) -> bool:
    return p in (1, -1)


def compose(m1: GluingMatrix, m2: GluingMatrix) -> GluingMatrix:
    """``m1 @ m2``: apply ``m2`` first."""
    a, b = m1.rows, m2.rows
    return GluingMatrix(tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                              for i in range(3)))


def determinant(m: GluingMatrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def invert(m: GluingMatrix) -> GluingMatrix:
    det = determinant(m)
    if det not in (1, -1):
        raise NotUnimodularError(f"determinant {det}: no integer inverse")
    r = m.rows

    def minor(i, j):
        rs = [k for k in range(3) if k != i]
        cs = [k for k in range(3) if k != j]
        return r[rs[0]][cs[0]] * r[rs[1]][cs[1]] - r[rs[0]][cs[1]] * r[rs[1]][cs[0]]

    # inverse = adjugate / det, adjugate[i][j] = cofactor(j, i)
    return GluingMatrix(tuple(tuple((-1) ** (i + j) * minor(j, i) * det for j in range(3))
                              for i in range(3)))
