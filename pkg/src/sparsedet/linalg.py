"""Exact integer linear algebra for zero-one matrices.

Everything here works on Python ints, so determinants of Gram matrices are
exact no matter how large they get.  Matrices are immutable row-major tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class DimensionError(ValueError):
    """Raised when a matrix has the wrong shape for an operation."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]):
        return cls(tuple(tuple(r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self):
        return type(self)(tuple(zip(*self.rows)))

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def col_sums(self) -> list[int]:
        return [sum(c) for c in zip(*self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class ZeroOneMatrix(IntMatrix):
    """Matrix whose entries are all 0 or 1."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for r in self.rows:
            for x in r:
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not 0 or 1")

    def total_ones(self) -> int:
        return sum(self.row_sums())


def det_exact(M: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination.

    Every division in the elimination is exact, so the result is the true
    integer determinant.
    """
    rows = M.rows if isinstance(M, IntMatrix) else tuple(tuple(r) for r in M)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionError("determinant needs a square matrix")
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            for i in range(p + 1, n):
                if a[i][p] != 0:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[p][p]
        rp = a[p]
        for i in range(p + 1, n):
            ri = a[i]
            f = ri[p]
            for j in range(p + 1, n):
                ri[j] = (ri[j] * piv - f * rp[j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def gram(A: IntMatrix) -> IntMatrix:
    """Return ``A @ A.T``."""
    rows = A.rows
    m = len(rows)
    g = [[0] * m for _ in range(m)]
    for i in range(m):
        ri = rows[i]
        for j in range(i, m):
            v = sum(x * y for x, y in zip(ri, rows[j]))
            g[i][j] = g[j][i] = v
    return IntMatrix.from_rows(g)


def vol_squared(A: IntMatrix) -> int:
    """Squared volume of the parallelepiped spanned by the rows, det(A A^T)."""
    if A.nrows > A.ncols:
        raise DimensionError(f"vol needs rows <= cols, got {A.nrows}x{A.ncols}")
    return det_exact(gram(A))


class Membership(NamedTuple):
    in_R: bool
    in_S: bool
    in_T: bool


def class_membership(A: ZeroOneMatrix, k: int) -> Membership:
    """Which of the classes R, S, T (for row sum ``k``) contain ``A``.

    R is the rectangular class R(m, n, k); S and T only make sense for square
    matrices and are False otherwise.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    in_r = all(s == k for s in A.row_sums())
    square = A.is_square()
    in_s = in_r and square and all(s == k for s in A.col_sums())
    in_t = square and A.total_ones() == k * A.nrows
    return Membership(in_r, in_s, in_t)


# -- matrix text format -----------------------------------------------------

def format_matrix(M: IntMatrix) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    lines.extend(" ".join(str(x) for x in r) for r in M.rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, zero_one: bool = True) -> IntMatrix:
    """Parse the ``rows cols`` header followed by one line per row."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("missing 'rows cols' header")
    m, n = int(lines[0][0]), int(lines[0][1])
    body = [[int(x) for x in ln] for ln in lines[1:]]
    if len(body) != m or any(len(r) != n for r in body):
        raise DimensionError(f"header says {m}x{n} but body disagrees")
    cls = ZeroOneMatrix if zero_one else IntMatrix
    return cls.from_rows(body)
