"""Explicit zero-one matrices: symmetric designs, their block-diagonal powers,
and the fixed examples used throughout the test-suite.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from itertools import product
from typing import Iterable, Optional

from .linalg import IntMatrix, ZeroOneMatrix, det_exact


class UnsupportedOrderError(ValueError):
    """Projective planes are only built for prime orders."""


def s_matrix(n: int, a: int, k: int) -> IntMatrix:
    """a*J + (k-a)*I: k on the diagonal, a everywhere else."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntMatrix.from_rows([[k if i == j else a for j in range(n)] for i in range(n)])


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _normalized_points(p: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of GF(p)^3 whose first nonzero coordinate is 1, in lex order."""
    pts = []
    for v in product(range(p), repeat=3):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return sorted(pts)


def projective_plane(p: int) -> ZeroOneMatrix:
    """Line-point incidence matrix of PG(2, p) for prime p.

    Lines and points are both indexed by normalized homogeneous coordinates;
    point x lies on line u when u.x = 0 mod p.
    """
    if not _is_prime(p):
        raise UnsupportedOrderError(f"order {p} is not prime; only prime orders are supported")
    pts = _normalized_points(p)
    return ZeroOneMatrix.from_rows(
        [[1 if sum(a * b for a, b in zip(u, x)) % p == 0 else 0 for x in pts] for u in pts]
    )


def fano() -> ZeroOneMatrix:
    return projective_plane(2)


BIPLANE_DIFFERENCE_SET = (1, 3, 4, 5, 9)  # quadratic residues mod 11


def circulant(first_row: Iterable[int]) -> ZeroOneMatrix:
    r = list(first_row)
    n = len(r)
    return ZeroOneMatrix.from_rows([[r[(j - i) % n] for j in range(n)] for i in range(n)])


def biplane_11() -> ZeroOneMatrix:
    """(11, 5, 2) design as the circulant of the residue difference set."""
    return circulant(1 if j in BIPLANE_DIFFERENCE_SET else 0 for j in range(11))


def complement(A: ZeroOneMatrix) -> ZeroOneMatrix:
    return ZeroOneMatrix.from_rows([[1 - x for x in r] for r in A.rows])


def identity(n: int) -> ZeroOneMatrix:
    return ZeroOneMatrix.from_rows([[int(i == j) for j in range(n)] for i in range(n)])


def block_diag(*blocks: ZeroOneMatrix) -> ZeroOneMatrix:
    size = sum(b.nrows for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        if not b.is_square():
            raise ValueError("blocks must be square")
        for r in b.rows:
            rows.append([0] * offset + list(r) + [0] * (size - offset - b.ncols))
        offset += b.ncols
    return ZeroOneMatrix.from_rows(rows)


def block_diag_power(A: ZeroOneMatrix, t: int) -> ZeroOneMatrix:
    """t copies of A down the diagonal; det is det(A)^t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return block_diag(*([A] * t))


# -- fixed example matrices --------------------------------------

class PaperMatrix(str, Enum):
    R7_K2 = "R7_K2"
    A10 = "A10"
    B10 = "B10"


_FIXED = {
    # rows sum to 2, det 4, columns do not all sum to 2
    PaperMatrix.R7_K2: """
        1 1 0 0 0 0 0
        0 1 1 0 0 0 0
        1 0 1 0 0 0 0
        1 0 0 1 0 0 0
        0 0 0 0 1 1 0
        0 0 0 0 1 0 1
        0 0 0 0 0 1 1
    """,
    # in S(10, 3) with det 48
    PaperMatrix.B10: """
        0 1 0 0 0 1 0 0 1 0
        0 0 0 0 0 1 1 1 0 0
        1 0 0 0 0 0 1 0 1 0
        0 1 0 0 1 0 0 1 0 0
        0 0 0 1 1 1 0 0 0 0
        0 0 1 0 1 0 0 0 0 1
        1 0 1 0 0 0 0 1 0 0
        1 1 0 0 0 0 0 0 0 1
        0 0 0 1 0 0 0 0 1 1
        0 0 1 1 0 0 1 0 0 0
    """,
    # in S(10, 3) with det 15; A A^T and A^T A have off-diagonal entries in {0, 1}
    PaperMatrix.A10: """
        0 1 0 0 0 0 0 1 1 0
        0 0 0 0 1 1 1 0 0 0
        1 0 0 1 0 0 0 0 1 0
        0 0 1 0 0 0 0 1 0 1
        0 1 0 1 0 1 0 0 0 0
        0 0 0 0 0 1 0 0 1 1
        1 0 0 0 1 0 0 0 0 1
        0 0 0 1 0 0 1 1 0 0
        1 0 1 0 0 0 1 0 0 0
        0 1 1 0 1 0 0 0 0 0
    """,
}


def paper_matrix(name: str | PaperMatrix) -> ZeroOneMatrix:
    key = PaperMatrix(name)
    text = _FIXED[key]
    return ZeroOneMatrix.from_rows([[int(x) for x in ln.split()] for ln in text.strip().splitlines()])


# -- lower-bound constructions -----------------------------------------------

def design_blocks(k: int, max_size: int) -> list[tuple[str, ZeroOneMatrix]]:
    """Small square matrices with all line sums equal to k and known nonzero det.

    Used as building blocks for block-diagonal lower bounds on the maximal
    determinant of S(n, k) (hence of R(n, k) and T(n, k) too).
    """
    out: list[tuple[str, ZeroOneMatrix]] = []
    if k == 1:
        out.append(("identity", identity(1)))
    if k + 1 <= max_size:
        out.append((f"J-I({k + 1})", complement(identity(k + 1))))
    if k == 2:
        # odd cycles I + P have det 2
        for v in range(5, max_size + 1, 2):
            out.append((f"cycle({v})", circulant([1, 1] + [0] * (v - 2))))
    p = k - 1
    if p >= 2 and _is_prime(p) and p * p + p + 1 <= max_size:
        out.append((f"PG(2,{p})", projective_plane(p)))
    if k == 4 and 7 <= max_size:
        out.append(("complement(PG(2,2))", complement(fano())))
    if k == 5 and 11 <= max_size:
        out.append(("biplane(11,5,2)", biplane_11()))
    if k == 6 and 11 <= max_size:
        out.append(("complement(biplane)", complement(biplane_11())))
    return [(name, b) for name, b in out if b.nrows <= max_size]


def best_block_construction(n: int, k: int) -> Optional[tuple[int, str, ZeroOneMatrix]]:
    """Largest |det| reachable by stacking :func:`design_blocks` into an n x n matrix.

    Returns ``(abs_det, description, matrix)`` or None if no stacking fits.
    """
    blocks = [(name, b, abs(det_exact(b))) for name, b in design_blocks(k, n)]
    best: list[Optional[tuple[int, list[int]]]] = [None] * (n + 1)
    best[0] = (1, [])
    for size in range(1, n + 1):
        for idx, (_, b, d) in enumerate(blocks):
            prev = best[size - b.nrows] if b.nrows <= size else None
            if prev is None or d == 0:
                continue
            cand = prev[0] * d
            if best[size] is None or cand > best[size][0]:
                best[size] = (cand, prev[1] + [idx])
    if best[n] is None:
        return None
    value, picks = best[n]
    mats = [blocks[i][1] for i in picks]
    counts = Counter(blocks[i][0] for i in picks)
    desc = " + ".join(name if c == 1 else f"{c} x {name}" for name, c in counts.items())
    return value, desc, block_diag(*mats)
