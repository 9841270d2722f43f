"""Exhaustive maximal-determinant search at small sizes.

Rows are chosen in nonincreasing lexicographic order, which is canonical under
row permutations (|det| does not care about row order).  Column permutations
are partly broken by fixing the first row to 1...10...0.

Each partial matrix A1 (the rows chosen so far) carries its exact squared
volume det(A1 A1^T), maintained incrementally with integral Gram-Schmidt.
Since vol(A) <= vol(A1) vol(A2), a node is discarded as soon as

    det(A1 A1^T) * UB(remaining rows)^2 <= best^2

where UB is Hadamard's bound or the generalized Ryser bound for the rows
still to be placed.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .linalg import ZeroOneMatrix, class_membership, det_exact, format_matrix

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
DESK_LIMIT = {"R": 7, "S": 7, "T": 6}


class MatrixClass(str, Enum):
    R = "R"  # every row sums to k
    S = "S"  # every row and column sums to k
    T = "T"  # kn ones in total


@dataclass(frozen=True)
class SearchResult:
    matrix_class: str
    n: int
    k: int
    max_abs_det: int
    witness: Optional[ZeroOneMatrix]
    nodes_explored: int
    exhaustive: bool
    pruned: bool = True

    def to_dict(self) -> dict:
        return {
            "class": self.matrix_class,
            "n": self.n,
            "k": self.k,
            "max_abs_det": str(self.max_abs_det),
            "witness": format_matrix(self.witness) if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "pruned": self.pruned,
        }


class BudgetExhausted(Exception):
    pass


def _rows_desc(n: int, weights: range) -> list[tuple[int, ...]]:
    rows = [r for r in product((1, 0), repeat=n) if sum(r) in weights]
    return rows  # product over (1, 0) already yields lex-descending order


def _balanced_product(total: int, parts: int) -> int:
    """Max of prod(w_i) over positive integers w_i with sum ``total``."""
    if parts == 0:
        return 1
    q, s = divmod(total, parts)
    return (q + 1) ** s * q ** (parts - s)


def _remaining_ub_sq(n: int, k: int) -> list[tuple[int, int]]:
    """Squared volume bound for r rows of weight k, as (num, den), r = 0..n."""
    out = []
    for r in range(n + 1):
        best = Fraction(k) ** r
        if r >= 2 and r * k > n:
            mu = Fraction(k, r - 1) * (Fraction(r * k, n) - 1)
            ryser_sq = Fraction(k * k * r, n) * (k - mu) ** (r - 1)
            best = min(best, ryser_sq)
        out.append((best.numerator, best.denominator))
    return out


class _Search:
    def __init__(self, cls: MatrixClass, n: int, k: int, budget: int, prune: bool):
        self.cls = cls
        self.n = n
        self.k = k
        self.budget = budget
        self.prune = prune
        self.nodes = 0
        self.best = -1  # |det| of incumbent, -1 = none yet
        self.best_sq = 0
        self.witness: Optional[tuple[tuple[int, ...], ...]] = None
        self.ub_sq = _remaining_ub_sq(n, k)
        self.target_ones = k * n

    # -- candidate set ------------------------------------------------------

    def set_candidates(self, rows: list[tuple[int, ...]], max_weight: int) -> None:
        self.cand = rows
        self.weights = [sum(r) for r in rows]
        self.max_weight = max_weight
        m = len(rows)
        self.dot = [[sum(a * b for a, b in zip(rows[i], rows[j])) for j in range(m)] for i in range(m)]

    # -- feasibility -----------------------------------------------------------

    def _feasible(self, idx: int, depth: int, colsum: list[int], ones: int) -> bool:
        left = self.n - depth - 1  # rows still to place after this one
        if self.cls is MatrixClass.S:
            row = self.cand[idx]
            for c in range(self.n):
                s = colsum[c] + row[c]
                if s > self.k or self.k - s > left:
                    return False
        elif self.cls is MatrixClass.T:
            rest = self.target_ones - ones - self.weights[idx]
            lo = left if self.prune else 0
            if rest < lo or rest > left * self.max_weight:
                return False
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted

    # -- leaf handling ---------------------------------------------------------

    def _offer(self, chosen: list[int], vol_sq: Optional[int]) -> None:
        rows = tuple(self.cand[i] for i in chosen)
        if vol_sq is not None and vol_sq <= self.best_sq and self.best >= 0:
            return
        d = abs(det_exact(rows))
        if vol_sq is not None and d * d != vol_sq:
            raise AssertionError("Gram determinant disagrees with Bareiss determinant")
        if d > self.best:
            self.best, self.best_sq, self.witness = d, d * d, rows

    # -- plain enumeration (no bounds, no symmetry breaking) --------------------

    def enumerate_all(self, chosen: list[int], colsum: list[int], ones: int) -> None:
        depth = len(chosen)
        if depth == self.n:
            self._offer(chosen, None)
            return
        start = chosen[-1] if chosen else 0
        for idx in range(start, len(self.cand)):
            if not self._feasible(idx, depth, colsum, ones):
                continue
            self._tick()
            row = self.cand[idx]
            chosen.append(idx)
            self.enumerate_all(chosen, [a + b for a, b in zip(colsum, row)], ones + self.weights[idx])
            chosen.pop()

    # -- any completion, used to seed a zero incumbent ---------------------------

    def _complete_any(self, chosen: list[int], colsum: list[int], ones: int) -> bool:
        depth = len(chosen)
        if depth == self.n:
            self._offer(chosen, None)
            return True
        for idx in range(chosen[-1], len(self.cand)):
            if not self._feasible(idx, depth, colsum, ones):
                continue
            self._tick()
            chosen.append(idx)
            done = self._complete_any(chosen, [a + b for a, b in zip(colsum, self.cand[idx])], ones + self.weights[idx])
            chosen.pop()
            if done:
                return True
        return False

    # -- branch and bound ----------------------------------------------------------

    def dfs(self, chosen, colsum, ones, d, lam) -> None:
        """``d[l]`` is det of the Gram matrix of the first l chosen rows, ``lam`` the
        integral Gram-Schmidt coefficients."""
        depth = len(chosen)
        left = self.n - depth - 1
        num, den = self.ub_sq[left] if self.cls is not MatrixClass.T else (None, None)
        dot = self.dot
        for idx in range(chosen[-1], len(self.cand)):
            if not self._feasible(idx, depth, colsum, ones):
                continue
            self._tick()
            new_ones = ones + self.weights[idx]
            # integral Gram-Schmidt step for the new row
            i = depth + 1
            row_lam = []
            u = 0
            for jj in range(1, i + 1):
                if jj == i:
                    u, other_lam = dot[idx][idx], row_lam
                else:
                    u, other_lam = dot[idx][chosen[jj - 1]], lam[jj - 1]
                for l in range(1, jj):
                    u = (d[l] * u - row_lam[l - 1] * other_lam[l - 1]) // d[l - 1]
                if jj < i:
                    row_lam.append(u)
            d_new = u
            if self.cls is MatrixClass.T:
                num, den = _balanced_product(self.target_ones - new_ones, left), 1
            if d_new == 0:
                if self.best < 0:
                    chosen.append(idx)
                    self._complete_any(chosen, [a + b for a, b in zip(colsum, self.cand[idx])], new_ones)
                    chosen.pop()
                continue
            if self.best >= 0 and d_new * num <= self.best_sq * den:
                continue
            chosen.append(idx)
            if left == 0:
                self._offer(chosen, d_new)
            else:
                d.append(d_new)
                lam.append(row_lam)
                self.dfs(chosen, [a + b for a, b in zip(colsum, self.cand[idx])], new_ones, d, lam)
                d.pop()
                lam.pop()
            chosen.pop()

    def start(self, first: int, second: Optional[int] = None) -> None:
        """Run branch and bound below a fixed first row (and optionally a second)."""
        row0 = self.cand[first]
        w0 = self.weights[first]
        if not self._feasible(first, 0, [0] * self.n, 0):
            return
        self._tick()
        if self.n == 1:
            self._offer([first], w0)
            return
        d = [1, w0]
        lam: list[list[int]] = [[]]
        if second is None:
            self.dfs([first], list(row0), w0, d, lam)
        elif second >= first and self._feasible(second, 1, list(row0), w0):
            self.dfs_fixed([first], list(row0), w0, d, lam, second)

    def dfs_fixed(self, chosen, colsum, ones, d, lam, idx) -> None:
        """Place row ``idx`` as the next row, then continue the normal search."""
        self._tick()
        dot = self.dot
        g01 = dot[idx][chosen[0]]
        g11 = dot[idx][idx]
        d_new = (d[1] * g11 - g01 * g01) // d[0]
        new_ones = ones + self.weights[idx]
        new_colsum = [a + b for a, b in zip(colsum, self.cand[idx])]
        left = self.n - 2
        if d_new == 0:
            if self.best < 0:
                self._complete_any(chosen + [idx], new_colsum, new_ones)
            return
        if self.cls is MatrixClass.T:
            num, den = _balanced_product(self.target_ones - new_ones, left), 1
        else:
            num, den = self.ub_sq[left]
        if self.best >= 0 and d_new * num <= self.best_sq * den:
            return
        if left == 0:
            self._offer(chosen + [idx], d_new)
            return
        self.dfs(chosen + [idx], new_colsum, new_ones, d + [d_new], lam + [[g01]])


def _first_rows(cls: MatrixClass, n: int, k: int) -> list[tuple[list[tuple[int, ...]], int]]:
    """(candidate rows, max weight) per admissible first-row weight, in search order."""
    if cls is MatrixClass.T:
        return [(_rows_desc(n, range(1, w + 1)), w) for w in range(n, k - 1, -1)]
    return [(_rows_desc(n, range(k, k + 1)), k)]


def _run_task(args) -> tuple[int, Optional[tuple], int, bool]:
    cls, n, k, budget, w_index, second = args
    s = _Search(MatrixClass(cls), n, k, budget, prune=True)
    rows, w = _first_rows(s.cls, n, k)[w_index]
    s.set_candidates(rows, w)
    try:
        s.start(0, second)
        complete = True
    except BudgetExhausted:
        complete = False
    return s.best, s.witness, s.nodes, complete


def search_max_det(
    matrix_class: str | MatrixClass,
    n: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    prune: bool = True,
    max_n: Optional[int] = None,
) -> SearchResult:
    """Maximum |det| over R(n, k), S(n, k) or T(n, k) with a witness.

    With ``prune=False`` every nonincreasing row sequence of the class is
    enumerated and its determinant computed; this is the reference the pruned
    search is checked against.

    In parallel mode (``threads > 1``) the tree is split on the second row and
    each subtree gets its own ``budget``.
    """
    cls = MatrixClass(matrix_class)
    limit = DESK_LIMIT[cls.value] if max_n is None else max_n
    if n > limit:
        raise ValueError(f"n={n} exceeds the desk-scale limit {limit} for class {cls.value}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")

    if not prune:
        s = _Search(cls, n, k, budget, prune=False)
        if cls is MatrixClass.T:
            s.set_candidates(_rows_desc(n, range(0, n + 1)), n)
        else:
            s.set_candidates(_rows_desc(n, range(k, k + 1)), k)
        try:
            s.enumerate_all([], [0] * n, 0)
            complete = True
        except BudgetExhausted:
            complete = False
        return _result(cls, n, k, s.best, s.witness, s.nodes, complete, False)

    if threads <= 1 or n < 3:
        s = _Search(cls, n, k, budget, prune=True)
        complete = True
        try:
            for rows, w in _first_rows(cls, n, k):
                s.set_candidates(rows, w)
                s.start(0)
        except BudgetExhausted:
            complete = False
        return _result(cls, n, k, s.best, s.witness, s.nodes, complete, True)

    tasks = []
    for wi, (rows, _) in enumerate(_first_rows(cls, n, k)):
        tasks.extend((cls.value, n, k, budget, wi, j) for j in range(len(rows)))
    best, witness, nodes, complete = -1, None, 0, True
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for b, wit, nd, ok in pool.map(_run_task, tasks, chunksize=4):
            nodes += nd
            complete &= ok
            if b > best:
                best, witness = b, wit
    return _result(cls, n, k, best, witness, nodes, complete, True)


def _result(cls, n, k, best, witness, nodes, complete, pruned) -> SearchResult:
    if witness is None:
        raise RuntimeError(f"class {cls.value}({n},{k}) produced no matrix")
    W = ZeroOneMatrix.from_rows(witness)
    member = class_membership(W, k)
    assert {"R": member.in_R, "S": member.in_S, "T": member.in_T}[cls.value]
    log.debug("%s(%d,%d): max |det| %d after %d nodes", cls.value, n, k, best, nodes)
    return SearchResult(cls.value, n, k, best, W, nodes, complete, pruned)


def brute_force_max_det(matrix_class: str | MatrixClass, n: int, k: int) -> int:
    """Max |det| over every n x n zero-one matrix in the class.  Tiny n only."""
    cls = MatrixClass(matrix_class)
    if n > 4:
        raise ValueError("brute force is limited to n <= 4")
    best = 0
    if cls is MatrixClass.T:
        cells = [(i, j) for i in range(n) for j in range(n)]
        for ones in combinations(range(n * n), k * n):
            M = [[0] * n for _ in range(n)]
            for c in ones:
                i, j = cells[c]
                M[i][j] = 1
            best = max(best, abs(det_exact(M)))
        return best
    subsets = [tuple(1 if c in s else 0 for c in range(n)) for s in combinations(range(n), k)]
    for rows in product(subsets, repeat=n):
        if cls is MatrixClass.S and any(sum(col) != k for col in zip(*rows)):
            continue
        best = max(best, abs(det_exact(rows)))
    return best
