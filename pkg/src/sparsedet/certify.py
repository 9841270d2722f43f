"""Cross-checks between exhaustive search results and the closed-form bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import bounds as B
from .constructions import best_block_construction, paper_matrix
from .linalg import class_membership, det_exact, gram
from .logmag import LogMagnitude
from .schedule import make_schedule, schedule_bound
from .search import MatrixClass, SearchResult, search_max_det

# slack for float rounding when a bound is attained exactly (Fano vs Ryser)
LOG_SLACK = 1e-10


class CertificationError(AssertionError):
    """A searched maximum violates a bound that is supposed to hold."""


@dataclass
class BoundCheck:
    name: str
    kind: str
    log10_bound: float
    log10_margin: float
    ok: bool


@dataclass
class CertificationReport:
    matrix_class: str
    n: int
    k: int
    max_abs_det: int
    exhaustive: bool
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "class": self.matrix_class,
            "n": self.n,
            "k": self.k,
            "max_abs_det": str(self.max_abs_det),
            "exhaustive": self.exhaustive,
            "checks": [c.__dict__ for c in self.checks],
        }


def applicable_upper_bounds(cls: MatrixClass, n: int, k: int) -> list[tuple[str, LogMagnitude]]:
    out = [("hadamard", B.hadamard_bound(n, k))]
    if n >= 2:
        out.append(("ryser", B.ryser_bound(n, k)[1]))
    if cls is MatrixClass.T:
        if k >= 2:
            out.append(("pair (kn ones)", B.c_pair(k) ** n))
        if k == 2:
            out.append(("t2 6^(n/6)", B.t2_bound(n)))
        return out
    out.append(("pair", B.pair_bound(n, n, k)))
    for q in range(1, k + 1):
        out.append((f"q_row(q={q})", B.q_row_bound(n, n, k, q)))
    out.append(("greedy_schedule", schedule_bound(make_schedule(n, n, k))))
    if k >= 2:
        out.append(("alpha_beta", B.alpha(k) * B.beta(k) ** n))
    if k == 2:
        out.append(("two_ones_per_row 2^(n/3)", B.rows_at_most_two_bound(n)))
    return out


def certify_result(res: SearchResult, strict: bool = True) -> CertificationReport:
    cls = MatrixClass(res.matrix_class)
    n, k = res.n, res.k
    rep = CertificationReport(cls.value, n, k, res.max_abs_det, res.exhaustive)
    value = LogMagnitude.of(res.max_abs_det)
    lv = value.log10
    for name, ub in applicable_upper_bounds(cls, n, k):
        if value.is_zero:
            ok, margin = True, math.inf
        elif ub.is_zero:
            ok, margin = False, -math.inf
        else:
            margin = ub.log10 - lv
            ok = margin >= -LOG_SLACK
        rep.checks.append(BoundCheck(name, B.UPPER, ub.log10, margin, ok))
    built = best_block_construction(n, k)
    if built is not None:
        det_abs, desc, M = built
        assert abs(det_exact(M)) == det_abs
        ok = res.max_abs_det >= det_abs if res.exhaustive else True
        lb = LogMagnitude.of(det_abs)
        margin = (lv - lb.log10) if not value.is_zero else -math.inf
        rep.checks.append(BoundCheck(f"construction {desc}", B.LOWER, lb.log10, margin, ok))
    if strict and not rep.ok:
        bad = ", ".join(c.name for c in rep.checks if not c.ok)
        raise CertificationError(f"{cls.value}({n},{k}) max {res.max_abs_det} violates: {bad}")
    return rep


def certify_bounds(matrix_class: str, n: int, k: int, **search_kw) -> CertificationReport:
    """Search the class exhaustively and check the maximum against every bound."""
    return certify_result(search_max_det(matrix_class, n, k, **search_kw))


def verify_counterexample() -> dict[str, bool]:
    """The S(10, 3) matrices showing the near-design condition does not force maximality."""
    A = paper_matrix("A10")
    Bm = paper_matrix("B10")
    lam = Fraction(3 * 2, 9)
    det_a, det_b = det_exact(A), det_exact(Bm)

    def off_diag_close(G) -> bool:
        return all(abs(G[i, j] - lam) < 1 for i in range(G.nrows) for j in range(G.ncols) if i != j)

    return {
        "B10 in S(10,3)": class_membership(Bm, 3).in_S,
        "det(B10) = 48, so M(10,3) >= 48": det_b == 48,
        "A10 in S(10,3)": class_membership(A, 3).in_S,
        "det(A10) = 15 < 48": det_a == 15 and det_a < det_b,
        "off-diagonals of A A^T within 1 of 2/3": off_diag_close(gram(A)),
        "off-diagonals of A^T A within 1 of 2/3": off_diag_close(gram(A.transpose())),
    }
