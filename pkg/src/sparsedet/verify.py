"""Reference-value suite: recompute known constants and counts and compare.

Each criterion returns a list of :class:`Item` rows; ``run_suite`` times them.
Reference values are strings carrying their own precision: the computed
value, written at the same decimal exponent, must be within half a unit of the
last digit given.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable

from . import bounds as B
from .certify import certify_result, verify_counterexample
from .constructions import biplane_11, fano, paper_matrix, s_matrix
from .linalg import ZeroOneMatrix, det_exact, gram, vol_squared
from .logmag import LogMagnitude
from .schedule import make_schedule, schedule_bound
from .search import search_max_det


@dataclass
class Item:
    name: str
    computed: object
    expected: object
    ok: bool


@dataclass
class CriterionResult:
    number: int
    title: str
    items: list[Item]
    seconds: float
    time_limit: float | None = None

    @property
    def ok(self) -> bool:
        within = self.time_limit is None or self.seconds < self.time_limit
        return within and all(i.ok for i in self.items)


def matches_to_digits(value: LogMagnitude | float, reference: str) -> bool:
    """True when ``value`` agrees with ``reference`` to the digits given.

    ``reference`` is plain decimal ("1.6984") or scientific ("9.3551e612").
    """
    lm = value if isinstance(value, LogMagnitude) else LogMagnitude.of(value)
    mant_txt, _, exp_txt = reference.lower().partition("e")
    exp = int(exp_txt) if exp_txt else 0
    mant = Decimal(mant_txt)
    places = -mant.as_tuple().exponent
    computed_mant = 10.0 ** (lm.log10 - exp)
    return abs(computed_mant - float(mant)) <= 0.5 * 10.0**-places * (1 + 1e-9)


def _fmt(v: LogMagnitude, digits: int = 5) -> str:
    return v.format(digits)


def _ref(name: str, value: LogMagnitude, reference: str) -> Item:
    return Item(name, _fmt(value, 8), reference, matches_to_digits(value, reference))


def _eq(name: str, computed, expected) -> Item:
    return Item(name, computed, expected, computed == expected)


def _close(name: str, a: float, b: float, rel: float) -> Item:
    return Item(name, a, b, abs(a - b) <= rel * abs(b))


# -- reference values -------------------------------------------------------------

# k: (c_{1,k}, c_{2,k}, q_*, c_{q_*,k}, alpha_k, beta_k)
GROWTH_CONSTANTS = {
    3: ("1.7321", "1.6984", 2, "1.6984", "21.91", "1.6977"),
    4: ("2.0", "1.9759", 3, "1.9719", "782.53", "1.9702"),
    5: ("2.2361", "2.2179", 3, "2.2116", "1.2591e5", "2.2097"),
    6: ("2.4495", "2.4352", 4, "2.4279", "1.0075e8", "2.4257"),
    7: ("2.6458", "2.6341", 4, "2.6258", "4.3557e11", "2.6240"),
    8: ("2.8284", "2.8187", 5, "2.8103", "1.0925e16", "2.8083"),
    9: ("3.0", "2.9917", 5, "2.9828", "1.6920e21", "2.9812"),
    10: ("3.1623", "3.1551", 5, "3.1462", "1.7105e27", "3.1447"),
}

# greedy removal counts a_q for k = 17, m = n = 1000
REMOVAL_COUNTS_1000_17 = {17: 4, 16: 4, 15: 3, 14: 5, 13: 4, 12: 5, 11: 5, 10: 6, 9: 7,
           8: 7, 7: 8, 6: 10, 5: 12, 4: 14, 3: 20, 2: 29, 1: 57}

Q_100_200_17 = (9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3,
                2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)


# -- criteria ---------------------------------------------------------------------

def c1_k3_example() -> list[Item]:
    lam, ryser = B.ryser_bound(1000, 3)
    return [
        _ref("hadamard(1000,3)", B.hadamard_bound(1000, 3), "3.64e238"),
        _eq("ryser lambda", lam, Fraction(2, 333)),
        _ref("ryser(1000,3)", ryser, "2.31e238"),
        _ref("pair_bound(1000,1000,3)", B.pair_bound(1000, 1000, 3), "1.08e230"),
    ]


def c2_constants() -> list[Item]:
    return [
        _ref("c_pair(3)", B.c_pair(3), "1.6984"),
        _close("c_pair(3) = 24^(1/6)", B.c_pair(3).ln_value, math.log(24) / 6, 1e-12),
        _ref("c_pair(17)", B.c_pair(17), "4.1197"),
        _ref("c_q(8,17)", B.c_q(8, 17), "4.1111"),
        _eq("optimal_q(17)", B.optimal_q(17)[0], 8),
        _ref("c_q(23,49)", B.c_q(23, 49), "6.9931"),
        _eq("optimal_q(49)", B.optimal_q(49)[0], 23),
    ]


def c3_growth_constants() -> list[Item]:
    items = []
    for k, (c1, c2, qs, cqs, a, b) in GROWTH_CONSTANTS.items():
        q_star, c_star = B.optimal_q(k)
        items += [
            _ref(f"k={k} c_1", B.c_q(1, k), c1),
            _ref(f"k={k} c_2", B.c_q(2, k), c2),
            _eq(f"k={k} q_*", q_star, qs),
            _ref(f"k={k} c_q*", c_star, cqs),
            _ref(f"k={k} alpha", B.alpha(k), a),
            _ref(f"k={k} beta", B.beta(k), b),
        ]
    return items


def c4_greedy() -> list[Item]:
    sched = make_schedule(1000, 1000, 17)
    beta3_closed = (LogMagnitude.power(Fraction(40, 11), Fraction(11, 36))
                    * LogMagnitude.power(2, Fraction(7, 36)))
    return [
        _eq("Q(100,200,17)", make_schedule(100, 200, 17).q_sequence, Q_100_200_17),
        _eq("removal counts (1000,1000,17)", sched.counts, REMOVAL_COUNTS_1000_17),
        _ref("schedule_bound(1000,1000,17)", schedule_bound(sched), "9.3551e612"),
        _ref("greedy_closed_bound(1000,1000,17)", B.greedy_closed_bound(1000, 1000, 17), "3.7674e707"),
        _ref("alpha(17)", B.alpha(17), "4.8887e93"),
        _ref("beta(17)", B.beta(17), "4.1104"),
        _ref("alpha(3)", B.alpha(3), "21.91"),
        _ref("beta(3)", B.beta(3), "1.6977"),
        _close("beta(3) = (40/11)^(11/36) 2^(7/36)", B.beta(3).ln_value, beta3_closed.ln_value, 1e-12),
    ]


def c5_exact_dets() -> list[Item]:
    A10 = paper_matrix("A10")

    def offdiag(G):
        return {G[i, j] for i in range(G.nrows) for j in range(G.ncols) if i != j}

    mismatches = [
        (n, a, k)
        for k in range(1, 7)
        for a in range(0, k)
        for n in range(2, 9)
        if det_exact(s_matrix(n, a, k)) != B.det_S_formula(n, a, k)
    ]
    return [
        _eq("|det R7_K2|", abs(det_exact(paper_matrix("R7_K2"))), 4),
        _eq("det B10", det_exact(paper_matrix("B10")), 48),
        _eq("det A10", det_exact(A10), 15),
        _eq("A10 off-diagonals of A A^T", offdiag(gram(A10)) <= {0, 1}, True),
        _eq("A10 off-diagonals of A^T A", offdiag(gram(A10.transpose())) <= {0, 1}, True),
        _eq("|det Fano|", abs(det_exact(fano())), 24),
        _eq("|det biplane_11|", abs(det_exact(biplane_11())), 1215),
        _eq("det S_{n,a,k} mismatches (2<=n<=8, 0<=a<k<=6)", mismatches, []),
    ]


SEARCH_TIME_LIMIT = 60.0


def _timed_search(cls, n, k):
    t = time.perf_counter()
    res = search_max_det(cls, n, k)
    return res, time.perf_counter() - t


def c6_searches() -> list[Item]:
    items = []
    for n, expected in zip(range(3, 8), (2, 2, 2, 4, 2)):
        res, dt = _timed_search("S", n, 2)
        items.append(Item(f"M({n},2)", res.max_abs_det, expected,
                          res.exhaustive and res.max_abs_det == expected and dt < SEARCH_TIME_LIMIT))
    res, dt = _timed_search("S", 4, 2)
    items.append(Item("M(4,2) (special case)", res.max_abs_det, 2,
                      res.exhaustive and res.max_abs_det == 2 and dt < SEARCH_TIME_LIMIT))
    res, dt = _timed_search("R", 7, 2)
    items.append(Item("M_R(7,2)", res.max_abs_det, 4,
                      res.exhaustive and res.max_abs_det == 4 and dt < SEARCH_TIME_LIMIT))
    res, dt = _timed_search("S", 7, 3)
    design = gram(res.witness) == s_matrix(7, 1, 3)
    items.append(Item("M(7,3)", res.max_abs_det, 24,
                      res.exhaustive and res.max_abs_det == 24 and dt < SEARCH_TIME_LIMIT))
    items.append(_eq("M(7,3) witness is a (7,3,1) design", design, True))
    return items


DOMINANCE_GRID = [(c, n, k) for c in "RST" for n in range(1, 7) for k in range(1, n + 1)] + [
    ("S", 7, 2), ("R", 7, 2), ("S", 7, 3),
]


def c7_dominance() -> list[Item]:
    items = []
    failures = []
    for cls, n, k in DOMINANCE_GRID:
        res = search_max_det(cls, n, k)
        rep = certify_result(res, strict=False)
        if not (res.exhaustive and rep.ok):
            failures.append((cls, n, k))
    items.append(_eq(f"bound violations over {len(DOMINANCE_GRID)} searched classes", failures, []))
    disagree = []
    for cls in "RST":
        for n in range(1, 6):
            for k in range(1, n + 1):
                a = search_max_det(cls, n, k).max_abs_det
                b = search_max_det(cls, n, k, prune=False).max_abs_det
                if a != b:
                    disagree.append((cls, n, k, a, b))
    items.append(_eq("pruned vs unpruned disagreements (n <= 5)", disagree, []))
    return items


def c8_root_and_orderings() -> list[Item]:
    s = B.s_star(1e-12)
    bad_pair = [k for k in range(3, 201)
                if not (B.beta(k) < B.c_pair(k) < LogMagnitude.power(k, 0.5))]
    bad_q = [k for k in range(3, 28) if not B.beta(k) < B.optimal_q(k)[1]]
    bad_d0 = [k for k in range(2, 201)
              if abs(B.perturbed_bound(k, 0.0).ln_value - B.c_pair(k).ln_value)
              > 1e-12 * abs(B.c_pair(k).ln_value)]
    d = B.perturbed_bound(4, 0.01)
    return [
        Item("s_star", s, "0.4395", matches_to_digits(s, "0.4395")),
        Item("|f(s_star)| < 1e-10", abs(B.s_star_residual(s)), 1e-10, abs(B.s_star_residual(s)) < 1e-10),
        _eq("k in 3..200 with not beta < c_pair < sqrt(k)", bad_pair, []),
        _eq("k in 3..27 with not beta < c_q(q_*)", bad_q, []),
        _ref("d_0.01(4)", d, "1.9892"),
        _eq("d_0.01(4) < 2.02", d < LogMagnitude.of(2.02), True),
        _eq("k in 2..200 with d_0(k) != c_pair(k)", bad_d0, []),
    ]


def c9_consistency() -> list[Item]:
    not_decreasing = []
    for n in range(2, 9):
        for k in range(2, 7):
            grid = [Fraction(i, 10) for i in range(0, 10 * k)]
            vals = [B.det_S_formula(n, x, k) for x in grid]
            if any(b >= a for a, b in zip(vals, vals[1:])):
                not_decreasing.append((n, k))
    dl = B.design_lower_bound(3)
    gram_violations = 0
    checked = 0
    for q in range(1, 4):
        for k in range(1, 4):
            for n in range(k, 7):
                if q > n:
                    continue
                subsets = list(combinations(range(n), k))
                for rows in combinations_with_replacement(subsets, q):
                    if not set.intersection(*(set(r) for r in rows)):
                        continue
                    A = ZeroOneMatrix.from_rows([[int(c in r) for c in range(n)] for r in rows])
                    checked += 1
                    if vol_squared(A) > B.det_S_formula(q, 1, k):
                        gram_violations += 1
    return [
        _eq("(n,k) grids where det_S(n,x,k) is not strictly decreasing", not_decreasing, []),
        _close("design_lower_bound(3) = 24^(1/7)", dl.ln_value, math.log(24) / 7, 1e-12),
        _ref("design_lower_bound(3)", dl, "1.5746"),
        _eq("design_lower_bound(3) < beta(3)", dl < B.beta(3), True),
        Item(f"Gram dominance violations ({checked} matrices)", gram_violations, 0, gram_violations == 0 and checked > 0),
    ]


CRITERIA: list[tuple[int, str, Callable[[], list[Item]], float | None]] = [
    (1, "k=3, n=1000 example bounds", c1_k3_example, 1.0),
    (2, "growth constants and optimal q", c2_constants, None),
    (3, "growth constants for k = 3..10", c3_growth_constants, 1.0),
    (4, "greedy schedule, removal counts, alpha/beta", c4_greedy, None),
    (5, "exact determinants", c5_exact_dets, 10.0),
    (6, "exhaustive search values", c6_searches, None),
    (7, "bound dominance and pruning soundness", c7_dominance, None),
    (8, "s* root, constant orderings, perturbed constant", c8_root_and_orderings, None),
    (9, "monotonicity and consistency", c9_consistency, None),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn, limit in CRITERIA:
        if num == number:
            t = time.perf_counter()
            items = fn()
            return CriterionResult(num, title, items, time.perf_counter() - t, limit)
    raise KeyError(number)


def run_suite() -> list[CriterionResult]:
    return [run_criterion(num) for num, *_ in CRITERIA]


def verify_counterexample_items() -> list[Item]:
    return [_eq(name, ok, True) for name, ok in verify_counterexample().items()]
