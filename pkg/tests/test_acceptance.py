"""Acceptance criteria 1-9.

Reference constants are checked by rounding: the computed value, rendered with
as many significant figures as the reference string, must produce the same digits.
"""

import math
import time
from decimal import Decimal
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest

from sparsedet import bounds as B
from sparsedet.certify import certify_result
from sparsedet.constructions import biplane_11, fano, paper_matrix, s_matrix
from sparsedet.linalg import ZeroOneMatrix, det_exact, gram, vol_squared
from sparsedet.logmag import LogMagnitude
from sparsedet.schedule import make_schedule, schedule_bound
from sparsedet.search import search_max_det


def as_reference(value, reference: str) -> tuple[str, str]:
    """Render ``value`` and ``reference`` alike, with the reference's significant figures."""
    lm = value if isinstance(value, LogMagnitude) else LogMagnitude.of(value)
    d = Decimal(reference)
    sig = len(d.as_tuple().digits)
    ours = lm.format(sig)
    mant, exp = f"{d:.{sig - 1}e}".split("e")
    return ours, f"{mant}e{int(exp)}"


def assert_digits(value, reference):
    ours, theirs = as_reference(value, reference)
    assert ours == theirs, f"computed {ours}, expected {theirs}"


def crit(n, title):
    return pytest.mark.criterion(n, title)


# -- 1 ------------------------------------------------------------------------------

@crit(1, "k=3, n=1000 bounds")
def test_k3_n1000_bounds():
    t = time.perf_counter()
    assert_digits(B.hadamard_bound(1000, 3), "3.64e238")
    lam, ryser = B.ryser_bound(1000, 3)
    assert lam == Fraction(2, 333)
    assert_digits(ryser, "2.31e238")
    assert_digits(B.pair_bound(1000, 1000, 3), "1.08e230")
    assert time.perf_counter() - t < 1.0


# -- 2 ------------------------------------------------------------------------------

@crit(2, "growth constants and optimal q")
def test_growth_constants():
    assert B.c_pair(3).ln_value == pytest.approx(math.log(24) / 6, rel=1e-12)
    assert_digits(B.c_pair(3), "1.6984")
    assert_digits(B.c_pair(17), "4.1197")
    assert_digits(B.c_q(8, 17), "4.1111")
    assert B.optimal_q(17)[0] == 8
    assert_digits(B.c_q(23, 49), "6.9931")
    assert B.optimal_q(49)[0] == 23


# -- 3 ------------------------------------------------------------------------------

GROWTH_CONSTANTS = [
    # k, c_2k, q_*, c_q*k, alpha_k, beta_k
    (3, "1.6984", 2, "1.6984", "21.91", "1.6977"),
    (4, "1.9759", 3, "1.9719", "782.53", "1.9702"),
    (5, "2.2179", 3, "2.2116", "1.2591e5", "2.2097"),
    (6, "2.4352", 4, "2.4279", "1.0075e8", "2.4257"),
    (7, "2.6341", 4, "2.6258", "4.3557e11", "2.6240"),
    (8, "2.8187", 5, "2.8103", "1.0925e16", "2.8083"),
    (9, "2.9917", 5, "2.9828", "1.6920e21", "2.9812"),
    (10, "3.1551", 5, "3.1462", "1.7105e27", "3.1447"),
]


@crit(3, "growth constants for k = 3..10")
def test_growth_constants_k3_to_10():
    t = time.perf_counter()
    for k, c2, qs, cqs, a, b in GROWTH_CONSTANTS:
        q_star, c_star = B.optimal_q(k)
        assert_digits(B.c_q(2, k), c2)
        assert q_star == qs, k
        assert_digits(c_star, cqs)
        assert_digits(B.alpha(k), a)
        assert_digits(B.beta(k), b)
    assert time.perf_counter() - t < 1.0


# -- 4 ------------------------------------------------------------------------------

@crit(4, "greedy schedule")
def test_schedule_sequence():
    assert make_schedule(100, 200, 17).q_sequence == (
        9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3,
        2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)


@crit(4, "greedy schedule")
def test_removal_counts_1000_17():
    counts = make_schedule(1000, 1000, 17).counts
    assert counts == {17: 4, 16: 4, 15: 3, 14: 5, 13: 4, 12: 5, 11: 5, 10: 6, 9: 7,
                      8: 7, 7: 8, 6: 10, 5: 12, 4: 14, 3: 20, 2: 29, 1: 57}


@crit(4, "greedy schedule")
def test_greedy_bound_values():
    assert_digits(schedule_bound(make_schedule(1000, 1000, 17)), "9.3551e612")
    assert_digits(B.greedy_closed_bound(1000, 1000, 17), "3.7674e707")
    assert_digits(B.alpha(17), "4.8887e93")
    assert_digits(B.beta(17), "4.1104")
    assert_digits(B.alpha(3), "21.91")
    assert_digits(B.beta(3), "1.6977")


# -- 5 ------------------------------------------------------------------------------

@crit(5, "exact determinants")
def test_exact_determinants():
    t = time.perf_counter()
    # signed det is -4; the maximum is taken over |det|
    assert abs(det_exact(paper_matrix("R7_K2"))) == 4
    assert det_exact(paper_matrix("B10")) == 48
    A = paper_matrix("A10")
    assert det_exact(A) == 15
    for G in (gram(A), gram(A.transpose())):
        assert {G[i, j] for i in range(10) for j in range(10) if i != j} <= {0, 1}
    assert abs(det_exact(fano())) == 24
    assert abs(det_exact(biplane_11())) == 1215
    for k in range(1, 7):
        for a in range(k):
            for n in range(2, 9):
                assert det_exact(s_matrix(n, a, k)) == (k - a) ** (n - 1) * (k - a + n * a)
                assert det_exact(s_matrix(n, a, k)) == B.det_S_formula(n, a, k)
    assert time.perf_counter() - t < 10.0


# -- 6 ------------------------------------------------------------------------------

def timed(cls, n, k):
    t = time.perf_counter()
    res = search_max_det(cls, n, k)
    assert time.perf_counter() - t < 60.0
    assert res.exhaustive
    return res


@crit(6, "exhaustive search values")
@pytest.mark.parametrize("n,expected", [(3, 2), (4, 2), (5, 2), (6, 4), (7, 2)])
def test_max_det_two_ones(n, expected):
    assert timed("S", n, 2).max_abs_det == expected


@crit(6, "exhaustive search values")
def test_max_det_r_7_2():
    assert timed("R", 7, 2).max_abs_det == 4


@crit(6, "exhaustive search values")
def test_max_det_7_3_is_fano():
    res = timed("S", 7, 3)
    assert res.max_abs_det == 24
    assert gram(res.witness) == s_matrix(7, 1, 3)


# -- 7 ------------------------------------------------------------------------------

SEARCHED = [(c, n, k) for c in "RST" for n in range(1, 7) for k in range(1, n + 1)]
SEARCHED += [("S", 7, 2), ("R", 7, 2), ("S", 7, 3)]


@crit(7, "bound dominance and pruning soundness")
@pytest.mark.parametrize("cls,n,k", SEARCHED)
def test_bound_dominance(cls, n, k):
    res = search_max_det(cls, n, k)
    assert res.exhaustive
    rep = certify_result(res, strict=False)
    assert rep.ok, [c for c in rep.checks if not c.ok]


@crit(7, "bound dominance and pruning soundness")
@pytest.mark.parametrize("cls", "RST")
def test_pruned_equals_unpruned(cls):
    for n in range(1, 6):
        for k in range(1, n + 1):
            a = search_max_det(cls, n, k)
            b = search_max_det(cls, n, k, prune=False)
            assert a.max_abs_det == b.max_abs_det, (cls, n, k)


# -- 8 ------------------------------------------------------------------------------

@crit(8, "s* root, constant orderings, perturbed constant")
def test_s_star():
    s = B.s_star()
    assert abs(B.s_star_residual(s)) < 1e-10
    assert_digits(s, "0.4395")


@crit(8, "s* root, constant orderings, perturbed constant")
def test_constant_orderings():
    for k in range(3, 201):
        assert B.beta(k) < B.c_pair(k) < LogMagnitude.power(k, 0.5), k
    for k in range(3, 28):
        assert B.beta(k) < B.optimal_q(k)[1], k


@crit(8, "s* root, constant orderings, perturbed constant")
def test_perturbed_constant():
    d = B.perturbed_bound(4, 0.01)
    assert_digits(d, "1.9892")
    assert d.to_float() < 2.02
    for k in range(2, 201):
        assert B.perturbed_bound(k, 0.0).ln_value == pytest.approx(B.c_pair(k).ln_value, rel=1e-12)


# -- 9 ------------------------------------------------------------------------------

@crit(9, "monotonicity and consistency")
def test_det_S_decreasing_in_off_diagonal():
    for n in range(2, 9):
        for k in range(2, 7):
            xs = [Fraction(i, 10) for i in range(10 * k)]
            vals = [B.det_S_formula(n, x, k) for x in xs]
            assert all(b < a for a, b in zip(vals, vals[1:])), (n, k)


@crit(9, "monotonicity and consistency")
def test_design_rate_k3():
    d = B.design_lower_bound(3)
    assert d.ln_value == pytest.approx(math.log(24) / 7, rel=1e-12)
    assert_digits(d, "1.5746")
    assert d < B.beta(3)


@crit(9, "monotonicity and consistency")
def test_gram_dominance():
    checked = 0
    for q in range(1, 4):
        for k in range(1, 4):
            for n in range(max(k, q), 7):
                for rows in combinations_with_replacement(list(combinations(range(n), k)), q):
                    if not set.intersection(*(set(r) for r in rows)):
                        continue
                    A = ZeroOneMatrix.from_rows([[int(c in r) for c in range(n)] for r in rows])
                    assert vol_squared(A) <= (k - 1) ** (q - 1) * (k - 1 + q)
                    checked += 1
    assert checked > 1000
