import pytest

from sparsedet.linalg import class_membership, det_exact
from sparsedet.search import MatrixClass, brute_force_max_det, search_max_det


ALL_SMALL = [(c, n, k) for c in "RST" for n in range(1, 5) for k in range(1, n + 1)]


@pytest.mark.parametrize("cls,n,k", ALL_SMALL)
def test_pruned_search_matches_brute_force(cls, n, k):
    res = search_max_det(cls, n, k)
    assert res.exhaustive
    assert res.max_abs_det == brute_force_max_det(cls, n, k)
    assert abs(det_exact(res.witness)) == res.max_abs_det
    member = class_membership(res.witness, k)
    assert getattr(member, f"in_{cls}")


@pytest.mark.parametrize("cls", "RST")
@pytest.mark.parametrize("k", range(1, 6))
def test_pruned_matches_unpruned_n5(cls, k):
    a = search_max_det(cls, 5, k)
    b = search_max_det(cls, 5, k, prune=False)
    assert a.exhaustive and b.exhaustive and not b.pruned
    assert a.max_abs_det == b.max_abs_det


@pytest.mark.parametrize("n", range(2, 7))
def test_class_containment(n):
    # S(n, k) is inside R(n, k), which is inside T(n, k)
    for k in range(1, n + 1):
        s = search_max_det("S", n, k).max_abs_det
        r = search_max_det("R", n, k).max_abs_det
        t = search_max_det("T", n, k).max_abs_det
        assert s <= r <= t


def test_identity_and_all_ones():
    assert search_max_det("S", 5, 1).max_abs_det == 1
    assert search_max_det("R", 5, 5).max_abs_det == 0
    assert search_max_det("S", 4, 3).max_abs_det == 3


def test_results_do_not_depend_on_thread_count():
    one = search_max_det("R", 6, 3, threads=1)
    many = search_max_det("R", 6, 3, threads=4)
    again = search_max_det("R", 6, 3, threads=4)
    assert one.max_abs_det == many.max_abs_det == again.max_abs_det == 9
    assert many.witness == again.witness
    assert many.to_dict() == again.to_dict()


def test_budget_exhaustion_is_reported():
    res = search_max_det("S", 7, 3, budget=50)
    assert not res.exhaustive
    assert res.nodes_explored <= 60


def test_size_limit_and_validation():
    with pytest.raises(ValueError):
        search_max_det("R", 8, 3)
    with pytest.raises(ValueError):
        search_max_det("R", 4, 5)
    assert search_max_det("R", 8, 2, max_n=8).exhaustive


def test_to_dict_is_serialisable():
    import json
    d = search_max_det(MatrixClass.S, 3, 2).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["max_abs_det"] == "2"


def test_every_four_by_four_with_two_ones_per_line_is_singular():
    # such a matrix splits into cycle blocks I + P; even cycles are singular
    # and 4 has no partition into odd parts >= 3
    from itertools import product
    rows = [r for r in product((0, 1), repeat=4) if sum(r) == 2]
    mats = [m for m in product(rows, repeat=4) if all(sum(c) == 2 for c in zip(*m))]
    assert len(mats) == 90
    assert all(det_exact(m) == 0 for m in mats)
