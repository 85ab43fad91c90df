import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstrict.dynamics import (
    action_order,
    antipodal_cell_sum,
    cell_sum,
    check_csp,
    check_equivariance,
    check_homomesy,
    find_counterexample,
    flag_parity,
    orbit_decomposition,
    rank_alternating,
)
from pstrict.errors import NotABijection, NotAntipodal, NotRanked
from pstrict.labelings import promotion
from pstrict.poset import build_poset
from pstrict.qpartitions import hat_space
from pstrict.tableaux import flagged_space, ssyt_space

from conftest import diamond


def swap(x):
    return {"a": "b", "b": "a"}[x]


def test_swap_orbits():
    rep, orbits = orbit_decomposition(["a", "b"], swap)
    assert rep.sizes == (2,) and rep.order == 2 and orbits == [["a", "b"]]


def test_single_box_promotion_is_swap():
    S = ssyt_space((1,), (), 2)
    rep, _ = orbit_decomposition(S, promotion)
    assert rep.sizes == (2,) and rep.order == 2


def test_not_a_bijection():
    with pytest.raises(NotABijection):
        orbit_decomposition(["a", "b"], lambda x: "a")
    with pytest.raises(NotABijection):
        orbit_decomposition(["a", "b"], lambda x: "z")


def swap_xy(x):
    return {"x": "y", "y": "x"}[x]


def test_csp_swap():
    rep = check_csp(["x", "y"], swap_xy, [1, 1])
    assert rep.holds and rep.order == 2 and rep.fixed_point_counts == (2, 0)


def test_csp_constant_poly_fails_at_one():
    # 2 evaluates correctly at 1 but a swap has no fixed points
    rep = check_csp(["x", "y"], swap_xy, [2])
    assert not rep.holds and rep.failing_d == 1


def test_csp_degenerate_poly():
    rep = check_csp(["x", "y"], swap_xy, [1])
    assert not rep.holds and rep.reason.startswith("PolyDegenerate")


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
@settings(max_examples=50, deadline=None)
def test_csp_with_orbit_generating_polynomial(sizes):
    # a permutation with the given cycle sizes satisfies CSP with sum of [s]_{x^{N/s}}
    elems, image = [], {}
    for c, s in enumerate(sizes):
        cyc = [(c, t) for t in range(s)]
        elems += cyc
        for t in range(s):
            image[cyc[t]] = cyc[(t + 1) % s]
    N = math.lcm(*sizes)
    poly = [0] * N
    for s in sizes:
        for t in range(s):
            poly[t * N // s] += 1
    assert check_csp(elems, image.__getitem__, poly).holds


def test_homomesy_swap_and_identity():
    f = {"a": 0, "b": 1}.__getitem__
    _, orbits = orbit_decomposition(["a", "b"], swap)
    rep = check_homomesy(orbits, f)
    assert rep.homomesic and rep.constant == Fraction(1, 2)
    _, orbits = orbit_decomposition(["a", "b"], lambda x: x)
    rep = check_homomesy(orbits, f)
    assert not rep.homomesic and rep.averages == (0, 1)


def test_jobs_do_not_change_result():
    S = list(ssyt_space((2, 2), (), 4))
    a = orbit_decomposition(S, promotion, jobs=1)
    b = orbit_decomposition(S, promotion, jobs=2)
    assert a == b


@pytest.mark.parametrize("q", [3, 4])
def test_full_rectangle_sum_is_homomesic(q):
    S = ssyt_space((2, 2), (), q)
    _, orbits = orbit_decomposition(S, promotion)
    cells = [(p, i) for p in S.poset for i in S.shape.fiber(p)]
    assert check_homomesy(orbits, antipodal_cell_sum(S.poset, cells, 2)).homomesic


def test_antipodal_cell_sum_rejects_asymmetric():
    S = ssyt_space((2, 2), (), 3)
    with pytest.raises(NotAntipodal):
        antipodal_cell_sum(S.poset, [(1, 1)], 2)


def test_single_cell_sum_is_not_homomesic_on_rectangle():
    S = ssyt_space((2, 2), (), 4)
    _, orbits = orbit_decomposition(S, promotion)
    assert not check_homomesy(orbits, cell_sum([(1, 1)])).homomesic


def test_equivariance_and_counterexample():
    xs = list(range(6))
    rep = check_equivariance(xs, lambda x: x % 3, lambda x: (x + 1) % 6, lambda y: (y + 1) % 3)
    assert rep.holds and rep.checked == 6
    bad = check_equivariance(xs, lambda x: x % 3, lambda x: (x + 1) % 6, lambda y: y)
    assert not bad.holds and bad.first_failure == 0
    ce = find_counterexample(xs, lambda x: x < 4)
    assert ce.found and ce.witness == 4 and ce.searched == 5
    assert not find_counterexample(xs, lambda x: True).found


def test_action_order():
    S = ssyt_space((2, 2), (), 3)
    # promotion on rectangular tableaux has order dividing q
    assert 3 % action_order(S, promotion) == 0


def test_rank_alternating_needs_ranked():
    N = build_poset("abcde", [("a", "b"), ("b", "c"), ("a", "d"), ("e", "c")])
    with pytest.raises(NotRanked):
        rank_alternating(N)


def test_rank_alternating_values():
    S = hat_space(diamond(), 2)
    stat = rank_alternating(diamond(), elements=list(diamond()))
    for s in S:
        assert stat(s) == s["a"] - s["b"] - s["c"] + s["d"]


def test_flag_parity_simple():
    S = flagged_space((1, 1), (), (2, 4))
    got = {f.fibers: flag_parity(f) for f in S}
    # odd row with even label counts +1; even row with odd label counts -1
    assert got[((1,), (2,))] == 0
    assert got[((2,), (3,))] == 0
    assert got[((1,), (3,))] == -1
    assert got[((2,), (4,))] == 1
