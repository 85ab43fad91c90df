import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstrict.dynamics import check_cycle_type_equality
from pstrict.errors import InvalidBounds, InvalidParameter, InvalidQPartition, ToggleOnFixedElement
from pstrict.gamma import hat_gamma_space
from pstrict.labelings import LabelingSpace, RestrictionFunction
from pstrict.poset import chain, full_shape, linear_extensions, product_of_chains, triangle
from pstrict.qpartitions import (
    column_toggle,
    delta_epsilon_space,
    hat_space,
    rowmotion,
    rowmotion_inverse,
    toggle,
    toggle_promotion,
    toggle_promotion_inverse,
)

from conftest import diamond, global_instances, small_posets


def brute_qpartitions(Q, bounds):
    """Every order-preserving map to ``{0..ell}`` agreeing with the bounds."""
    elems = list(Q.elements)
    out = set()
    for vals in itertools.product(range(bounds.ell + 1), repeat=len(elems)):
        d = dict(zip(elems, vals))
        if any(d[x] != v for x, v in bounds.values.items()):
            continue
        if all(d[a] <= d[b] for a, b in Q.covers()):
            out.add(vals)
    return out


def single_cell_space():
    P = chain(1)
    return hat_gamma_space(LabelingSpace(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]})))


def test_toggle_promotion_single_free_element():
    Q = single_cell_space()
    free = Q.poset.elements[Q.free_order[0]]
    for s in Q:
        assert toggle_promotion(s)[free] == 2 - s[free]


def test_toggle_on_bounded_element_rejected():
    Q = single_cell_space()
    s = next(iter(Q))
    with pytest.raises(ToggleOnFixedElement):
        toggle(s, next(iter(Q.bounds.values)))


def test_invalid_qpartition_rejected():
    Q = hat_space(chain(2), 2)
    with pytest.raises(InvalidQPartition):
        Q.qpartition({"0̂": 0, 1: 2, 2: 1, "1̂": 2})


def test_bounds_must_be_ordered():
    with pytest.raises(InvalidBounds):
        delta_epsilon_space(chain(1), {1: 0}, {1: 1}, 2)


def test_rowmotion_rejects_bad_extension():
    Q = hat_space(chain(2), 1)
    s = next(iter(Q))
    with pytest.raises(InvalidParameter):
        rowmotion(s, [1])


@pytest.mark.parametrize("Q, ell", [(chain(3), 2), (diamond(), 2), (triangle(2), 3), (product_of_chains((2, 3)), 1)])
def test_hat_space_counts_match_brute(Q, ell):
    S = hat_space(Q, ell)
    assert {s.values for s in S} == brute_qpartitions(S.poset, S.bounds)


@given(small_posets(max_size=4), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_enumeration_matches_brute(Q, ell):
    S = hat_space(Q, ell)
    assert {s.values for s in S} == brute_qpartitions(S.poset, S.bounds)


def test_delta_epsilon_matches_brute():
    Q = triangle(2)
    delta = {(1, 2): 2, (2, 1): 3, (2, 2): 3}
    eps = {(1, 2): 0, (2, 1): 1, (2, 2): 1}
    S = delta_epsilon_space(Q, delta, eps, 3)
    got = {tuple(s[x] for x in Q) for s in S}
    want = {
        vals
        for vals in itertools.product(range(4), repeat=3)
        if all(eps[x] <= v <= delta[x] for x, v in zip(Q, vals))
        and all(vals[list(Q).index(a)] <= vals[list(Q).index(b)] for a, b in Q.covers())
    }
    assert got == want


@given(small_posets(max_size=4), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_toggles_are_involutions_and_commute_off_covers(Q, ell):
    S = hat_space(Q, ell)
    free = [S.poset.elements[i] for i in S.free_order]
    for s in itertools.islice(S, 60):
        for x in free:
            assert toggle(toggle(s, x), x) == s
        for x, y in itertools.combinations(free, 2):
            if y not in S.poset.upper_covers(x) and x not in S.poset.upper_covers(y):
                assert toggle(toggle(s, x), y) == toggle(toggle(s, y), x)


@given(small_posets(max_size=4), st.integers(1, 2))
@settings(max_examples=30, deadline=None)
def test_rowmotion_independent_of_linear_extension(Q, ell):
    S = hat_space(Q, ell)
    free = {S.poset.elements[i] for i in S.free_order}
    exts = {tuple(x for x in ext if x in free) for ext in linear_extensions(S.poset)}
    for s in itertools.islice(S, 30):
        images = {rowmotion(s, ext) for ext in exts}
        assert len(images) == 1
        assert rowmotion_inverse(rowmotion(s)) == s


@given(global_instances(max_size=3, max_ell=2, max_q=5))
@settings(max_examples=30, deadline=None)
def test_toggle_promotion_inverse_and_columns(S):
    Q = hat_gamma_space(S)
    cols = sorted({Q.poset.elements[i][1] for i in Q.free_order})
    for s in itertools.islice(Q, 100):
        assert toggle_promotion_inverse(toggle_promotion(s)) == s
        t = s
        for k in cols:
            t = column_toggle(t, k)
        assert t == toggle_promotion(s)


@given(global_instances(max_size=3, max_ell=2, max_q=5))
@settings(max_examples=25, deadline=None)
def test_rowmotion_and_toggle_promotion_share_cycle_type(S):
    Q = hat_gamma_space(S)
    ok, a, b = check_cycle_type_equality(list(Q), rowmotion, list(Q), toggle_promotion)
    assert ok, (a, b)


@pytest.mark.parametrize("a, b, ell", [(2, 2, 1), (2, 3, 2), (3, 3, 1)])
def test_row_order_on_rectangle(a, b, ell):
    # piecewise-linear rowmotion on a product of two chains has order a + b
    S = hat_space(product_of_chains((a, b)), ell)
    for s in S:
        t = s
        for _ in range(a + b):
            t = rowmotion(t)
        assert t == s
