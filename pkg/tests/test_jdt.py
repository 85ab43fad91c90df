import itertools

import pytest
from hypothesis import given, settings

from pstrict.errors import UnsupportedRestriction
from pstrict.jdt import BOX, SlideStats, jdt_matches_bk_factorization, jdt_promotion, jdt_promotion_frozen, jdt_slide
from pstrict.labelings import LabelingSpace, RestrictionFunction, bender_knuth, bounds_space, global_restriction, global_space, promotion
from pstrict.poset import chain, full_shape

from conftest import y_convex_shape, global_instances, y_poset


def test_single_fiber_slide():
    P = chain(1)
    S = LabelingSpace(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]}))
    stats = SlideStats()
    assert jdt_slide(S, [[BOX, 2]], 2, stats) == [[2, BOX]]
    assert stats.fired[("b", 2, 0)] == 1 and stats.fired[("d", 2, 0)] == 1


def test_layer_slide_on_chain():
    P = chain(2)
    S = global_space(P, 1, 3)
    # the empty box below a 2 swaps with it inside the layer
    assert jdt_slide(S, [[BOX], [2]], 2) == [[2], [BOX]]


def test_jdt_needs_global_restriction():
    S = bounds_space(chain(2), 1, 1, {1: 2, 2: 4})
    with pytest.raises(UnsupportedRestriction):
        jdt_promotion(next(iter(S)))


def test_trace_records_every_slide():
    S = global_space(chain(2), 2, 4)
    f = next(iter(S))
    trace = []
    jdt_promotion(f, trace=trace)
    assert trace[0][0] == "start" and len(trace) == 1 + 3 * 2


@pytest.mark.parametrize(
    "S",
    [
        global_space(y_poset(), 3, 4),
        LabelingSpace(y_poset(), y_convex_shape(), global_restriction(y_poset(), y_convex_shape(), 4)),
        global_space(chain(3), 2, 5),
    ],
    ids=["y", "y-convex", "chain"],
)
def test_jdt_promotion_equals_promotion(S):
    for f in S:
        assert jdt_promotion(f) == promotion(f)
        assert jdt_matches_bk_factorization(f)


@given(global_instances(max_size=4, max_ell=3, max_q=5))
@settings(max_examples=50, deadline=None)
def test_jdt_promotion_equals_promotion_random(S):
    for f in itertools.islice(S, 150):
        assert jdt_promotion(f) == promotion(f)


@given(global_instances(max_size=4, max_ell=2, max_q=5))
@settings(max_examples=30, deadline=None)
def test_frozen_promotion_is_bk_prefix(S):
    # JdtPro_i equals rho_{i-1} ... rho_1 with labels above i untouched
    q = S.R.q
    for f in itertools.islice(S, 80):
        for i in range(2, q + 1):
            g = f
            for k in range(1, i):
                g = bender_knuth(g, k)
            assert jdt_promotion_frozen(f, i) == g
