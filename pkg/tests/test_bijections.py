import itertools

import pytest
from hypothesis import given, settings

from pstrict.bijections import (
    GTPattern,
    enumerate_gt_patterns,
    gt_elementary_transformation,
    gt_to_sigma_bar,
    j_value,
    phi,
    phi_inverse,
    phi_three_step,
    psi,
    psi_inverse,
    psi_space,
    to_gt_pattern,
)
from pstrict.errors import InvalidGTPattern, NotAChainP, RowOutOfRange, UnsupportedRestriction
from pstrict.gamma import hat_gamma_space
from pstrict.labelings import LabelingSpace, RestrictionFunction, bender_knuth, bounds_space, global_space, promotion
from pstrict.poset import chain, full_shape
from pstrict.qpartitions import toggle_promotion
from pstrict.tableaux import ssyt_space

from conftest import bounded_instances, diamond, global_instances


def test_phi_single_fiber_example():
    P = chain(1)
    S = LabelingSpace(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]}))
    got = {f.fibers[0]: phi(f)[(1, 1)] for f in S}
    assert got == {(1, 1): 0, (1, 2): 1, (2, 2): 2}


def test_j_value_past_fiber():
    P = chain(1)
    S = LabelingSpace(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]}))
    f = S.labeling([(1, 2)])
    assert j_value(f, 1, 2) == 3 and j_value(f, 1, 1) == 2


def _check_phi(S):
    Q = hat_gamma_space(S)
    labs = list(itertools.islice(S, 300))
    images = [phi(f) for f in labs]
    assert len(set(images)) == len(images)
    for f, s in zip(labs, images):
        assert phi_three_step(f) == s
        assert phi_inverse(s, S) == f
        assert phi(promotion(f)) == toggle_promotion(s)
    if len(labs) < 300:
        assert Q.count() == len(labs)


@given(global_instances(max_size=4, max_ell=2, max_q=5))
@settings(max_examples=40, deadline=None)
def test_phi_bijective_equivariant_global(S):
    _check_phi(S)


@given(bounded_instances(max_size=3, max_ell=2, max_label=5))
@settings(max_examples=40, deadline=None)
def test_phi_bijective_equivariant_bounded(S):
    _check_phi(S)


def test_phi_inverse_covers_whole_target():
    S = global_space(diamond(), 2, 5)
    Q = hat_gamma_space(S)
    assert {phi(phi_inverse(s, S)) for s in Q} == set(Q)


@given(global_instances(max_size=3, max_ell=2, max_q=4))
@settings(max_examples=30, deadline=None)
def test_psi_bijective(S):
    Q = psi_space(S)
    labs = list(S)
    images = {psi(f) for f in labs}
    assert len(images) == len(labs) == Q.count()
    for f in labs:
        assert psi_inverse(psi(f), S) == f


def test_psi_needs_global_bound():
    S = bounds_space(chain(2), 1, 1, {1: 2, 2: 4})
    with pytest.raises(UnsupportedRestriction):
        psi(next(iter(S)))


def test_gt_needs_chain():
    S = global_space(diamond(), 1, 4)
    f = next(iter(S))
    with pytest.raises(NotAChainP):
        to_gt_pattern(psi(f), S)


def test_gt_validation_and_row_range():
    with pytest.raises(InvalidGTPattern):
        GTPattern(((2, 0), (1, 0)), 1).validate()
    a = GTPattern(((0,), (1,)), 1).validate()
    with pytest.raises(RowOutOfRange):
        gt_elementary_transformation(a, 1)


@pytest.mark.parametrize("lam, mu, q", [((2, 2), (1,), 3), ((2, 1), (), 3), ((3, 1), (1,), 3), ((2, 2, 1), (), 4)])
def test_gt_patterns_match_psi_image(lam, mu, q):
    S = ssyt_space(lam, mu, q)
    pats = {to_gt_pattern(psi(f), S) for f in S}
    some = next(iter(pats))
    brute = set(enumerate_gt_patterns(some.mu, some.lam, q))
    assert pats == brute
    for a in pats:
        assert to_gt_pattern(gt_to_sigma_bar(a, S), S) == a


@pytest.mark.parametrize("lam, mu, q", [((2, 2), (1,), 3), ((2, 1), (), 3), ((3, 2, 1), (1,), 4)])
def test_gt_transformation_is_involution_and_matches_bk(lam, mu, q):
    S = ssyt_space(lam, mu, q)
    for f in S:
        a = to_gt_pattern(psi(f), S)
        for k in range(1, q):
            t = gt_elementary_transformation(a, q - k)
            assert gt_elementary_transformation(t, q - k) == a
            assert to_gt_pattern(psi(bender_knuth(f, k)), S) == t
