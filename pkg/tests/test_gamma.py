import itertools

import pytest
from hypothesis import given, settings

from pstrict.errors import NotAGammaPoset, UnsupportedFamily
from pstrict.gamma import (
    BoundAssignment,
    build_gamma,
    build_hat_B,
    extend_restriction,
    fixed_elements,
    hat_gamma_space,
    is_column_adjacent,
    gap_fixed_elements,
    specialized_gamma,
)
from pstrict.labelings import RestrictionFunction, global_restriction, global_space
from pstrict.poset import chain, full_shape, product_of_chains, skew_shape
from pstrict.qpartitions import delta_epsilon_space, hat_space

from conftest import bounded_instances, diamond, global_instances


def gamma_oracle(P, R):
    """Transitive reduction of the relations generated by same-element steps
    and by ``(p1, R(p1)_{<k2}) < (p2, k2)`` along covers of ``P``."""
    elems = [(p, k) for p in P for k in R.star(p)]
    es = set(elems)
    rel = set()
    for p in P:
        rs = R(p)
        for t in range(len(rs) - 2):
            rel.add(((p, rs[t + 1]), (p, rs[t])))
    for p1, p2 in P.covers():
        for k2 in R.star(p2):
            k1 = R.below(p1, k2)
            if k1 is not None and (p1, k1) in es:
                rel.add(((p1, k1), (p2, k2)))
    closure = set(rel)
    while True:
        extra = {(a, d) for a, b in closure for c, d in closure if b == c} - closure
        if not extra:
            break
        closure |= extra
    return {(a, b) for a, b in closure if not any((a, c) in closure and (c, b) in closure for c in es)}


def test_extend_restriction_examples():
    P = chain(2)
    R = RestrictionFunction({1: [1, 2], 2: [2, 3]})
    Rh = extend_restriction(P, R)
    assert Rh(1) == (-1, 1, 2, 4) and Rh(2) == (0, 2, 3, 5)
    P1 = chain(1)
    assert extend_restriction(P1, RestrictionFunction({1: [1]}))(1) == (0, 1, 2)


def test_hat_B_full_shape():
    P = chain(1)
    G, B = build_hat_B(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]}))
    assert B.values == {(1, 0): 2, (1, 2): 0}
    assert set(G.elements) == {(1, 0), (1, 1), (1, 2)}


def test_skew_chain_bounds():
    P = chain(3)
    shape = skew_shape((4, 4, 3), (2, 1))
    assert shape.u == {1: 2, 2: 1, 3: 0} and shape.v == {1: 0, 2: 0, 3: 1}
    R = global_restriction(P, shape, 5)
    G, B = build_hat_B(P, shape, R)
    Rh = G.restriction
    for p in P:
        assert B.values[(p, Rh(p)[0])] == 4 - shape.u[p]
        assert B.values[(p, Rh(p)[-2])] == shape.v[p]


def test_diamond_chain_cover():
    P = diamond()
    R = RestrictionFunction({"a": [1, 3, 4], "b": [2, 3, 5, 6], "c": [2, 4, 5], "d": [3, 6, 7]})
    G = build_gamma(P, R)
    assert (("a", 3), ("a", 1)) in G.cover_set()


def test_diamond_cover_from_lower_value():
    P = diamond()
    R = RestrictionFunction({"a": [0, 1, 3, 4], "b": [1, 2, 3, 5], "c": [1, 2, 4], "d": [2, 3, 6]})
    G = build_gamma(P, R)
    assert (("b", 1), ("d", 2)) in G.cover_set()


@given(global_instances(max_size=4, max_ell=2, max_q=6))
@settings(max_examples=60, deadline=None)
def test_gamma_covers_match_reduction_oracle(S):
    R = extend_restriction(S.poset, S.R)
    G = build_gamma(S.poset, R)
    assert G.cover_set() == gamma_oracle(S.poset, R)


@given(bounded_instances(max_size=4, max_ell=2, max_label=5))
@settings(max_examples=40, deadline=None)
def test_gamma_covers_match_oracle_bounded(S):
    G = build_gamma(S.poset, S.R)
    assert G.cover_set() == gamma_oracle(S.poset, S.R)


def test_gamma_bar_covers():
    P = diamond()
    q = 4
    Rbar = RestrictionFunction({p: range(0, q + 2) for p in P})
    G = build_gamma(P, Rbar)
    expected = {((p, k + 1), (p, k)) for p in P for k in range(q)}
    expected |= {((a, k), (b, k + 1)) for a, b in P.covers() for k in range(q)}
    assert G.cover_set() == expected
    assert G.cover_set() == gamma_oracle(P, Rbar)


def test_fixed_elements_single():
    P = chain(1)
    G, B = build_hat_B(P, full_shape(P, 2), RestrictionFunction({1: [1, 2]}))
    assert fixed_elements(G, B) == {(1, 0), (1, 2)}


def test_gap_fixed_elements_on_gap_row():
    P = chain(7)
    shape = skew_shape((4, 4, 4, 4, 2, 2, 2), (2, 2, 2))
    R = global_restriction(P, shape, 5)
    G, B = build_hat_B(P, shape, R)
    exact = fixed_elements(G, B)
    gaps = gap_fixed_elements(P, R)
    assert (4, 2) in gaps and (4, 2) in exact
    assert gaps <= exact


@given(bounded_instances(max_size=3, max_ell=2, max_label=5))
@settings(max_examples=40, deadline=None)
def test_gap_fixed_elements_are_fixed(S):
    Q = hat_gamma_space(S)
    assert gap_fixed_elements(S.poset, S.R) <= fixed_elements(Q.poset, Q.bounds)


def test_column_adjacent_regression():
    P = chain(1)
    G, B = build_hat_B(P, full_shape(P, 1), RestrictionFunction({1: [1, 3]}))
    assert is_column_adjacent(G, B)


def test_column_adjacent_global_shapes():
    for S in [global_space(chain(2), 2, 3), global_space(diamond(), 2, 4)]:
        Q = hat_gamma_space(S)
        assert is_column_adjacent(Q.poset, Q.bounds)


def test_column_adjacent_rejects_non_gamma():
    Q = diamond()
    B = BoundAssignment({"a": 0, "d": 1}, 1)
    with pytest.raises(NotAGammaPoset):
        is_column_adjacent(Q, B)


def test_unknown_family():
    with pytest.raises(UnsupportedFamily):
        specialized_gamma("nope")


def _target_space(sg):
    if all(sg.delta[x] == sg.ell for x in sg.target) and all(sg.epsilon[x] == 0 for x in sg.target):
        return hat_space(sg.target, sg.ell)
    return delta_epsilon_space(sg.target, sg.delta, sg.epsilon, sg.ell)


def check_specialization(sg):
    L = sg.labeling_space
    Q = hat_gamma_space(L)
    G = Q.poset
    free = [G.elements[i] for i in Q.free_order]
    emap = sg.element_map
    assert sorted(map(repr, free)) == sorted(map(repr, emap))
    # order isomorphism of the free part onto the target
    for x, y in itertools.product(free, free):
        assert G.less(x, y) == sg.target.less(emap[x], emap[y])
    # Q-partitions restrict bijectively onto the bounded target set
    T = _target_space(sg)
    got = {tuple(sorted((repr(emap[x]), s[x]) for x in free)) for s in Q}
    want = {tuple(sorted((repr(x), t[x]) for x in sg.target)) for t in T}
    assert got == want
    assert Q.count() == T.count()


@pytest.mark.parametrize("n, ell", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_flag_two_four_is_triangle(n, ell):
    check_specialization(specialized_gamma("flag-two-four", n=n, ell=ell))


@pytest.mark.parametrize("n, ell", [(1, 2), (2, 1), (2, 2), (3, 2)])
def test_staircase_flag_is_rectangle_with_bounds(n, ell):
    check_specialization(specialized_gamma("staircase-flag", n=n, ell=ell))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symplectic_staircase_is_ne_triangle(n):
    check_specialization(specialized_gamma("symplectic-staircase", n=n))


@pytest.mark.parametrize(
    "P, q, ell",
    [(chain(2), 4, 2), (chain(3), 5, 1), (diamond(), 5, 2), (product_of_chains((2, 2)), 5, 1)],
)
def test_graded_global_is_product(P, q, ell):
    check_specialization(specialized_gamma("graded-global-q", poset=P, q=q, ell=ell))
