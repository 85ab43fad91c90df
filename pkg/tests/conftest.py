"""Shared fixtures, brute-force oracles and hypothesis strategies."""

import itertools
import sys

import pytest
from hypothesis import strategies as st

from pstrict.errors import EmptyRestriction
from pstrict.labelings import LabelingSpace, global_restriction, restriction_from_bounds
from pstrict.poset import ConvexShape, Poset, build_poset, product_of_chains


def diamond() -> Poset:
    return build_poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def y_poset() -> Poset:
    """Stem ``a < b`` with two arms ``c`` and ``d`` above ``b``."""
    return build_poset("abcd", [("a", "b"), ("b", "c"), ("b", "d")])


def skew_chain_shape() -> ConvexShape:
    return ConvexShape(4, {1: 2, 2: 1, 3: 0}, {1: 0, 2: 0, 3: 1})


def y_convex_shape() -> ConvexShape:
    return ConvexShape(5, {"a": 4, "b": 1, "c": 0, "d": 1}, {"a": 0, "b": 0, "c": 0, "d": 1})


@pytest.fixture
def diamond_poset():
    return diamond()


@pytest.fixture
def y():
    return y_poset()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


# brute-force oracles, written against the definitions only

def brute_valid(P: Poset, shape: ConvexShape, R, lab: dict) -> bool:
    """The three labeling conditions checked over all comparable pairs."""
    for (p, i), k in lab.items():
        if k not in R(p):
            return False
        if (p, i + 1) in lab and lab[(p, i + 1)] < k:
            return False
    for (p1, i1), k1 in lab.items():
        for (p2, i2), k2 in lab.items():
            if i1 == i2 and p1 != p2 and P.less(p1, p2) and not k1 < k2:
                return False
    return True


def brute_labelings(P: Poset, shape: ConvexShape, R) -> set:
    """All labelings as frozensets of ``((p, i), k)`` by exhaustive product."""
    cells = [(p, i) for p in P for i in shape.fiber(p)]
    out = set()
    for vals in itertools.product(*[R(p) for p, _ in cells]):
        lab = dict(zip(cells, vals))
        if brute_valid(P, shape, R, lab):
            out.add(frozenset(lab.items()))
    return out


def as_cellset(f) -> frozenset:
    return frozenset(f.as_dict().items())


def brute_bk(f, k: int) -> dict:
    """``rho_k`` from the literal definition of raisable and lowerable labels.

    A label at ``(p, i)`` is raisable (lowerable) when some labeling equal
    to ``f`` off the fiber of ``p`` is larger (smaller) at ``(p, i)``.
    """
    S = f.space
    P, shape, R = S.poset, S.shape, S.R
    lab = f.as_dict()
    out = dict(lab)
    for p in P:
        rs = R(p)
        if k not in rs or k == rs[-1]:
            continue
        kp = R.above(p, k)
        fiber = list(shape.fiber(p))
        others = {c: v for c, v in lab.items() if c[0] != p}
        alts = []
        for vals in itertools.combinations_with_replacement(rs, len(fiber)):
            g = dict(others)
            g.update({(p, i): x for i, x in zip(fiber, vals)})
            if brute_valid(P, shape, R, g):
                alts.append(dict(zip(fiber, vals)))
        raisable = [i for i in fiber if lab[(p, i)] == k and any(a[i] > k for a in alts)]
        lowerable = [i for i in fiber if lab[(p, i)] == kp and any(a[i] < kp for a in alts)]
        free = sorted(raisable + lowerable)
        b = len(lowerable)
        for t, i in enumerate(free):
            out[(p, i)] = k if t < b else kp
    return out


# hypothesis strategies

@st.composite
def small_posets(draw, max_size=4):
    n = draw(st.integers(1, max_size))
    rel = set()
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rel.add((i, j))
    # transitive closure then reduction
    closure = set(rel)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    covers = [
        (a, b) for a, b in closure if not any((a, c) in closure and (c, b) in closure for c in range(n))
    ]
    names = [f"x{i}" for i in range(n)]
    return Poset(names, [(names[a], names[b]) for a, b in covers])


@st.composite
def convex_shapes(draw, P: Poset, max_ell=3):
    ell = draw(st.integers(1, max_ell))
    raw_u = {p: draw(st.integers(0, ell)) for p in P}
    raw_v = {p: draw(st.integers(0, ell)) for p in P}
    u = {p: max(raw_u[x] for x in P if P.leq(p, x)) for p in P}
    v = {p: max(raw_v[x] for x in P if P.leq(x, p)) for p in P}
    for p in P:
        if u[p] + v[p] >= ell:
            v[p] = 0
            u[p] = 0
    # zeroing may break monotonicity; rebuild and fall back to the full shape
    shape = ConvexShape(ell, u, v)
    try:
        shape.validate(P)
    except Exception:
        shape = ConvexShape(ell, {p: 0 for p in P}, {p: 0 for p in P})
    return shape


@st.composite
def global_instances(draw, max_size=4, max_ell=3, max_q=6):
    P = draw(small_posets(max_size))
    shape = draw(convex_shapes(P, max_ell))
    q = draw(st.integers(1, max_q))
    try:
        R = global_restriction(P, shape, q)
    except EmptyRestriction:
        R = global_restriction(P, shape, q + len(P))
    return LabelingSpace(P, shape, R)


@st.composite
def bounded_instances(draw, max_size=4, max_ell=3, max_label=6):
    P = draw(small_posets(max_size))
    shape = draw(convex_shapes(P, max_ell))
    a = {p: draw(st.integers(1, 3)) for p in P}
    b = {p: a[p] + draw(st.integers(0, max_label - 1)) for p in P}
    try:
        R = restriction_from_bounds(P, shape, a, b)
    except EmptyRestriction:
        R = global_restriction(P, shape, max_label + len(P))
    return LabelingSpace(P, shape, R)


@st.composite
def explicit_instances(draw, max_size=3, max_ell=2, max_label=6):
    """Arbitrary (possibly inconsistent) restriction sets."""
    from pstrict.labelings import RestrictionFunction

    P = draw(small_posets(max_size))
    shape = draw(convex_shapes(P, max_ell))
    sets = {p: draw(st.sets(st.integers(1, max_label), min_size=1, max_size=4)) for p in P}
    return P, shape, RestrictionFunction(sets)


def product_2x2() -> Poset:
    return product_of_chains((2, 2))
