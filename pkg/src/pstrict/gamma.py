"""The poset Gamma(P, R) of (element, label) pairs, its extension by two
sentinel labels per element, and the boundary assignment fixing them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import default_cap
from .errors import InvalidBounds, InvalidParameter, NotAGammaPoset, UnsupportedFamily
from .labelings import LabelingSpace, RestrictionFunction, restriction_from_bounds
from .poset import (
    ConvexShape,
    Poset,
    chain,
    full_shape,
    ne_triangle,
    poset_times_chain,
    rank_info,
    triangle,
)


class GammaPoset(Poset):
    """``Gamma(P, R)``: elements ``(p, k)`` with ``k`` in ``R(p)`` minus its max.

    Covers:
      * ``(p, k1) < (p, k2)`` when ``k1`` is the successor of ``k2`` in ``R(p)``;
      * ``(p1, k1) < (p2, k2)`` when ``p1 < p2`` is a cover,
        ``k1 = R(p1)_{<k2}`` is not ``max R(p1)``, and no larger ``k`` in
        ``R(p2)`` has the same predecessor ``k1`` in ``R(p1)``.
    """

    def __init__(self, base: Poset, R: RestrictionFunction):
        elems = [(p, k) for p in base.elements for k in R.star(p)]
        covers = []
        for p in base.elements:
            rs = R(p)
            for t in range(len(rs) - 2):
                covers.append(((p, rs[t + 1]), (p, rs[t])))
        for p1, p2 in base.covers():
            r1, r2 = R(p1), R(p2)
            top1 = r1[-1]
            for k2 in R.star(p2):
                k1 = R.below(p1, k2)
                if k1 is None or k1 == top1:
                    continue
                if any(R.below(p1, k) == k1 for k in r2 if k > k2):
                    continue
                covers.append(((p1, k1), (p2, k2)))
        super().__init__(elems, covers, name="Gamma")
        self.base = base
        self.restriction = R


def build_gamma(P: Poset, R: RestrictionFunction) -> GammaPoset:
    return GammaPoset(P, R)


def extend_restriction(P: Poset, R: RestrictionFunction) -> RestrictionFunction:
    """Add ``min - h~(p)`` and ``max + h(p)`` to each ``R(p)``, with min and max over all of ``R``."""
    support = R.support()
    lo, hi = support[0], support[-1]
    sets = {p: tuple(R(p)) + (lo - P.h_tilde(p), hi + P.h(p)) for p in P}
    return RestrictionFunction(sets, kind="hat")


@dataclass(frozen=True)
class BoundAssignment:
    """Fixed values on a subset of a poset, all within ``[0, ell]``."""

    values: dict
    ell: int

    def domain(self) -> set:
        return set(self.values)

    def validate(self, Q: Poset) -> "BoundAssignment":
        for x, val in self.values.items():
            if x not in Q:
                raise InvalidBounds(f"bound on unknown element {x!r}")
            if not 0 <= val <= self.ell:
                raise InvalidBounds(f"bound {val} at {x!r} outside [0, {self.ell}]")
        for x in Q.minimal() + Q.maximal():
            if x not in self.values:
                raise InvalidBounds(f"extremal element {x!r} is not bounded")
        for x in self.values:
            for y in self.values:
                if Q.less(x, y) and self.values[x] > self.values[y]:
                    raise InvalidBounds(f"bounds decrease along {x!r} < {y!r}")
        return self


def build_hat_B(P: Poset, shape: ConvexShape, R: RestrictionFunction) -> tuple[GammaPoset, BoundAssignment]:
    """``Gamma(P, R^)`` with ``(p, min R^(p)*) -> ell - u(p)`` and ``(p, max R^(p)*) -> v(p)``."""
    Rh = extend_restriction(P, R)
    G = build_gamma(P, Rh)
    vals = {}
    for p in P:
        star = Rh.star(p)
        vals[(p, star[0])] = shape.ell - shape.lo(p)
        vals[(p, star[-1])] = shape.v.get(p, 0)
    return G, BoundAssignment(vals, shape.ell).validate(G)


def hat_gamma_space(L: LabelingSpace):
    """The Q-partition space ``A^{B^}(Gamma(P, R^))`` matched with ``L``; cached on ``L``."""
    from .qpartitions import QSpace

    if L._gamma_cache is None:
        G, B = build_hat_B(L.poset, L.shape, L.R)
        L._gamma_cache = QSpace(G, B)
    return L._gamma_cache


def fixed_elements(Q: Poset, B: BoundAssignment, cap: int | None = None) -> set:
    """Elements whose value is the same in every Q-partition of ``A^B(Q)``."""
    from .qpartitions import QSpace

    space = QSpace(Q, B)
    first = None
    varying = set()
    for sigma in space.enumerate(default_cap() if cap is None else cap):
        if first is None:
            first = sigma.values
            continue
        for t, (x, y) in enumerate(zip(first, sigma.values)):
            if x != y:
                varying.add(t)
    if first is None:
        return set()
    return {Q.elements[t] for t in range(len(Q)) if t not in varying}


def gap_fixed_elements(P: Poset, R: RestrictionFunction) -> set:
    """Cheap sufficient test: ``(p, k)`` is fixed when ``k`` is in ``R(p)`` and ``k + 1`` is not."""
    out = set()
    for p in P:
        rs = set(R(p))
        for k in R.star(p):
            if k + 1 not in rs:
                out.add((p, k))
    return out


def is_column_adjacent(Q: Poset, B: BoundAssignment, fixed: set | None = None) -> bool:
    """Every cover between non-fixed elements changes the label by exactly one."""
    if not all(isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], int) for x in Q):
        raise NotAGammaPoset("elements must be (p, k) pairs")
    if fixed is None:
        fixed = fixed_elements(Q, B)
    for (p1, k1), (p2, k2) in Q.covers():
        if (p1, k1) in fixed or (p2, k2) in fixed:
            continue
        if abs(k2 - k1) != 1:
            return False
    return True


@dataclass(frozen=True)
class SpecializedGamma:
    """A family where ``Gamma(P, R^)`` minus its fixed part is a familiar poset.

    ``element_map`` sends each free ``(p, k)`` to the target poset;
    ``delta`` and ``epsilon`` give per-element upper and lower bounds on the
    target, with ``ell`` the global bound.
    """

    family: str
    labeling_space: LabelingSpace
    target: Poset
    element_map: dict
    ell: int
    delta: dict
    epsilon: dict


def specialized_gamma(family: str, **params) -> SpecializedGamma:
    """Known isomorphisms of the free part of ``Gamma`` onto standard posets.

    Families and parameters:
      * ``graded-global-q``: ``poset`` (graded), ``q``, ``ell``; target ``P x [q-n-1]``.
      * ``flag-two-four``: ``n``, ``ell``; target ``triangle n``.
      * ``staircase-flag``: ``n``, ``ell``; target ``[n] x [ell]`` with ``delta = n``, ``epsilon(i, j) = i - 1``.
      * ``symplectic-staircase``: ``n``; target ``ne_triangle n`` with ``delta = min(j, n)``, ``epsilon(i, j) = i - 1``.
    """
    if family == "graded-global-q":
        P = params["poset"]
        q, ell = int(params["q"]), int(params["ell"])
        info = rank_info(P)
        if not info.graded:
            raise InvalidParameter("poset must be graded")
        n = info.max_rank
        if q - n - 1 < 1:
            raise InvalidParameter("q must exceed rank + 1")
        shape = full_shape(P, ell)
        R = restriction_from_bounds(P, shape, 1, q, kind="global", q=q)
        L = LabelingSpace(P, shape, R)
        target = poset_times_chain(P, q - n - 1)
        emap = {}
        for p in P:
            for k in R.star(p):
                emap[(p, k)] = _pair(target, p, q - n + P.h(p) - k - 1)
        return _finish(family, L, target, emap, ell, {x: ell for x in target}, {x: 0 for x in target})
    if family == "flag-two-four":
        n, ell = int(params["n"]), int(params["ell"])
        P = chain(n)
        shape = full_shape(P, ell)
        R = restriction_from_bounds(P, shape, 1, {i: 2 * i for i in P})
        L = LabelingSpace(P, shape, R)
        target = triangle(n)
        emap = {(i, k): (i, n - k + i) for i in P for k in R.star(i)}
        return _finish(family, L, target, emap, ell, {x: ell for x in target}, {x: 0 for x in target})
    if family == "staircase-flag":
        n, ell = int(params["n"]), int(params["ell"])
        P = chain(n)
        shape = ConvexShape(n, {i: 0 for i in P}, {i: i - 1 for i in P})
        R = restriction_from_bounds(P, shape, 1, {i: ell + i for i in P})
        L = LabelingSpace(P, shape, R)
        target = poset_times_chain(P, ell)
        emap = {(i, k): (i, ell + i - k) for i in P for k in R.star(i)}
        return _finish(family, L, target, emap, n, {x: n for x in target}, {x: x[0] - 1 for x in target})
    if family == "symplectic-staircase":
        n = int(params["n"])
        P = chain(n)
        shape = ConvexShape(n, {i: 0 for i in P}, {i: i - 1 for i in P})
        R = restriction_from_bounds(P, shape, {i: 2 * i - 1 for i in P}, 2 * n)
        L = LabelingSpace(P, shape, R)
        target = ne_triangle(n)
        emap = {(i, k): (i, 2 * n - 1 + i - k) for i in P for k in R.star(i)}
        delta = {(i, j): min(j, n) for i, j in target}
        eps = {(i, j): i - 1 for i, j in target}
        return _finish(family, L, target, emap, n, delta, eps)
    raise UnsupportedFamily(f"no specialization for family {family!r}")


def _pair(target: Poset, p, j):
    if isinstance(p, tuple) and target.chain_dims is not None and len(target.chain_dims) > 1:
        return p + (j,)
    return (p, j)


def _finish(family, L, target, emap, ell, delta, eps) -> SpecializedGamma:
    if sorted(map(repr, emap.values())) != sorted(map(repr, target.elements)):
        raise InvalidParameter(f"{family}: element map is not onto the target")
    return SpecializedGamma(family, L, target, emap, ell, delta, eps)
