"""Order-preserving maps Q -> {0..ell} with prescribed boundary values,
together with piecewise-linear toggles, rowmotion and toggle-promotion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .config import default_cap
from .errors import (
    InvalidBounds,
    InvalidParameter,
    InvalidQPartition,
    InvalidResult,
    NotAGammaPoset,
    StateSpaceCap,
    ToggleOnFixedElement,
)
from .gamma import BoundAssignment
from .poset import HAT_ONE, HAT_ZERO, Poset, hat


class QSpace:
    """The set ``A^B(Q)`` of Q-partitions agreeing with ``B`` on its domain."""

    def __init__(self, poset: Poset, bounds: BoundAssignment):
        bounds.validate(poset)
        self.poset = poset
        self.bounds = bounds
        self.ell = bounds.ell
        n = len(poset)
        self.n = n
        self.fixed_idx = {poset.idx(x): v for x, v in bounds.values.items()}
        self.free_order: tuple[int, ...] = tuple(i for i in poset.linext if i not in self.fixed_idx)
        self.free_set = frozenset(self.free_order)
        # static range from the bounded elements above and below
        lo = [0] * n
        hi = [self.ell] * n
        for d, val in self.fixed_idx.items():
            for i in range(n):
                if (poset.above_mask[d] >> i) & 1:
                    lo[i] = max(lo[i], val)
                if (poset.below_mask[d] >> i) & 1:
                    hi[i] = min(hi[i], val)
        for d, val in self.fixed_idx.items():
            lo[d] = hi[d] = val
        self.static_lo = tuple(lo)
        self.static_hi = tuple(hi)

    def __repr__(self) -> str:
        return f"<QSpace {self.poset!r} ell={self.ell} bounded={len(self.fixed_idx)}>"

    def violations(self, values: Sequence[int]) -> list[str]:
        out = []
        if len(values) != self.n:
            return ["wrong number of values"]
        for i, v in enumerate(values):
            if not 0 <= v <= self.ell:
                out.append(f"value {v} at {self.poset.elements[i]!r} outside [0, {self.ell}]")
        for d, val in self.fixed_idx.items():
            if values[d] != val:
                out.append(f"value at {self.poset.elements[d]!r} differs from its bound {val}")
        for a, b in self.poset.cover_pairs:
            if values[a] > values[b]:
                out.append(f"decreases along {self.poset.elements[a]!r} < {self.poset.elements[b]!r}")
        return out

    def qpartition(self, data) -> "QPartition":
        if isinstance(data, Mapping):
            try:
                values = tuple(int(data[x]) for x in self.poset.elements)
            except KeyError as exc:
                raise InvalidQPartition(f"missing value for {exc.args[0]!r}") from None
        else:
            values = tuple(int(v) for v in data)
        bad = self.violations(values)
        if bad:
            raise InvalidQPartition("; ".join(bad))
        return QPartition(values, self)

    def __iter__(self) -> Iterator["QPartition"]:
        return self.enumerate()

    def enumerate(self, cap: int | None = None) -> Iterator["QPartition"]:
        """All members, lexicographic along the linear extension of free elements.

        ``static_hi`` is order-preserving on free elements, so any prefix of
        admissible values extends and the search has no dead ends.
        """
        cap = default_cap() if cap is None else cap
        if any(self.static_lo[i] > self.static_hi[i] for i in range(self.n)):
            return
        cur = list(self.static_lo)
        order = self.free_order
        m = len(order)
        down = self.poset.down
        shi = self.static_hi
        slo = self.static_lo
        count = 0

        def rec(c):
            nonlocal count
            if c == m:
                count += 1
                if count > cap:
                    raise StateSpaceCap(f"more than {cap} Q-partitions")
                yield QPartition(tuple(cur), self)
                return
            x = order[c]
            lb = slo[x]
            for y in down[x]:
                if cur[y] > lb:
                    lb = cur[y]
            for val in range(lb, shi[x] + 1):
                cur[x] = val
                yield from rec(c + 1)

        yield from rec(0)

    def count(self, cap: int | None = None) -> int:
        return sum(1 for _ in self.enumerate(cap))


@dataclass(frozen=True, order=True)
class QPartition:
    """A member of ``A^B(Q)``; values are listed in the declared element order."""

    values: tuple
    space: QSpace = field(compare=False, repr=False)

    def __getitem__(self, x) -> int:
        return self.values[self.space.poset.idx(x)]

    def as_dict(self) -> dict:
        return dict(zip(self.space.poset.elements, self.values))


def _toggle_idx(space: QSpace, values: list, x: int) -> None:
    P = space.poset
    if not P.up[x] or not P.down[x]:
        raise ToggleOnFixedElement(f"{P.elements[x]!r} is extremal")
    alpha = min(values[y] for y in P.up[x])
    beta = max(values[y] for y in P.down[x])
    values[x] = alpha + beta - values[x]


def toggle(sigma: QPartition, x) -> QPartition:
    """``tau_x``: reflect the value at ``x`` inside ``[max lower covers, min upper covers]``."""
    space = sigma.space
    i = space.poset.idx(x)
    if i in space.fixed_idx:
        raise ToggleOnFixedElement(f"{x!r} is in the domain of the bounds")
    vals = list(sigma.values)
    _toggle_idx(space, vals, i)
    return QPartition(tuple(vals), space)


def rowmotion(sigma: QPartition, linear_extension: Sequence | None = None) -> QPartition:
    """``Row = tau_{x1} ... tau_{xm}``: toggle free elements from the top of a linear extension down."""
    space = sigma.space
    if linear_extension is None:
        order = space.free_order
    else:
        order = tuple(space.poset.idx(x) for x in linear_extension)
        if sorted(order) != sorted(space.free_order):
            raise InvalidParameter("linear extension must list exactly the free elements")
    vals = list(sigma.values)
    for x in reversed(order):
        _toggle_idx(space, vals, x)
    return _checked(space, vals, "rowmotion")


def rowmotion_inverse(sigma: QPartition) -> QPartition:
    space = sigma.space
    vals = list(sigma.values)
    for x in space.free_order:
        _toggle_idx(space, vals, x)
    return _checked(space, vals, "inverse rowmotion")


def gamma_column(x) -> int:
    if not (isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], int)):
        raise NotAGammaPoset(f"element {x!r} is not a (p, k) pair")
    return x[1]


def _columns(space: QSpace, column: Callable) -> list[list[int]]:
    groups: dict = {}
    for x in space.free_order:
        groups.setdefault(column(space.poset.elements[x]), []).append(x)
    return [groups[k] for k in sorted(groups)]


def toggle_promotion(sigma: QPartition, column: Callable = gamma_column) -> QPartition:
    """``TogPro = ... tau_1 tau_0 tau_{-1} ...``: toggle whole columns, smallest column first.

    Elements of one column share no cover, so the order inside a column is
    irrelevant.
    """
    space = sigma.space
    vals = list(sigma.values)
    for col in _columns(space, column):
        for x in col:
            _toggle_idx(space, vals, x)
    return _checked(space, vals, "toggle-promotion")


def toggle_promotion_inverse(sigma: QPartition, column: Callable = gamma_column) -> QPartition:
    space = sigma.space
    vals = list(sigma.values)
    for col in reversed(_columns(space, column)):
        for x in col:
            _toggle_idx(space, vals, x)
    return _checked(space, vals, "inverse toggle-promotion")


def column_toggle(sigma: QPartition, k: int, column: Callable = gamma_column) -> QPartition:
    """``tau_k``: toggle every free element in column ``k``."""
    space = sigma.space
    vals = list(sigma.values)
    for x in space.free_order:
        if column(space.poset.elements[x]) == k:
            _toggle_idx(space, vals, x)
    return _checked(space, vals, f"tau_{k}")


def _checked(space: QSpace, vals: list, what: str) -> QPartition:
    bad = space.violations(vals)
    if bad:
        raise InvalidResult(f"{what} left A^B(Q): {bad[0]}")
    return QPartition(tuple(vals), space)


def hat_space(Q: Poset, ell: int) -> QSpace:
    """``A^ell(Q)`` realised on ``Q`` with bottom fixed at 0 and top at ``ell``."""
    Qh = hat(Q)
    return QSpace(Qh, BoundAssignment({HAT_ZERO: 0, HAT_ONE: ell}, ell))


def delta_epsilon_space(Q: Poset, delta: Mapping, epsilon: Mapping, ell: int) -> QSpace:
    """``A^delta_epsilon(Q)``: each ``x`` gets a private bottom fixed at ``epsilon(x)`` and top at ``delta(x)``."""
    elems = list(Q.elements)
    covers = Q.covers()
    vals = {}
    for x in Q.elements:
        lo, hi = ("0̂", x), ("1̂", x)
        elems += [lo, hi]
        covers += [(lo, x), (x, hi)]
        e, d = int(epsilon[x]), int(delta[x])
        if not 0 <= e <= d <= ell:
            raise InvalidBounds(f"need 0 <= epsilon <= delta <= ell at {x!r}")
        vals[lo] = e
        vals[hi] = d
    Qp = Poset(elems, covers, name=f"bounded({Q.name or 'Q'})")
    return QSpace(Qp, BoundAssignment(vals, ell))
