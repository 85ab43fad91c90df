"""P-strict labelings of convex subposets of P x [ell] and their dynamics.

A labeling is strictly increasing on each layer ``{(p, i) : p in P}``,
weakly increasing along each fiber ``{(p, i) : 1 <= i <= ell}`` and takes
values in a per-element restriction set ``R(p)``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .config import default_cap
from .errors import (
    EmptyRestriction,
    InconsistentRestriction,
    InvalidLabeling,
    InvalidParameter,
    InvalidResult,
    NotFullShape,
    StateSpaceCap,
    UnknownElement,
    UnsupportedRestriction,
)
from .poset import ConvexShape, Poset, antipode, full_shape


class RestrictionFunction:
    """Finite label sets ``R(p)`` with successor and predecessor lookups.

    Args:
        sets: map from element to an iterable of integer labels.
        kind: ``"explicit"``, ``"global"``, ``"bounds"`` or ``"hat"``.
        q: the global bound when ``kind == "global"``.
    """

    def __init__(self, sets: Mapping, kind: str = "explicit", q: int | None = None):
        self.sets: dict = {p: tuple(sorted(set(int(k) for k in ks))) for p, ks in sets.items()}
        self.kind = kind
        self.q = q

    def __call__(self, p) -> tuple[int, ...]:
        try:
            return self.sets[p]
        except KeyError:
            raise UnknownElement(f"restriction has no entry for {p!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RestrictionFunction):
            return NotImplemented
        return self.sets == other.sets

    def __repr__(self) -> str:
        return f"RestrictionFunction({self.kind}, {self.sets!r})"

    def star(self, p) -> tuple[int, ...]:
        """``R(p)`` without its largest label."""
        return self(p)[:-1]

    def above(self, p, k: int) -> int | None:
        """Least label of ``R(p)`` strictly above ``k``."""
        rs = self(p)
        j = bisect.bisect_right(rs, k)
        return rs[j] if j < len(rs) else None

    def below(self, p, k: int) -> int | None:
        """Greatest label of ``R(p)`` strictly below ``k``."""
        rs = self(p)
        j = bisect.bisect_left(rs, k)
        return rs[j - 1] if j > 0 else None

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*[set(v) for v in self.sets.values()])))


def explicit_restriction(sets: Mapping) -> RestrictionFunction:
    return RestrictionFunction(sets)


class LabelingSpace:
    """The set ``L_{P x [ell]^v_u}(R)`` with precomputed index tables.

    Labelings are stored as one tuple per element (in declared order), the
    tuple listing the labels of the fiber from its lowest position upward.
    """

    def __init__(self, poset: Poset, shape: ConvexShape, restriction: RestrictionFunction):
        shape.validate(poset)
        self.poset = poset
        self.shape = shape
        self.R = restriction
        n = len(poset)
        self.ell = shape.ell
        self.lo = tuple(shape.lo(p) + 1 for p in poset.elements)
        self.hi = tuple(shape.hi(p) for p in poset.elements)
        rs = []
        for p in poset.elements:
            r = restriction(p)
            if not r:
                raise EmptyRestriction(f"R({p!r}) is empty")
            rs.append(r)
        self.Rs: tuple[tuple[int, ...], ...] = tuple(rs)
        self.Rset = tuple(frozenset(r) for r in rs)
        self.nxt = tuple({r[j]: r[j + 1] for j in range(len(r) - 1)} for r in rs)
        self.up = poset.up
        self.down = poset.down
        self.cells_idx: tuple[tuple[int, int], ...] = tuple(
            (j, i) for j in poset.linext for i in range(self.lo[j], self.hi[j] + 1)
        )
        support = restriction.support()
        self.support_min, self.support_max = support[0], support[-1]
        self._gamma_cache = None
        self.n = n

    def __repr__(self) -> str:
        return f"<LabelingSpace {self.poset!r} ell={self.ell} R={self.R.kind}>"

    # cell access
    def cells(self) -> list[tuple]:
        return [(self.poset.elements[j], i) for j, i in self.cells_idx]

    def in_fiber(self, j: int, i: int) -> bool:
        return self.lo[j] <= i <= self.hi[j]

    def violations(self, fibers) -> list[str]:
        """Every violated labeling condition, empty when valid."""
        out = []
        if len(fibers) != self.n:
            return ["wrong number of fibers"]
        for j in range(self.n):
            fib = fibers[j]
            p = self.poset.elements[j]
            if len(fib) != self.hi[j] - self.lo[j] + 1 and not (self.hi[j] < self.lo[j] and not fib):
                out.append(f"fiber of {p!r} has wrong length")
                continue
            for x in fib:
                if x not in self.Rset[j]:
                    out.append(f"label {x} at {p!r} not in R")
            for t in range(len(fib) - 1):
                if fib[t] > fib[t + 1]:
                    out.append(f"fiber of {p!r} decreases")
        if out:
            return out
        for a, b in self.poset.cover_pairs:
            start = max(self.lo[a], self.lo[b])
            stop = min(self.hi[a], self.hi[b])
            for i in range(start, stop + 1):
                if fibers[a][i - self.lo[a]] >= fibers[b][i - self.lo[b]]:
                    out.append(
                        f"layer {i}: {self.poset.elements[a]!r} < {self.poset.elements[b]!r} not strict"
                    )
        return out

    def is_valid(self, fibers) -> bool:
        return not self.violations(fibers)

    def labeling(self, data) -> "PStrictLabeling":
        """Build a validated labeling from fibers or a ``{(p, i): k}`` map."""
        if isinstance(data, Mapping):
            fibers = []
            for j, p in enumerate(self.poset.elements):
                try:
                    fibers.append(tuple(int(data[(p, i)]) for i in range(self.lo[j], self.hi[j] + 1)))
                except KeyError as exc:
                    raise InvalidLabeling(f"missing label for cell {exc.args[0]!r}") from None
            extra = set(data) - set(self.cells())
            if extra:
                raise InvalidLabeling(f"labels outside the shape: {sorted(map(repr, extra))}")
        else:
            fibers = [tuple(int(x) for x in fib) for fib in data]
        fibers = tuple(fibers)
        bad = self.violations(fibers)
        if bad:
            raise InvalidLabeling("; ".join(bad))
        return PStrictLabeling(fibers, self)

    # extremal labelings by one sweep over the cells
    def _least(self, pin: tuple[int, int, int] | None = None):
        cur = [[0] * max(0, self.hi[j] - self.lo[j] + 1) for j in range(self.n)]
        for j, i in self.cells_idx:
            off = i - self.lo[j]
            lb = cur[j][off - 1] if off > 0 else None
            for a in self.down[j]:
                if self.lo[a] <= i <= self.hi[a]:
                    x = cur[a][i - self.lo[a]] + 1
                    lb = x if lb is None or x > lb else lb
            if pin is not None and pin[0] == j and pin[1] == i:
                lb = pin[2] if lb is None or pin[2] > lb else lb
            rs = self.Rs[j]
            t = 0 if lb is None else bisect.bisect_left(rs, lb)
            if t == len(rs):
                return None
            cur[j][off] = rs[t]
        return cur

    def _greatest(self):
        cur = [[0] * max(0, self.hi[j] - self.lo[j] + 1) for j in range(self.n)]
        for j, i in reversed(self.cells_idx):
            off = i - self.lo[j]
            ub = cur[j][off + 1] if i < self.hi[j] else None
            for b in self.up[j]:
                if self.lo[b] <= i <= self.hi[b]:
                    x = cur[b][i - self.lo[b]] - 1
                    ub = x if ub is None or x < ub else ub
            rs = self.Rs[j]
            t = len(rs) if ub is None else bisect.bisect_right(rs, ub)
            if t == 0:
                return None
            cur[j][off] = rs[t - 1]
        return cur

    def witness(self, p, i: int, k: int):
        """A labeling with label ``k`` at ``(p, i)``, or None if none exists.

        Constraints are closed under pointwise minimum, so the least labeling
        with ``f(p, i) >= k`` exists whenever any does, and it hits ``k``
        exactly when some labeling does.
        """
        j = self.poset.idx(p)
        g = self._least((j, i, k))
        if g is None or g[j][i - self.lo[j]] != k:
            return None
        return PStrictLabeling(tuple(tuple(x) for x in g), self)

    def __iter__(self) -> Iterator["PStrictLabeling"]:
        return self.enumerate()

    def enumerate(self, cap: int | None = None) -> Iterator["PStrictLabeling"]:
        """All labelings, lexicographic in (linear extension x position) order.

        Each cell ranges up to the greatest labeling's value there, which
        guarantees the depth-first search never reaches a dead end.
        """
        cap = default_cap() if cap is None else cap
        top = self._greatest()
        if top is None:
            return
        cur = [[0] * max(0, self.hi[j] - self.lo[j] + 1) for j in range(self.n)]
        cells = self.cells_idx
        ncell = len(cells)
        lo, hi_, down, Rs = self.lo, self.hi, self.down, self.Rs
        count = 0

        def rec(c):
            nonlocal count
            if c == ncell:
                count += 1
                if count > cap:
                    raise StateSpaceCap(f"more than {cap} labelings")
                yield PStrictLabeling(tuple(tuple(x) for x in cur), self)
                return
            j, i = cells[c]
            off = i - lo[j]
            lb = cur[j][off - 1] if off > 0 else None
            for a in down[j]:
                if lo[a] <= i <= hi_[a]:
                    x = cur[a][i - lo[a]] + 1
                    if lb is None or x > lb:
                        lb = x
            ub = top[j][off]
            rs = Rs[j]
            t = 0 if lb is None else bisect.bisect_left(rs, lb)
            row = cur[j]
            while t < len(rs) and rs[t] <= ub:
                row[off] = rs[t]
                yield from rec(c + 1)
                t += 1

        yield from rec(0)

    def count(self, cap: int | None = None) -> int:
        return sum(1 for _ in self.enumerate(cap))


@dataclass(frozen=True, order=True)
class PStrictLabeling:
    """A validated labeling; equality and order compare the label tuples only."""

    fibers: tuple
    space: LabelingSpace = field(compare=False, repr=False)

    def __call__(self, p, i: int) -> int:
        S = self.space
        j = S.poset.idx(p)
        if not S.in_fiber(j, i):
            raise InvalidParameter(f"cell {(p, i)!r} not in the shape")
        return self.fibers[j][i - S.lo[j]]

    def value(self, j: int, i: int) -> int | None:
        S = self.space
        if S.lo[j] <= i <= S.hi[j]:
            return self.fibers[j][i - S.lo[j]]
        return None

    def as_dict(self) -> dict:
        S = self.space
        return {
            (S.poset.elements[j], i): self.fibers[j][i - S.lo[j]]
            for j, i in S.cells_idx
        }

    def fiber(self, p) -> tuple[int, ...]:
        return self.fibers[self.space.poset.idx(p)]


def enumerate_labelings(P: Poset, shape: ConvexShape, R: RestrictionFunction, cap: int | None = None) -> list:
    return list(LabelingSpace(P, shape, R).enumerate(cap))


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    witnesses: dict  # (p, k) -> fiber position carrying k, or None

    @property
    def unwitnessed(self) -> list:
        return [pk for pk, pos in self.witnesses.items() if pos is None]


def is_consistent(P: Poset, shape: ConvexShape, R: RestrictionFunction) -> ConsistencyReport:
    """Whether every label of every ``R(p)`` occurs in some labeling."""
    S = LabelingSpace(P, shape, R)
    table = {}
    for j, p in enumerate(P.elements):
        for k in S.Rs[j]:
            pos = None
            for i in range(S.lo[j], S.hi[j] + 1):
                if S.witness(p, i, k) is not None:
                    pos = i
                    break
            table[(p, k)] = pos
    return ConsistencyReport(all(v is not None for v in table.values()), table)


def _as_map(P: Poset, x, name: str) -> dict:
    if isinstance(x, Mapping):
        missing = [p for p in P if p not in x]
        if missing:
            raise InvalidParameter(f"{name} has no value for {missing[0]!r}")
        return {p: int(x[p]) for p in P}
    if isinstance(x, int):
        return {p: x for p in P}
    seq = list(x)
    if len(seq) != len(P):
        raise InvalidParameter(f"{name} needs {len(P)} values")
    return {p: int(v) for p, v in zip(P.elements, seq)}


def restriction_from_bounds(P: Poset, shape: ConvexShape, a, b, kind: str = "bounds", q: int | None = None) -> RestrictionFunction:
    """Largest consistent restriction inside the intervals ``[a(p), b(p)]``.

    Unwitnessed labels never occur in any labeling, so deleting them keeps
    the labeling set and a single pruning pass already reaches the fixpoint;
    the loop re-checks anyway.
    """
    a = _as_map(P, a, "a")
    b = _as_map(P, b, "b")
    sets = {p: range(a[p], b[p] + 1) for p in P}
    for p in P:
        if a[p] > b[p]:
            raise EmptyRestriction(f"empty interval at {p!r}")
    while True:
        R = RestrictionFunction(sets, kind=kind, q=q)
        rep = is_consistent(P, shape, R)
        if rep.consistent:
            return R
        kept = {p: [k for k in R(p) if rep.witnesses[(p, k)] is not None] for p in P}
        empty = [p for p in P if not kept[p]]
        if empty:
            raise EmptyRestriction(f"no labeling exists; R({empty[0]!r}) becomes empty")
        sets = kept


def global_restriction(P: Poset, shape: ConvexShape, q: int) -> RestrictionFunction:
    """Consistent ``R^q`` induced by the bounds ``1 <= f <= q``."""
    return restriction_from_bounds(P, shape, 1, q, kind="global", q=q)


def global_space(P: Poset, shape: ConvexShape | int, q: int) -> LabelingSpace:
    if isinstance(shape, int):
        shape = full_shape(P, shape)
    return LabelingSpace(P, shape, global_restriction(P, shape, q))


def bounds_space(P: Poset, shape: ConvexShape | int, a, b) -> LabelingSpace:
    if isinstance(shape, int):
        shape = full_shape(P, shape)
    return LabelingSpace(P, shape, restriction_from_bounds(P, shape, a, b))


# Bender-Knuth involutions and promotion

def bender_knuth(f: PStrictLabeling, k: int, validate: bool = True) -> PStrictLabeling:
    """Apply the involution ``rho_k``.

    In each fiber with ``k`` in ``R(p)*`` the raisable ``k`` labels form a
    suffix of the ``k`` block and the lowerable ``R(p)_{>k}`` labels form a
    prefix of the next block; ``a`` of the first and ``b`` of the second
    are replaced by ``b`` copies of ``k`` followed by ``a`` copies of
    ``R(p)_{>k}``. All fibers are judged against the input labeling.
    """
    S = f.space
    fibers = f.fibers
    new = list(fibers)
    lo, hi = S.lo, S.hi
    for j in range(S.n):
        kp = S.nxt[j].get(k)
        if kp is None:
            continue
        fib = fibers[j]
        lo_j = lo[j]
        first_k = bisect.bisect_left(fib, k)
        first_kp = bisect.bisect_left(fib, kp, first_k)
        end_kp = bisect.bisect_right(fib, kp, first_kp)
        if first_k == end_kp:
            continue
        # raisable k labels, scanning back from the end of the k block
        a = 0
        t = first_kp - 1
        while t >= first_k:
            i = t + lo_j
            if any(lo[c] <= i <= hi[c] and fibers[c][i - lo[c]] <= kp for c in S.up[j]):
                break
            a += 1
            t -= 1
        b = 0
        t = first_kp
        while t < end_kp:
            i = t + lo_j
            if any(lo[c] <= i <= hi[c] and fibers[c][i - lo[c]] >= k for c in S.down[j]):
                break
            b += 1
            t += 1
        if a == b:
            continue
        start = first_kp - a
        out = list(fib)
        for t in range(start, start + b):
            out[t] = k
        for t in range(start + b, start + a + b):
            out[t] = kp
        new[j] = tuple(out)
    result = tuple(new)
    if validate:
        bad = S.violations(result)
        if bad:
            raise InvalidResult(f"rho_{k} produced an invalid labeling: {bad[0]}")
    return PStrictLabeling(result, S)


def promotion(f: PStrictLabeling, validate: bool = True) -> PStrictLabeling:
    """``Pro``: apply ``rho_k`` for ``k`` ascending over the label support."""
    S = f.space
    for k in range(S.support_min, S.support_max):
        f = bender_knuth(f, k, validate)
    return f


def promotion_inverse(f: PStrictLabeling, validate: bool = True) -> PStrictLabeling:
    S = f.space
    for k in range(S.support_max - 1, S.support_min - 1, -1):
        f = bender_knuth(f, k, validate)
    return f


def _global_q(S: LabelingSpace) -> int:
    if S.R.kind != "global" or S.R.q is None:
        raise UnsupportedRestriction("operation needs a global-bound restriction R^q")
    return S.R.q


def evacuation(f: PStrictLabeling) -> PStrictLabeling:
    """``(rho_1)(rho_2 rho_1)...(rho_{q-1}...rho_1)``, rightmost factor first."""
    q = _global_q(f.space)
    for m in range(q - 1, 0, -1):
        for k in range(1, m + 1):
            f = bender_knuth(f, k)
    return f


def dual_evacuation(f: PStrictLabeling) -> PStrictLabeling:
    """``(rho_{q-1})(rho_{q-2} rho_{q-1})...(rho_1...rho_{q-1})``, rightmost first."""
    q = _global_q(f.space)
    for m in range(1, q):
        for k in range(q - 1, m - 1, -1):
            f = bender_knuth(f, k)
    return f


def antipode_complement(f: PStrictLabeling) -> PStrictLabeling:
    """``f+``: swap labels of antipodal cells of the chain product ``P x [ell]``, then ``i -> q+1-i``."""
    S = f.space
    q = _global_q(S)
    if not S.shape.is_full():
        raise NotFullShape("f+ needs the full shape P x [ell]")
    P = S.poset
    new = []
    for p in P.elements:
        pa = P.idx(antipode(P, p))
        src = f.fibers[pa]
        new.append(tuple(q + 1 - src[S.ell - i] for i in range(1, S.ell + 1)))
    result = tuple(new)
    bad = S.violations(result)
    if bad:
        raise InvalidResult(f"f+ is not a labeling: {bad[0]}")
    return PStrictLabeling(result, S)


def check_restriction_consistent(P: Poset, shape: ConvexShape, R: RestrictionFunction) -> None:
    rep = is_consistent(P, shape, R)
    if not rep.consistent:
        raise InconsistentRestriction(f"labels never used: {rep.unwitnessed[:5]}")
