"""Bijections from P-strict labelings to Q-partitions.

``phi`` lands in ``A^{B^}(Gamma(P, R^))`` and intertwines promotion with
toggle-promotion; ``psi`` lands in ``A^{B-bar}(Gamma(P, R-bar))`` with
``R-bar(p) = {0, ..., q+1}``, and for a chain ``P`` its values read as a
Gelfand-Tsetlin pattern.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass

from .errors import InvalidGTPattern, NotAChainP, NotInDomain, RowOutOfRange, UnsupportedRestriction
from .gamma import BoundAssignment, build_gamma, hat_gamma_space
from .labelings import LabelingSpace, PStrictLabeling, RestrictionFunction
from .qpartitions import QPartition, QSpace

INF = float("inf")


def j_value(f: PStrictLabeling, p, k: int) -> int:
    """First fiber position of ``p`` whose label exceeds ``k``, or ``ell - v(p) + 1``."""
    S = f.space
    j = S.poset.idx(p)
    return S.lo[j] + bisect.bisect_right(f.fibers[j], k)


def _sigma_values(f: PStrictLabeling, Q: QSpace) -> tuple[int, ...]:
    S = f.space
    out = []
    for p, k in Q.poset.elements:
        j = S.poset.idx(p)
        out.append(S.ell + 1 - S.lo[j] - bisect.bisect_right(f.fibers[j], k))
    return tuple(out)


def phi(f: PStrictLabeling) -> QPartition:
    """``sigma(p, k) = ell + 1 - j(p, k)`` on ``Gamma(P, R^)``."""
    Q = hat_gamma_space(f.space)
    vals = _sigma_values(f, Q)
    bad = Q.violations(vals)
    if bad:
        raise NotInDomain(f"labeling maps outside A^B: {bad[0]}")
    return QPartition(vals, Q)


def phi_three_step(f: PStrictLabeling) -> QPartition:
    """Route through order ideals: extend ``f`` to all of ``P x [ell]``,
    send each layer to the ideal generated by its ``(p, label)`` pairs, and
    count the layers whose ideal misses ``(p, k)``.
    """
    S = f.space
    Q = hat_gamma_space(S)
    G = Q.poset
    Rh = G.restriction
    counts = [0] * len(G)
    for i in range(1, S.ell + 1):
        ideal = 0
        for j, p in enumerate(S.poset.elements):
            if i < S.lo[j]:
                label = Rh(p)[0]
            elif i > S.hi[j]:
                label = Rh(p)[-1]
            else:
                label = f.fibers[j][i - S.lo[j]]
            if (p, label) in G.index:
                g = G.index[(p, label)]
                ideal |= (1 << g) | G.below_mask[g]
        for g in range(len(G)):
            if not (ideal >> g) & 1:
                counts[g] += 1
    bad = Q.violations(counts)
    if bad:
        raise NotInDomain(f"three-step image outside A^B: {bad[0]}")
    return QPartition(tuple(counts), Q)


def _fibers_from_sigma(sigma: QPartition, S: LabelingSpace, labels_of) -> tuple:
    G = sigma.space.poset
    fibers = []
    for j, p in enumerate(S.poset.elements):
        labs = labels_of(p)
        size = S.hi[j] - S.lo[j] + 1
        v = S.ell - S.hi[j]
        fib: list[int] = []
        prev_gt = size
        for k in labs:
            gt = sigma[(p, k)] - v if (p, k) in G.index else 0
            n_k = prev_gt - gt
            if n_k < 0:
                raise NotInDomain(f"negative multiplicity for label {k} at {p!r}")
            fib.extend([k] * n_k)
            prev_gt = gt
        if prev_gt != 0 or len(fib) != size:
            raise NotInDomain(f"fiber of {p!r} has wrong length")
        fibers.append(tuple(fib))
    fibers = tuple(fibers)
    bad = S.violations(fibers)
    if bad:
        raise NotInDomain(f"preimage is not a labeling: {bad[0]}")
    return fibers


def phi_inverse(sigma: QPartition, L: LabelingSpace) -> PStrictLabeling:
    """Labeling with ``f(p, ell + 1 - i) = k`` for ``sigma(p, k) < i <= sigma(p, k-)``."""
    Q = hat_gamma_space(L)
    if sigma.space is not Q and sigma.space.poset != Q.poset:
        raise NotInDomain("Q-partition does not live on Gamma(P, R^) of this space")
    sig = QPartition(sigma.values, Q)
    bad = Q.violations(sig.values)
    if bad:
        raise NotInDomain(bad[0])
    Rh = Q.poset.restriction
    # min R^(p) is a sentinel below every label; skip it and the top sentinel
    return PStrictLabeling(_fibers_from_sigma(sig, L, lambda p: Rh(p)[1:-1]), L)


# psi and Gelfand-Tsetlin patterns

def _q_of(L: LabelingSpace) -> int:
    if L.R.kind != "global" or L.R.q is None:
        raise UnsupportedRestriction("psi needs a global-bound restriction R^q")
    return L.R.q


def psi_space(L: LabelingSpace) -> QSpace:
    """``A^{B-bar}(Gamma(P, R-bar))`` with ``(p, 0) -> ell - u(p)`` and ``(p, q) -> v(p)``."""
    q = _q_of(L)
    if getattr(L, "_psi_cache", None) is None:
        P = L.poset
        Rbar = RestrictionFunction({p: range(0, q + 2) for p in P}, kind="bar", q=q)
        G = build_gamma(P, Rbar)
        vals = {}
        for p in P:
            vals[(p, 0)] = L.shape.ell - L.shape.lo(p)
            vals[(p, q)] = L.shape.v.get(p, 0)
        L._psi_cache = QSpace(G, BoundAssignment(vals, L.ell))
    return L._psi_cache


def psi(f: PStrictLabeling) -> QPartition:
    Q = psi_space(f.space)
    vals = _sigma_values(f, Q)
    bad = Q.violations(vals)
    if bad:
        raise NotInDomain(f"labeling maps outside A^B-bar: {bad[0]}")
    return QPartition(vals, Q)


def psi_inverse(sigma: QPartition, L: LabelingSpace) -> PStrictLabeling:
    q = _q_of(L)
    Q = psi_space(L)
    if sigma.space is not Q and sigma.space.poset != Q.poset:
        raise NotInDomain("Q-partition does not live on Gamma(P, R-bar) of this space")
    sig = QPartition(sigma.values, Q)
    bad = Q.violations(sig.values)
    if bad:
        raise NotInDomain(bad[0])
    return PStrictLabeling(_fibers_from_sigma(sig, L, lambda p: range(1, q + 1)), L)


@dataclass(frozen=True)
class GTPattern:
    """Rows ``a[0..q]``; row ``i`` is padded by ``inf`` on the left and 0 on the right.

    Conditions: ``a[i][j] >= a[i-1][j]`` and ``a[i][j] >= a[i+1][j+1]``.
    """

    rows: tuple
    q: int

    @property
    def mu(self) -> tuple:
        return self.rows[0]

    @property
    def lam(self) -> tuple:
        return self.rows[self.q]

    def entry(self, i: int, j: int):
        """1-based column ``j`` of row ``i`` with the padding convention."""
        if j < 1:
            return INF
        row = self.rows[i]
        return row[j - 1] if j <= len(row) else 0

    def violations(self) -> list[str]:
        out = []
        if len(self.rows) != self.q + 1:
            return [f"need {self.q + 1} rows"]
        for i in range(self.q + 1):
            for j in range(1, len(self.rows[i]) + 1):
                if i > 0 and j <= len(self.rows[i - 1]) and self.entry(i, j) < self.entry(i - 1, j):
                    out.append(f"a[{i}][{j}] < a[{i-1}][{j}]")
                if i < self.q and j + 1 <= len(self.rows[i + 1]) and self.entry(i, j) < self.entry(i + 1, j + 1):
                    out.append(f"a[{i}][{j}] < a[{i+1}][{j+1}]")
        return out

    def validate(self) -> "GTPattern":
        bad = self.violations()
        if bad:
            raise InvalidGTPattern("; ".join(bad))
        return self


def _chain_order(L: LabelingSpace) -> list:
    P = L.poset
    order = P.linear_extension()
    for a, b in zip(order, order[1:]):
        if b not in P.upper_covers(a) or len(P.cover_pairs) != len(P) - 1:
            raise NotAChainP("GT patterns need P to be a chain")
    return order


def to_gt_pattern(sigma: QPartition, L: LabelingSpace) -> GTPattern:
    """Parallelogram pattern ``a[i][j] = sigma(p_{n+1-j}, q - i)``."""
    q = _q_of(L)
    order = _chain_order(L)
    n = len(order)
    rows = tuple(tuple(sigma[(order[n - j], q - i)] for j in range(1, n + 1)) for i in range(q + 1))
    return GTPattern(rows, q).validate()


def gt_to_sigma_bar(a: GTPattern, L: LabelingSpace) -> QPartition:
    q = _q_of(L)
    if a.q != q:
        raise InvalidGTPattern("pattern height does not match q")
    order = _chain_order(L)
    n = len(order)
    Q = psi_space(L)
    data = {}
    for i in range(q + 1):
        for j in range(1, n + 1):
            data[(order[n - j], q - i)] = a.rows[i][j - 1]
    return Q.qpartition(data)


def gt_elementary_transformation(a: GTPattern, k: int) -> GTPattern:
    """``t_k``: ``a[k][j] -> min(a[k-1][j-1], a[k+1][j]) + max(a[k-1][j], a[k+1][j+1]) - a[k][j]``."""
    if not 1 <= k <= a.q - 1:
        raise RowOutOfRange(f"row {k} outside 1..{a.q - 1}")
    row = []
    for j in range(1, len(a.rows[k]) + 1):
        hi = min(a.entry(k - 1, j - 1), a.entry(k + 1, j))
        lo = max(a.entry(k - 1, j), a.entry(k + 1, j + 1))
        row.append(int(hi + lo - a.entry(k, j)))
    rows = list(a.rows)
    rows[k] = tuple(row)
    return GTPattern(tuple(rows), a.q).validate()


def enumerate_gt_patterns(top: tuple, bottom: tuple, q: int) -> list[GTPattern]:
    """All parallelogram patterns with fixed first and last rows, by direct search."""
    n = len(top)
    if len(bottom) != n:
        raise InvalidGTPattern("top and bottom rows need equal length")
    out = []

    def rec(rows):
        i = len(rows)
        prev = rows[-1]
        if i == q:
            cand = GTPattern(tuple(rows) + (tuple(bottom),), q)
            if not cand.violations():
                out.append(cand)
            return
        ranges = []
        for j in range(n):
            lo = prev[j]
            hi = bottom[j] if j == 0 else min(bottom[j], prev[j - 1])
            ranges.append(range(lo, hi + 1))
        for row in itertools.product(*ranges):
            rec(rows + [row])

    rec([tuple(top)])
    return out
