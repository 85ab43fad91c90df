"""Finite posets, product posets P x [ell] and convex subposets of them.

Elements are arbitrary hashable ids (ints, strings or tuples). A poset is
given by its cover relations; all derived data (linear extension,
comparability, heights) is computed once at construction.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    CycleDetected,
    InvalidParameter,
    MuNotContained,
    NotAChainProduct,
    NotAPartition,
    NotConvex,
    RedundantCover,
    ShapeExceedsEll,
    UnknownElement,
    InvalidShape,
)

Element = Hashable

HAT_ZERO = "0̂"
HAT_ONE = "1̂"


def element_str(e: Element) -> str:
    """Canonical string form of an element id, used for JSON keys."""
    if isinstance(e, tuple):
        return "(" + ",".join(element_str(x) for x in e) + ")"
    return str(e)


class Poset:
    """A finite poset stored by its cover relation.

    Args:
        elements: element ids in a fixed declared order.
        covers: pairs ``(lo, hi)`` meaning ``lo`` is covered by ``hi``.
        chain_dims: set when the poset is a product of chains.

    Raises:
        UnknownElement, CycleDetected, RedundantCover.
    """

    def __init__(
        self,
        elements: Sequence[Element],
        covers: Iterable[tuple[Element, Element]],
        *,
        chain_dims: tuple[int, ...] | None = None,
        name: str | None = None,
    ):
        self.elements: tuple = tuple(elements)
        self.index: dict = {}
        for i, e in enumerate(self.elements):
            if e in self.index:
                raise InvalidParameter(f"duplicate element {e!r}")
            self.index[e] = i
        n = len(self.elements)
        up: list[list[int]] = [[] for _ in range(n)]
        down: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        cover_list = []
        for lo, hi in covers:
            if lo not in self.index:
                raise UnknownElement(f"cover mentions unknown element {lo!r}")
            if hi not in self.index:
                raise UnknownElement(f"cover mentions unknown element {hi!r}")
            a, b = self.index[lo], self.index[hi]
            if a == b:
                raise CycleDetected(f"self-cover on {lo!r}")
            if (a, b) in seen:
                raise RedundantCover(f"duplicate cover {lo!r} < {hi!r}")
            seen.add((a, b))
            cover_list.append((a, b))
            up[a].append(b)
            down[b].append(a)
        self.up: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in up)
        self.down: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in down)
        self.cover_pairs: tuple[tuple[int, int], ...] = tuple(sorted(cover_list))
        self.chain_dims = chain_dims
        self.name = name

        # Kahn's algorithm; ties broken by declared order so the extension is deterministic
        indeg = [len(d) for d in self.down]
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            i = heapq.heappop(heap)
            order.append(i)
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
        if len(order) != n:
            raise CycleDetected("cover relation contains a cycle")
        self.linext: tuple[int, ...] = tuple(order)

        # strict upper sets as bitmasks, filled top-down
        above = [0] * n
        for i in reversed(order):
            m = 0
            for j in self.up[i]:
                m |= (1 << j) | above[j]
            above[i] = m
        for a, b in self.cover_pairs:
            for c in self.up[a]:
                if c != b and (above[c] >> b) & 1:
                    raise RedundantCover(
                        f"cover {self.elements[a]!r} < {self.elements[b]!r} is implied by transitivity"
                    )
        self.above_mask: tuple[int, ...] = tuple(above)
        below = [0] * n
        for i in order:
            m = 0
            for j in self.down[i]:
                m |= (1 << j) | below[j]
            below[i] = m
        self.below_mask: tuple[int, ...] = tuple(below)

        # h: elements in a longest chain ending at p; h_tilde: starting at p
        h = [1] * n
        for i in order:
            for j in self.down[i]:
                h[i] = max(h[i], h[j] + 1)
        ht = [1] * n
        for i in reversed(order):
            for j in self.up[i]:
                ht[i] = max(ht[i], ht[j] + 1)
        self.h_idx = tuple(h)
        self.ht_idx = tuple(ht)

    # basic queries
    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.cover_set() == other.cover_set()

    def __hash__(self) -> int:
        return hash((frozenset(self.elements), frozenset(self.cover_set())))

    def __repr__(self) -> str:
        label = self.name or "Poset"
        return f"<{label}: {len(self)} elements, {len(self.cover_pairs)} covers>"

    def idx(self, e) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise UnknownElement(f"unknown element {e!r}") from None

    def covers(self) -> list[tuple]:
        return [(self.elements[a], self.elements[b]) for a, b in self.cover_pairs]

    def cover_set(self) -> set[tuple]:
        return set(self.covers())

    def upper_covers(self, e) -> list:
        return [self.elements[j] for j in self.up[self.idx(e)]]

    def lower_covers(self, e) -> list:
        return [self.elements[j] for j in self.down[self.idx(e)]]

    def less(self, x, y) -> bool:
        return bool((self.above_mask[self.idx(x)] >> self.idx(y)) & 1)

    def leq(self, x, y) -> bool:
        return x == y or self.less(x, y)

    def minimal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self.down[i]]

    def maximal(self) -> list:
        return [self.elements[i] for i in range(len(self)) if not self.up[i]]

    def linear_extension(self) -> list:
        return [self.elements[i] for i in self.linext]

    def h(self, e) -> int:
        """Number of elements in a longest chain with top ``e``."""
        return self.h_idx[self.idx(e)]

    def h_tilde(self, e) -> int:
        """Number of elements in a longest chain with bottom ``e``."""
        return self.ht_idx[self.idx(e)]

    def element_from_str(self, s: str):
        for e in self.elements:
            if element_str(e) == s:
                return e
        raise UnknownElement(f"no element with id {s!r}")


def build_poset(elements: Sequence[Element], covers: Iterable[tuple[Element, Element]]) -> Poset:
    """Build and validate a poset from declared elements and cover pairs."""
    return Poset(elements, covers)


@dataclass(frozen=True)
class RankInfo:
    rank: dict
    ranked: bool
    graded: bool
    height: dict
    co_height: dict

    @property
    def max_rank(self) -> int:
        return max(self.rank.values(), default=-1)


def rank_info(P: Poset) -> RankInfo:
    """Rank data with minimal elements at rank 0.

    ``ranked`` means every cover raises rank by exactly one; ``graded``
    additionally requires all maximal elements to share a rank.
    """
    rank = {e: P.h(e) - 1 for e in P}
    ranked = all(rank[P.elements[b]] == rank[P.elements[a]] + 1 for a, b in P.cover_pairs)
    top = {rank[e] for e in P.maximal()}
    graded = ranked and len(top) <= 1
    return RankInfo(
        rank=rank,
        ranked=ranked,
        graded=graded,
        height={e: P.h(e) for e in P},
        co_height={e: P.h_tilde(e) for e in P},
    )


def induced_subposet(P: Poset, subset: Iterable[Element], name: str | None = None) -> Poset:
    """Subposet on ``subset`` with the order inherited from ``P``."""
    keep = [e for e in P.elements if e in set(subset)]
    covers = []
    for x in keep:
        ups = [y for y in keep if P.less(x, y)]
        for y in ups:
            if not any(P.less(x, z) and P.less(z, y) for z in ups):
                covers.append((x, y))
    return Poset(keep, covers, name=name)


def linear_extensions(P: Poset, subset: Iterable[Element] | None = None) -> Iterator[list]:
    """All linear extensions of ``P`` (or of the induced order on ``subset``)."""
    items = list(P.elements) if subset is None else [e for e in P.elements if e in set(subset)]

    def rec(remaining: list, prefix: list):
        if not remaining:
            yield list(prefix)
            return
        for x in remaining:
            if any(P.less(y, x) for y in remaining if y != x):
                continue
            prefix.append(x)
            rest = [y for y in remaining if y != x]
            yield from rec(rest, prefix)
            prefix.pop()

    yield from rec(items, [])


def chain(n: int) -> Poset:
    """The chain ``1 < 2 < ... < n``."""
    if n < 1:
        raise InvalidParameter("chain length must be positive")
    return Poset(list(range(1, n + 1)), [(i, i + 1) for i in range(1, n)], chain_dims=(n,), name=f"chain {n}")


def product_of_chains(dims: Sequence[int]) -> Poset:
    """Product ``[a1] x ... x [ak]`` with tuple ids in lexicographic order."""
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise InvalidParameter("product dimensions must be positive")
    elems = list(itertools.product(*[range(1, d + 1) for d in dims]))
    covers = []
    for e in elems:
        for c in range(len(dims)):
            if e[c] < dims[c]:
                covers.append((e, e[:c] + (e[c] + 1,) + e[c + 1:]))
    return Poset(elems, covers, chain_dims=dims, name=f"product {dims}")


def poset_times_chain(P: Poset, m: int) -> Poset:
    """Product ``P x [m]`` with ids ``(p, j)``; chain products stay flat tuples."""
    if m < 1:
        raise InvalidParameter("chain length must be positive")
    if P.chain_dims is not None and len(P.chain_dims) > 1:
        return product_of_chains(P.chain_dims + (m,))
    elems = [(p, j) for p in P.elements for j in range(1, m + 1)]
    covers = [((p, j), (p, j + 1)) for p in P.elements for j in range(1, m)]
    covers += [((a, j), (b, j)) for a, b in P.covers() for j in range(1, m + 1)]
    dims = P.chain_dims + (m,) if P.chain_dims is not None else None
    return Poset(elems, covers, chain_dims=dims)


def triangle(n: int) -> Poset:
    """The order filter ``{(i, j) : n - i < j <= n}`` of ``[n] x [n]``."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    elems = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if n - i < j]
    s = set(elems)
    covers = []
    for i, j in elems:
        if (i + 1, j) in s:
            covers.append(((i, j), (i + 1, j)))
        if (i, j + 1) in s:
            covers.append(((i, j), (i, j + 1)))
    return Poset(elems, covers, name=f"triangle {n}")


def ne_triangle(n: int) -> Poset:
    """Induced subposet ``{(i, j) : i <= j, i + j <= 2n}`` of ``[n] x [2n-1]``."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    elems = [(i, j) for i in range(1, n + 1) for j in range(1, 2 * n) if i <= j and i + j <= 2 * n]
    grid = product_of_chains((n, 2 * n - 1))
    sub = induced_subposet(grid, elems, name=f"ne_triangle {n}")
    return sub


def hat(Q: Poset) -> Poset:
    """``Q`` with a new bottom ``0^`` and top ``1^`` adjoined."""
    if HAT_ZERO in Q.index or HAT_ONE in Q.index:
        raise InvalidParameter("poset already contains hat elements")
    elems = [HAT_ZERO] + list(Q.elements) + [HAT_ONE]
    covers = Q.covers()
    covers += [(HAT_ZERO, m) for m in Q.minimal()]
    covers += [(m, HAT_ONE) for m in Q.maximal()]
    if not len(Q):
        covers.append((HAT_ZERO, HAT_ONE))
    return Poset(elems, covers, name=f"hat({Q.name or 'Q'})")


def standard_poset(family: str, *args) -> Poset:
    """Named families: chain n, product (a1..ak), triangle n, ne_triangle n, hat Q."""
    if family == "chain":
        return chain(int(args[0]))
    if family == "product":
        dims = args[0] if len(args) == 1 and not isinstance(args[0], int) else args
        return product_of_chains(dims)
    if family == "triangle":
        return triangle(int(args[0]))
    if family == "ne_triangle":
        return ne_triangle(int(args[0]))
    if family == "hat":
        return hat(args[0])
    raise InvalidParameter(f"unknown poset family {family!r}")


def antipode(P: Poset, e):
    """Antipode ``(a1+1-i1, ..., ak+1-ik)`` in a product of chains."""
    if P.chain_dims is None:
        raise NotAChainProduct("antipode needs a product of chains")
    P.idx(e)
    if len(P.chain_dims) == 1 and not isinstance(e, tuple):
        return P.chain_dims[0] + 1 - e
    return tuple(a + 1 - x for a, x in zip(P.chain_dims, e))


@dataclass(frozen=True)
class ConvexShape:
    """The convex subposet ``{(p, i) : u(p) < i < ell + 1 - v(p)}`` of ``P x [ell]``.

    ``u`` must not increase and ``v`` must not decrease along the order of
    ``P``; call :meth:`validate` once the poset is known.
    """

    ell: int
    u: Mapping = field(default_factory=dict)
    v: Mapping = field(default_factory=dict)

    def lo(self, p) -> int:
        return self.u.get(p, 0)

    def hi(self, p) -> int:
        return self.ell - self.v.get(p, 0)

    def fiber(self, p) -> range:
        return range(self.lo(p) + 1, self.hi(p) + 1)

    def contains(self, p, i) -> bool:
        return self.lo(p) < i <= self.hi(p)

    def cells(self, P: Poset) -> list[tuple]:
        return [(P.elements[k], i) for k in P.linext for i in self.fiber(P.elements[k])]

    def is_full(self) -> bool:
        return all(x == 0 for x in self.u.values()) and all(x == 0 for x in self.v.values())

    def validate(self, P: Poset) -> "ConvexShape":
        if self.ell < 0:
            raise InvalidShape("ell must be nonnegative")
        for m in (self.u, self.v):
            for p, x in m.items():
                if p not in P:
                    raise UnknownElement(f"shape mentions unknown element {p!r}")
                if x < 0:
                    raise InvalidShape(f"negative offset at {p!r}")
        for p in P:
            if self.lo(p) + self.v.get(p, 0) > self.ell:
                raise ShapeExceedsEll(f"u + v exceeds ell at {p!r}")
        for a, b in P.covers():
            if self.lo(a) < self.lo(b):
                raise NotConvex(f"u increases along {a!r} < {b!r}")
            if self.v.get(a, 0) > self.v.get(b, 0):
                raise NotConvex(f"v decreases along {a!r} < {b!r}")
        return self


def full_shape(P: Poset, ell: int) -> ConvexShape:
    return ConvexShape(ell, {p: 0 for p in P}, {p: 0 for p in P})


def _check_partition(lam: Sequence[int], what: str):
    if any(x < 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise NotAPartition(f"{what} = {tuple(lam)} is not a partition")


def skew_shape(lam: Sequence[int], mu: Sequence[int] = (), ell: int | None = None) -> ConvexShape:
    """Convex shape on the chain ``[n]`` encoding the skew diagram ``lam/mu``.

    Row ``i`` of the diagram is the fiber of chain element ``i``.
    """
    lam = [int(x) for x in lam]
    mu = [int(x) for x in mu]
    _check_partition(lam, "lambda")
    _check_partition(mu, "mu")
    if not lam:
        raise NotAPartition("lambda must be nonempty")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise MuNotContained(f"mu = {tuple(mu)} not contained in lambda = {tuple(lam)}")
    mu = mu + [0] * (len(lam) - len(mu))
    ell = lam[0] if ell is None else ell
    if lam[0] > ell:
        raise ShapeExceedsEll("first row of lambda exceeds ell")
    n = len(lam)
    return ConvexShape(ell, {i + 1: mu[i] for i in range(n)}, {i + 1: ell - lam[i] for i in range(n)})


def shape_from_cells(P: Poset, ell: int, cells: Iterable[tuple]) -> ConvexShape:
    """Recover ``(u, v)`` from a cell set, rejecting non-convex sets.

    Empty fibers get ``u`` equal to the least ``u`` of a nonempty fiber and
    ``v = ell - u``.
    """
    by_fiber: dict = {p: [] for p in P}
    for p, i in cells:
        if p not in P:
            raise UnknownElement(f"cell mentions unknown element {p!r}")
        if not 1 <= i <= ell:
            raise ShapeExceedsEll(f"cell {(p, i)!r} outside 1..{ell}")
        by_fiber[p].append(i)
    u, v = {}, {}
    for p, rows in by_fiber.items():
        if rows:
            rows.sort()
            if rows != list(range(rows[0], rows[-1] + 1)):
                raise NotConvex(f"fiber of {p!r} is not an interval")
            u[p] = rows[0] - 1
            v[p] = ell - rows[-1]
    if not u:
        raise NotConvex("no cells")
    umin = min(u.values())
    for p in P:
        if p not in u:
            u[p] = umin
            v[p] = ell - umin
    shape = ConvexShape(ell, u, v)
    try:
        shape.validate(P)
    except ShapeExceedsEll as exc:
        raise NotConvex(str(exc)) from None
    return shape
