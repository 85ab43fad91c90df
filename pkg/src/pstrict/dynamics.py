"""Orbit structure of invertible actions on finite sets, cyclic sieving,
homomesy, equivariance and counterexample search.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import NotABijection, NotAntipodal, NotRanked
from .polynomials import evaluate, reduce_cyclic, trim, value_at_root
from .poset import Poset, antipode, rank_info

CONJECTURE_CONSISTENT = "CONJECTURE-CONSISTENT"
CONJECTURE_REFUTED = "CONJECTURE-REFUTED"
TRANSCRIPTION_AMBIGUOUS = "TRANSCRIPTION-AMBIGUOUS"


@dataclass(frozen=True)
class OrbitReport:
    sizes: tuple  # sorted orbit sizes
    representatives: tuple  # least element of each orbit, orbits sorted by representative
    order: int
    total: int

    @property
    def size_multiset(self) -> Counter:
        return Counter(self.sizes)


def _orbits(elements: list, action: Callable) -> list[list]:
    index = {x: t for t, x in enumerate(elements)}
    if len(index) != len(elements):
        raise NotABijection("the element list has duplicates")
    seen = [False] * len(elements)
    hit = [False] * len(elements)
    orbits = []
    for t, x in enumerate(elements):
        if seen[t]:
            continue
        orbit = [x]
        seen[t] = True
        y = action(x)
        while True:
            s = index.get(y)
            if s is None:
                raise NotABijection("the action leaves the set")
            if hit[s]:
                raise NotABijection("the action is not injective")
            hit[s] = True
            if s == t:
                break
            if seen[s]:
                raise NotABijection("the action is not injective")
            seen[s] = True
            orbit.append(y)
            y = action(y)
        orbits.append(orbit)
    return orbits


_WORKER: dict = {}


def _init_worker(elements, action):
    _WORKER["elements"] = elements
    _WORKER["action"] = action


def _images(chunk: range) -> list:
    els, act = _WORKER["elements"], _WORKER["action"]
    return [act(els[t]) for t in chunk]


def _image_table(elements: list, action: Callable, jobs: int) -> list:
    if jobs <= 1 or len(elements) < 2 * jobs:
        return [action(x) for x in elements]
    step = math.ceil(len(elements) / jobs)
    chunks = [range(s, min(s + step, len(elements))) for s in range(0, len(elements), step)]
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(elements, action)) as ex:
        parts = list(ex.map(_images, chunks))
    return [y for part in parts for y in part]


def orbit_decomposition(elements: Iterable, action: Callable, jobs: int = 1) -> tuple[OrbitReport, list[list]]:
    """Split ``elements`` into orbits of ``action``; result is independent of ``jobs``.

    With ``jobs > 1`` the action is evaluated once per element in worker
    processes and the cycles are read off the image table.
    """
    elements = list(elements)
    if jobs > 1:
        table = _image_table(elements, action, jobs)
        image = dict(zip(elements, table))

        def action(x, _image=image):  # noqa: E731
            return _image[x]

    orbits = _orbits(elements, action)
    reps = sorted((min(o), t) for t, o in enumerate(orbits))
    orbits = [orbits[t] for _, t in reps]
    sizes = tuple(sorted(len(o) for o in orbits))
    order = math.lcm(*sizes) if sizes else 1
    report = OrbitReport(sizes, tuple(r for r, _ in reps), order, len(elements))
    return report, orbits


def action_order(elements: Iterable, action: Callable, jobs: int = 1) -> int:
    return orbit_decomposition(elements, action, jobs)[0].order


@dataclass(frozen=True)
class CSPReport:
    holds: bool
    order: int
    residue: tuple
    orbit_side: tuple
    fixed_point_counts: tuple  # |X^{c^d}| for d = 0..order-1
    failing_d: int | None
    reason: str = ""


def check_csp(elements: Sequence, action: Callable, poly: Sequence[int], orbits: list | None = None) -> CSPReport:
    """Cyclic sieving: ``poly mod (x^N - 1)`` equals the sum over orbits ``O``
    of ``sum_{t < |O|} x^{t N / |O|}``.

    Each ``d`` is also checked exactly: ``poly`` reduced modulo the
    cyclotomic polynomial of the order of ``zeta^d`` must be the constant
    ``|X^{c^d}|``.
    """
    if orbits is None:
        _, orbits = orbit_decomposition(elements, action)
    sizes = [len(o) for o in orbits]
    total = sum(sizes)
    N = math.lcm(*sizes) if sizes else 1
    poly = trim(poly)
    residue = reduce_cyclic(poly, N)
    side = [0] * N
    for s in sizes:
        for t in range(s):
            side[t * N // s] += 1
    fixed = tuple(sum(s for s in sizes if d % s == 0) for d in range(N))
    if evaluate(poly, 1) != total:
        return CSPReport(False, N, residue, tuple(side), fixed, 0, "PolyDegenerate: poly(1) differs from the set size")
    failing = None
    for d in range(N):
        m = N // math.gcd(N, d)
        rem = value_at_root(poly, m)
        want = (fixed[d],) if fixed[d] else ()
        if rem != want:
            failing = d
            break
    holds = failing is None and residue == tuple(side)
    return CSPReport(holds, N, residue, tuple(side), fixed, failing, "" if holds else f"fails at d = {failing}")


@dataclass(frozen=True)
class HomomesyReport:
    homomesic: bool
    constant: Fraction | None
    averages: tuple  # per orbit, in orbit-representative order
    status: str = ""


def check_homomesy(orbits: list[list], statistic: Callable) -> HomomesyReport:
    avgs = tuple(Fraction(sum(statistic(x) for x in o), len(o)) for o in orbits)
    ok = len(set(avgs)) <= 1
    return HomomesyReport(ok, avgs[0] if ok and avgs else None, avgs)


@dataclass(frozen=True)
class EquivarianceReport:
    holds: bool
    checked: int
    first_failure: object = None


def check_equivariance(elements: Iterable, phi: Callable, action_a: Callable, action_b: Callable) -> EquivarianceReport:
    """``phi(a(x)) == b(phi(x))`` for every ``x``."""
    n = 0
    for x in elements:
        n += 1
        if phi(action_a(x)) != action_b(phi(x)):
            return EquivarianceReport(False, n, x)
    return EquivarianceReport(True, n)


def check_cycle_type_equality(elements_a: Iterable, action_a: Callable, elements_b: Iterable, action_b: Callable) -> tuple[bool, Counter, Counter]:
    ra, _ = orbit_decomposition(elements_a, action_a)
    rb, _ = orbit_decomposition(elements_b, action_b)
    return ra.size_multiset == rb.size_multiset, ra.size_multiset, rb.size_multiset


@dataclass(frozen=True)
class CounterexampleReport:
    found: bool
    witness: object = None
    searched: int = 0


def find_counterexample(elements: Iterable, predicate: Callable) -> CounterexampleReport:
    """First element (in iteration order) violating ``predicate``."""
    n = 0
    for x in elements:
        n += 1
        if not predicate(x):
            return CounterexampleReport(True, x, n)
    return CounterexampleReport(False, None, n)


# statistics

def cell_sum(cells: Iterable) -> Callable:
    """Sum of labels over a set of ``(p, i)`` cells of a labeling."""
    cells = list(cells)

    def stat(f):
        return sum(f(p, i) for p, i in cells)

    return stat


def antipodal_closed(P: Poset, cells: Iterable, ell: int) -> bool:
    """Whether a cell set of the chain product ``P x [ell]`` is closed under the antipode."""
    s = set(cells)
    return all((antipode(P, p), ell + 1 - i) in s for p, i in s)


def antipodal_cell_sum(P: Poset, cells: Iterable, ell: int) -> Callable:
    cells = list(cells)
    if not antipodal_closed(P, cells, ell):
        raise NotAntipodal("cell set is not closed under the antipode")
    return cell_sum(cells)


def element_sum(elements: Iterable) -> Callable:
    """Sum of Q-partition values over a set of elements."""
    elements = list(elements)

    def stat(sigma):
        return sum(sigma[x] for x in elements)

    return stat


def rank_alternating(Q: Poset, elements: Iterable | None = None, rank: dict | None = None) -> Callable:
    """``sum (-1)^rk(x) sigma(x)`` with minimal elements of ``Q`` at rank 0.

    ``elements`` restricts the sum (and ``rank`` may be supplied when the
    statistic lives on another poset mapped into ``Q``).
    """
    if rank is None:
        info = rank_info(Q)
        if not info.ranked:
            raise NotRanked("poset is not ranked")
        rank = info.rank
    elements = list(Q.elements if elements is None else elements)
    signs = [(x, 1 if rank[x] % 2 == 0 else -1) for x in elements]

    def stat(sigma):
        return sum(s * sigma[x] for x, s in signs)

    return stat


def flag_parity(f) -> int:
    """Odd-row boxes with even labels minus even-row boxes with odd labels (chain rows ``1..n``)."""
    S = f.space
    total = 0
    for j, p in enumerate(S.poset.elements):
        for x in f.fibers[j]:
            if p % 2 == 1 and x % 2 == 0:
                total += 1
            elif p % 2 == 0 and x % 2 == 1:
                total -= 1
    return total
