"""Translations between tableau families and labelings of chains, plus
product-formula counts and the generating polynomials used in sieving
checks.

Row ``i`` of a skew diagram ``lam/mu`` is the fiber of chain element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FlagNotMonotone, InvalidParameter, InvalidTableau, NonIntegerResult, NotAPartition
from .labelings import LabelingSpace, PStrictLabeling, restriction_from_bounds
from .poset import ConvexShape, chain, skew_shape
from .polynomials import binomial_quotient


@dataclass(frozen=True)
class SkewTableau:
    """Entries of the boxes of ``lam/mu`` row by row; ``rows[i]`` has ``lam[i] - mu[i]`` entries."""

    lam: tuple
    mu: tuple
    q: int
    rows: tuple


def _space(lam, mu, a, b, kind="bounds", q=None) -> LabelingSpace:
    shape = skew_shape(lam, mu)
    P = chain(len(lam))
    R = restriction_from_bounds(P, shape, a, b, kind=kind, q=q)
    return LabelingSpace(P, shape, R)


def ssyt_space(lam: Sequence[int], mu: Sequence[int] = (), q: int = 1) -> LabelingSpace:
    """``SSYT(lam/mu, q)`` as labelings of ``[n] x [lam_1]`` with ``R^q``."""
    return _space(lam, mu, 1, q, kind="global", q=q)


def flagged_space(lam: Sequence[int], mu: Sequence[int], flag: Sequence[int]) -> LabelingSpace:
    """Flagged tableaux: row ``i`` entries at most ``flag[i]``."""
    flag = [int(b) for b in flag]
    if len(flag) != len(lam):
        raise InvalidParameter("flag needs one bound per row")
    if any(flag[i] > flag[i + 1] for i in range(len(flag) - 1)):
        raise FlagNotMonotone(f"flag {tuple(flag)} decreases")
    return _space(lam, mu, 1, {i + 1: flag[i] for i in range(len(lam))})


def symplectic_space(lam: Sequence[int], mu: Sequence[int], q: int) -> LabelingSpace:
    """King symplectic tableaux with entries ``1 < 1bar < ... < q < qbar``.

    ``k`` is encoded as ``2k - 1`` and ``kbar`` as ``2k``; row ``i`` entries
    are at least ``i``.
    """
    return _space(lam, mu, {i + 1: 2 * i + 1 for i in range(len(lam))}, 2 * q)


def staircase_shape(n: int) -> tuple:
    return tuple(range(n, 0, -1))


def tableau_to_labeling(T: SkewTableau, space: LabelingSpace) -> PStrictLabeling:
    mu = list(T.mu) + [0] * (len(T.lam) - len(T.mu))
    if len(T.rows) != len(T.lam):
        raise InvalidTableau("need one row per part of lambda")
    data = {}
    for i, row in enumerate(T.rows):
        if len(row) != T.lam[i] - mu[i]:
            raise InvalidTableau(f"row {i + 1} has {len(row)} entries, expected {T.lam[i] - mu[i]}")
        for t, x in enumerate(row):
            data[(i + 1, mu[i] + t + 1)] = x
    try:
        return space.labeling(data)
    except Exception as exc:
        raise InvalidTableau(str(exc)) from None


def labeling_to_tableau(f: PStrictLabeling, q: int | None = None) -> SkewTableau:
    S = f.space
    lam = tuple(S.shape.hi(p) for p in S.poset.elements)
    mu = tuple(S.shape.lo(p) for p in S.poset.elements)
    return SkewTableau(lam, mu, q if q is not None else (S.R.q or S.support_max), tuple(f.fibers))


def encode_symplectic(entry) -> int:
    """``k -> 2k - 1`` and ``kbar -> 2k``; accepts ints, ``(k, bar)`` pairs or ``{"k", "bar"}`` maps."""
    if isinstance(entry, int):
        return 2 * entry - 1
    if isinstance(entry, dict):
        k, bar = int(entry["k"]), bool(entry.get("bar", False))
    else:
        k, bar = int(entry[0]), bool(entry[1])
    return 2 * k if bar else 2 * k - 1


def decode_symplectic(x: int) -> tuple[int, bool]:
    return ((x + 1) // 2, x % 2 == 0)


def hook_content_symplectic(lam: Sequence[int], q: int) -> int:
    """Number of symplectic tableaux of shape ``lam`` with entries up to ``qbar``.

    Product over boxes of ``(2q + r(i, j)) / h(i, j)`` where ``h`` is the hook
    length and ``r(i, j) = lam_i + lam_j - i - j + 2`` below the diagonal,
    ``i + j - lam'_i - lam'_j`` on or above it.
    """
    lam = [int(x) for x in lam if int(x) > 0]
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise NotAPartition(f"{tuple(lam)} is not a partition")
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0] if lam else 0)]

    def part(seq, k):
        return seq[k - 1] if 1 <= k <= len(seq) else 0

    val = Fraction(1)
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            h = part(lam, i) + part(conj, j) - i - j + 1
            if i > j:
                r = part(lam, i) + part(lam, j) - i - j + 2
            else:
                r = i + j - part(conj, i) - part(conj, j)
            val *= Fraction(2 * q + r, h)
    if val.denominator != 1:
        raise NonIntegerResult(f"hook-content product is {val}")
    return int(val)


def macmahon_exponents(ell: int, n: int, q: int) -> tuple[list[int], list[int]]:
    num = [i + j + q - n - 1 for i in range(1, ell + 1) for j in range(1, n + 1)]
    den = [i + j - 1 for i in range(1, ell + 1) for j in range(1, n + 1)]
    return num, den


def macmahon_polynomial(ell: int, n: int, q: int) -> tuple:
    """q-count of ``SSYT(ell^n, q)``: ``prod (1 - x^{i+j+q-n-1}) / (1 - x^{i+j-1})``."""
    return binomial_quotient(*macmahon_exponents(ell, n, q))


def catalan_exponents(ell: int, n: int) -> tuple[list[int], list[int]]:
    num = [n + 1 + i + 2 * j for j in range(ell) for i in range(1, n + 1)]
    den = [i + 2 * j for j in range(ell) for i in range(1, n + 1)]
    return num, den


def catalan_polynomial(ell: int, n: int) -> tuple:
    """``prod_{j<ell} prod_{i<=n} (1 - x^{n+1+i+2j}) / (1 - x^{i+2j})`` taken literally."""
    return binomial_quotient(*catalan_exponents(ell, n))


def flag_two_four(n: int) -> tuple:
    return tuple(2 * i for i in range(1, n + 1))


def staircase_flag(n: int, ell: int) -> tuple:
    return tuple(ell + i for i in range(1, n + 1))


def staircase_flag_space(n: int, ell: int) -> LabelingSpace:
    """``FT(sc_n, (ell+1, ..., ell+n))`` on the chain ``[n]`` with ``n`` columns."""
    P = chain(n)
    shape = ConvexShape(n, {i: 0 for i in P}, {i: i - 1 for i in P})
    R = restriction_from_bounds(P, shape, 1, {i: ell + i for i in P})
    return LabelingSpace(P, shape, R)
