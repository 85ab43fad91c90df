"""Integer polynomials as coefficient tuples, lowest degree first."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NonPolynomial

Poly = tuple


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_poly(a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """Division by a polynomial whose leading coefficient is +1 or -1."""
    b = trim(b)
    if not b or abs(b[-1]) != 1:
        raise ValueError("divisor must have leading coefficient +-1")
    rem = list(trim(a))
    if len(rem) < len(b):
        return (), tuple(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * lead
        quot[shift] = c
        if c:
            for t, y in enumerate(b):
                rem[shift + t] -= c * y
    return trim(quot), trim(rem)


def evaluate(a: Sequence[int], x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by dividing ``x^n - 1`` by smaller ones."""
    num = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_poly(num, cyclotomic(d))
            assert not rem
    return num


def binomial_quotient(num_exponents: Iterable[int], den_exponents: Iterable[int]) -> Poly:
    """``prod (1 - x^a) / prod (1 - x^b)`` by cancelling cyclotomic factors.

    Raises:
        NonPolynomial: if some cyclotomic factor survives in the denominator.
    """
    num_exponents = list(num_exponents)
    den_exponents = list(den_exponents)
    mult: Counter = Counter()
    for m in num_exponents:
        for d in range(1, m + 1):
            if m % d == 0:
                mult[d] += 1
    for m in den_exponents:
        for d in range(1, m + 1):
            if m % d == 0:
                mult[d] -= 1
    bad = sorted(d for d, c in mult.items() if c < 0)
    if bad:
        raise NonPolynomial(f"cyclotomic factors {bad} remain in the denominator")
    out: Poly = (1,)
    for d in sorted(mult):
        for _ in range(mult[d]):
            out = mul(out, cyclotomic(d))
    # 1 - x^m = -(x^m - 1); signs cancel when the two products have equal length
    sign = (-1) ** ((len(num_exponents) - len(den_exponents)) % 2)
    return tuple(sign * c for c in out)


def reduce_cyclic(a: Sequence[int], n: int) -> tuple[int, ...]:
    """Residue of ``a`` modulo ``x^n - 1`` as ``n`` coefficients."""
    out = [0] * n
    for i, c in enumerate(a):
        out[i % n] += c
    return tuple(out)


def value_at_root(a: Sequence[int], m: int) -> Poly:
    """``a`` reduced modulo the m-th cyclotomic polynomial.

    The result is constant ``(c,)`` exactly when ``a(w) = c`` at a
    primitive m-th root of unity ``w``.
    """
    return divmod_poly(a, cyclotomic(m))[1]


def exact_quotient_value(num_exponents: Iterable[int], den_exponents: Iterable[int], x) -> Fraction:
    """Value of the product at a point where no denominator factor vanishes."""
    val = Fraction(1)
    for m in num_exponents:
        val *= 1 - Fraction(x) ** m
    for m in den_exponents:
        val /= 1 - Fraction(x) ** m
    return val
