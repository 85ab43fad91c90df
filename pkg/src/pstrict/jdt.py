"""Jeu de taquin slides on labelings with empty boxes, and the promotion
they define.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import InvalidResult, MalformedIntermediate, UnsupportedRestriction
from .labelings import LabelingSpace, PStrictLabeling, bender_knuth

BOX = None


@dataclass
class SlideStats:
    """Which of the four slide rules fired, keyed by ``(label, application)``."""

    fired: Counter = field(default_factory=Counter)

    def fired_after_first(self, rule: str) -> int:
        return sum(c for (r, _, app), c in self.fired.items() if r == rule and app > 0)


def _check_boxes(S: LabelingSpace, g: list) -> None:
    P = S.poset
    for i in range(1, S.ell + 1):
        boxes = [j for j in range(S.n) if S.lo[j] <= i <= S.hi[j] and g[j][i - S.lo[j]] is BOX]
        for a in boxes:
            for b in boxes:
                if (P.above_mask[a] >> b) & 1:
                    raise MalformedIntermediate(
                        f"comparable empty boxes at {P.elements[a]!r} and {P.elements[b]!r} in layer {i}"
                    )


def jdt_slide(S: LabelingSpace, g: list, i: int, stats: SlideStats | None = None, application: int = 0) -> list:
    """One simultaneous application of ``jdt_i`` to box-labeling ``g`` (a list of fiber lists).

    Empty box becomes ``i`` when ``i`` sits directly above it in its layer,
    or directly after it in its fiber with no empty box below that cell's
    layer position. Label ``i`` becomes empty when an empty box sits directly
    below it in its layer, or directly before it in its fiber with no ``i``
    above that box in the layer.
    """
    lo, hi, up, down = S.lo, S.hi, S.up, S.down

    def at(j, pos):
        return g[j][pos - lo[j]] if lo[j] <= pos <= hi[j] else 0

    new = [list(fib) for fib in g]
    for j in range(S.n):
        for pos in range(lo[j], hi[j] + 1):
            val = g[j][pos - lo[j]]
            rule = None
            if val is BOX:
                if any(lo[c] <= pos <= hi[c] and at(c, pos) == i for c in up[j]):
                    rule = "a"
                elif (
                    pos < hi[j]
                    and at(j, pos + 1) == i
                    and not any(lo[d] <= pos + 1 <= hi[d] and at(d, pos + 1) is BOX for d in down[j])
                ):
                    rule = "b"
                if rule:
                    new[j][pos - lo[j]] = i
            elif val == i:
                if any(lo[d] <= pos <= hi[d] and at(d, pos) is BOX for d in down[j]):
                    rule = "c"
                elif (
                    pos > lo[j]
                    and at(j, pos - 1) is BOX
                    and not any(lo[c] <= pos - 1 <= hi[c] and at(c, pos - 1) == i for c in up[j])
                ):
                    rule = "d"
                if rule:
                    new[j][pos - lo[j]] = BOX
            if rule and stats is not None:
                stats.fired[(rule, i, application)] += 1
    _check_boxes(S, new)
    return new


def _promotion_upto(f: PStrictLabeling, top: int, stats: SlideStats | None, trace: list | None) -> PStrictLabeling:
    S = f.space
    g = [[BOX if x == 1 else x for x in fib] for fib in f.fibers]
    frozen = [[x > top for x in fib] for fib in f.fibers]
    _check_boxes(S, g)
    if trace is not None:
        trace.append(("start", [list(x) for x in g]))
    for i in range(2, top + 1):
        for app in range(S.ell):
            g = jdt_slide(S, g, i, stats, app)
            if trace is not None:
                trace.append((i, [list(x) for x in g]))
    out = []
    for j, fib in enumerate(g):
        row = []
        for t, x in enumerate(fib):
            if x is BOX:
                row.append(top)
            elif frozen[j][t]:
                row.append(x)
            else:
                row.append(x - 1)
        out.append(tuple(row))
    result = tuple(out)
    bad = S.violations(result)
    if bad:
        raise InvalidResult(f"jeu de taquin promotion produced an invalid labeling: {bad[0]}")
    return PStrictLabeling(result, S)


def _q(S: LabelingSpace) -> int:
    if S.R.kind != "global" or S.R.q is None:
        raise UnsupportedRestriction("jeu de taquin promotion needs R^q")
    return S.R.q


def jdt_promotion(f: PStrictLabeling, trace: list | None = None, stats: SlideStats | None = None) -> PStrictLabeling:
    """Empty the 1s, apply ``jdt_i`` ``ell`` times for ``i = 2..q``, fill with ``q+1`` and subtract one."""
    return _promotion_upto(f, _q(f.space), stats, trace)


def jdt_promotion_frozen(f: PStrictLabeling, i: int, stats: SlideStats | None = None) -> PStrictLabeling:
    """``JdtPro_i``: labels above ``i`` stay put; slides run up to ``i`` and the hole fills with ``i``."""
    _q(f.space)
    return _promotion_upto(f, i, stats, None)


def jdt_matches_bk_factorization(f: PStrictLabeling) -> bool:
    """``JdtPro = rho_{q-1} o JdtPro_{q-1}``."""
    q = _q(f.space)
    return jdt_promotion(f) == bender_knuth(jdt_promotion_frozen(f, q - 1), q - 1)
