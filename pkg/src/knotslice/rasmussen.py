"""Rasmussen invariant extraction and the bounds derived from it.

The invariant is read off the rank table through the decomposition
Kh = q^{s-1} (1 + q^2 + (1 + t q^4) Kh') with Kh' coefficient-nonnegative.
When the rank table admits a potentially nonzero differential of bidegree
(1, 8) the decomposition is attempted for every way such pairs could
cancel, and all consistent values of s are reported instead of silently
picking one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Optional, Tuple

from .braid import BraidWord, closure, exponent_sum
from .diagram import DiagramError, PlanarDiagram, seifert_circles, switch_crossing, writhe
from .khovanov import BigradedRanks, homology_ranks, poincare_polynomial
from .poly import Laurent2


class ExtractionError(ValueError):
    """No candidate s admits a nonnegative decomposition.

    This means either a homology bug upstream or a genuinely undecomposable
    rank table, which is reported loudly rather than patched over.
    """


@dataclass(frozen=True)
class SResult:
    """Either a determined even integer or the set of consistent candidates."""

    determined: Optional[int]
    ambiguous: Tuple[int, ...] = ()

    @classmethod
    def of(cls, value: int) -> "SResult":
        return cls(determined=value)

    @classmethod
    def among(cls, values) -> "SResult":
        vs = tuple(sorted(set(values)))
        if len(vs) == 1:
            return cls(determined=vs[0])
        return cls(determined=None, ambiguous=vs)

    @property
    def is_determined(self) -> bool:
        return self.determined is not None

    def candidates(self) -> Tuple[int, ...]:
        return (self.determined,) if self.is_determined else self.ambiguous

    def __str__(self) -> str:
        if self.is_determined:
            return str(self.determined)
        return "|".join(str(c) for c in self.ambiguous)


def lee_condition(r: BigradedRanks) -> bool:
    """True iff no pair h^{i,j}, h^{i+1,j+8} is simultaneously nonzero."""
    return not any((i + 1, j + 8) in r.ranks for (i, j) in r.ranks)


def _divide_out(kh: Laurent2, s: int) -> Optional[Laurent2]:
    """Solve kh = q^{s-1}(1 + q^2 + (1 + t q^4) K') for a nonnegative K'."""
    rest = kh.scale(1, 0, 1 - s) - Laurent2({(0, 0): 1, (0, 2): 1})
    if rest.is_zero():
        return Laurent2.zero()
    # Divide by (1 + t q^4) one t-degree at a time, from the bottom up.
    by_t: Dict[int, Dict[int, int]] = {}
    for (ti, qj), c in rest.coeffs.items():
        by_t.setdefault(ti, {})[qj] = c
    tmin, tmax = min(by_t), max(by_t)
    quotient: Dict[Tuple[int, int], int] = {}
    prev: Dict[int, int] = {}
    for ti in range(tmin, tmax + 2):
        row = dict(by_t.get(ti, {}))
        for qj, c in prev.items():
            row[qj + 4] = row.get(qj + 4, 0) - c
        row = {qj: c for qj, c in row.items() if c}
        if ti == tmax + 1:
            if row:
                return None  # remainder
            break
        if any(c < 0 for c in row.values()):
            return None
        for qj, c in row.items():
            quotient[(ti, qj)] = c
        prev = row
    return Laurent2(quotient)


def _cancellation_scenarios(r: BigradedRanks, limit: int = 20000):
    """Rank tables reachable by cancelling along bidegree-(1,8) pairs."""
    pairs = [
        ((i, j), (i + 1, j + 8))
        for (i, j) in sorted(r.ranks)
        if (i + 1, j + 8) in r.ranks
    ]
    ranges = [
        range(min(r.ranks[p], r.ranks[q]) + 1) for p, q in pairs
    ]
    count = 1
    for rg in ranges:
        count *= len(rg)
    if count > limit:
        raise ExtractionError(f"too many cancellation scenarios ({count})")
    for amounts in product(*ranges):
        table = dict(r.ranks)
        ok = True
        for (p, q), amt in zip(pairs, amounts):
            if amt == 0:
                continue
            if table.get(p, 0) < amt or table.get(q, 0) < amt:
                ok = False
                break
            table[p] -= amt
            table[q] -= amt
        if ok:
            yield BigradedRanks(table)


def _decompose(r: BigradedRanks) -> Optional[Tuple[int, Laurent2]]:
    """Unique s (if any) with a nonnegative decomposition of this table."""
    if not r.ranks:
        return None
    kh = poincare_polynomial(r)
    qs = [j for (_i, j) in r.ranks]
    found = None
    for s in range(min(qs) + 1, max(qs) + 2, 2):
        quotient = _divide_out(kh, s)
        if quotient is not None:
            if found is not None:
                raise AssertionError("decomposition s is not unique")
            found = (s, quotient)
    return found


def extract_s(r: BigradedRanks) -> SResult:
    """Rasmussen invariant from a Khovanov rank table.

    With the (1,8)-condition satisfied the decomposition determines s
    uniquely.  Otherwise every cancellation pattern of the possibly
    nonvanishing differentials is tried and all consistent values are
    returned; the paper-style ambiguous cases yield two values differing
    by 2.
    """
    if not r.ranks:
        raise ExtractionError("empty rank table")
    if lee_condition(r):
        result = _decompose(r)
        if result is None:
            raise ExtractionError(
                "no s admits a nonnegative decomposition despite the (1,8) condition"
            )
        return SResult.of(result[0])
    values = []
    for table in _cancellation_scenarios(r):
        result = _decompose(table)
        if result is not None:
            values.append(result[0])
    if not values:
        raise ExtractionError("no cancellation scenario admits a decomposition")
    return SResult.among(values)


def decomposition_quotient(r: BigradedRanks) -> Laurent2:
    """Kh' for a table satisfying the (1,8) condition (testing hook)."""
    result = _decompose(r)
    if result is None:
        raise ExtractionError("table does not decompose")
    return result[1]


def writhe_seifert_lower_bound(d: PlanarDiagram) -> int:
    """s(K) >= w(D) - O(D) + 1 for any diagram D of K."""
    return writhe(d) - seifert_circles(d) + 1


def slice_genus_lower_bound(s: int) -> int:
    """|s|/2 <= g_4."""
    if s % 2:
        raise ValueError("Rasmussen invariant is even")
    return abs(s) // 2


def slice_bennequin_bound(b: BraidWord) -> Fraction:
    """g_4 of the closure is at least (w - k + 1)/2; closure must be a knot."""
    closure(b)  # validates single-component closure
    return Fraction(exponent_sum(b) - b.strands + 1, 2)


def crossing_change_check(
    d: PlanarDiagram, index: int, max_crossings: int = 16
) -> Optional[bool]:
    """Check s(K-) <= s(K+) <= s(K-) + 2 across one crossing switch.

    Returns None when either side comes out ambiguous (inconclusive).
    """
    if not (0 <= index < d.n):
        raise DiagramError(f"crossing index {index} out of range")
    other = switch_crossing(d, index)
    if d.crossings[index].sign > 0:
        pos, neg = d, other
    else:
        pos, neg = other, d
    s_pos = extract_s(homology_ranks(pos, max_crossings))
    s_neg = extract_s(homology_ranks(neg, max_crossings))
    if not (s_pos.is_determined and s_neg.is_determined):
        return None
    return s_neg.determined <= s_pos.determined <= s_neg.determined + 2
