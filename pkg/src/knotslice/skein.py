"""HOMFLY polynomial by skein-tree recursion.

Public diagrams are knots, but smoothing a crossing produces links, so the
engine carries an internal oriented link representation: a list of
crossings (same tuple convention as PlanarDiagram, with the sign stored
explicitly) plus a count of crossingless loop components.

The recursion follows the descending-diagram strategy: traverse the link
from fixed basepoints, switch the first crossing met on its under-strand
first, and resolve with v^-1 P+ - v P- = z P0.  Descending diagrams are
unlinks with P = ((v^-1 - v)/z)^{components-1}.  Subresults are memoized
on a relabeled canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .diagram import PlanarDiagram
from .poly import Laurent2

XCrossing = Tuple[int, int, int, int, int]  # a, b, c, d, sign


class SkeinBudgetError(RuntimeError):
    """Skein tree grew past the configured node budget."""


DEFAULT_BUDGET = 2_000_000

# delta = (v^-1 - v) / z, the unlink factor
_DELTA = Laurent2({(-1, -1): 1, (1, -1): -1})
_V2 = Laurent2.term(1, 2, 0)
_VZ = Laurent2.term(1, 1, 1)
_VM2 = Laurent2.term(1, -2, 0)
_VMZ = Laurent2.term(-1, -1, 1)


@dataclass(frozen=True)
class _Link:
    crossings: Tuple[XCrossing, ...]
    loops: int


def _over_in_out(x: XCrossing) -> Tuple[int, int]:
    a, b, c, d, sign = x
    return (d, b) if sign > 0 else (b, d)


def from_planar(d: PlanarDiagram) -> _Link:
    if d.is_unknot_diagram:
        return _Link((), 1)
    return _Link(tuple(c.arcs + (c.sign,) for c in d.crossings), 0)


def _successor(crossings: Tuple[XCrossing, ...]) -> Dict[int, int]:
    succ: Dict[int, int] = {}
    for x in crossings:
        a, b, c, dd, sign = x
        o_in, o_out = _over_in_out(x)
        succ[a] = c
        succ[o_in] = o_out
    return succ


def _traverse(crossings: Tuple[XCrossing, ...]):
    """Walk every component from its minimal arc, in component order.

    Returns (passages, comps) where passages is the global list of
    (crossing index, is_under) passage events and comps the component count.
    """
    succ = _successor(crossings)
    where: Dict[int, List[Tuple[int, bool]]] = {}
    for idx, x in enumerate(crossings):
        a = x[0]
        o_in, _ = _over_in_out(x)
        where.setdefault(a, []).append((idx, True))
        where.setdefault(o_in, []).append((idx, False))
    passages: List[Tuple[int, bool]] = []
    visited: set[int] = set()
    comps = 0
    for start in sorted(succ):
        if start in visited:
            continue
        comps += 1
        arc = start
        while arc not in visited:
            visited.add(arc)
            for event in where.get(arc, ()):
                passages.append(event)
            arc = succ[arc]
    return passages, comps


def _canonical_key(link: _Link):
    """Relabel arcs along the traversal order; deterministic per diagram."""
    crossings = link.crossings
    if not crossings:
        return (link.loops,)
    succ = _successor(crossings)
    label: Dict[int, int] = {}
    nxt = 1
    for start in sorted(succ):
        if start in label:
            continue
        arc = start
        while arc not in label:
            label[arc] = nxt
            nxt += 1
            arc = succ[arc]
    rel = sorted(
        (label[a], label[b], label[c], label[d], s) for a, b, c, d, s in crossings
    )
    return (link.loops, tuple(rel))


def switched(link: _Link, idx: int) -> _Link:
    a, b, c, d, sign = link.crossings[idx]
    if sign > 0:
        new = (d, a, b, c, -1)
    else:
        new = (b, c, d, a, 1)
    crossings = list(link.crossings)
    crossings[idx] = new
    return _Link(tuple(crossings), link.loops)


def smoothed(link: _Link, idx: int) -> _Link:
    """Oriented smoothing of one crossing; may close off loop components."""
    x = link.crossings[idx]
    a, b, c, d, sign = x
    o_in, o_out = _over_in_out(x)
    rest = link.crossings[:idx] + link.crossings[idx + 1 :]

    parent: Dict[int, int] = {}

    def find(z: int) -> int:
        parent.setdefault(z, z)
        while parent[z] != z:
            parent[z] = parent[parent[z]]
            z = parent[z]
        return z

    def union(p: int, q: int) -> None:
        parent[find(p)] = find(q)

    union(a, o_out)
    union(o_in, c)
    new_crossings = tuple(
        (find(p), find(q), find(r), find(s), sg) for p, q, r, s, sg in rest
    )
    present = {z for t in new_crossings for z in t[:4]}
    vanished = {find(z) for z in (a, c, o_in, o_out)} - present
    return _Link(new_crossings, link.loops + len(vanished))


def _first_bad(link: _Link) -> int | None:
    """Index of the first crossing met on its under-strand first, or None."""
    passages, _ = _traverse(link.crossings)
    seen: set[int] = set()
    for idx, is_under in passages:
        if idx in seen:
            continue
        if is_under:
            return idx
        seen.add(idx)
    return None


def homfly_link(link: _Link, budget: int = DEFAULT_BUDGET) -> Laurent2:
    memo: Dict[tuple, Laurent2] = {}
    nodes = [0]

    def run(lk: _Link) -> Laurent2:
        nodes[0] += 1
        if nodes[0] > budget:
            raise SkeinBudgetError(f"skein recursion exceeded {budget} nodes")
        key = _canonical_key(lk)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bad = _first_bad(lk)
        if bad is None:
            _, comps = _traverse(lk.crossings)
            k = comps + lk.loops
            value = Laurent2.one()
            for _ in range(k - 1):
                value = value * _DELTA
            memo[key] = value
            return value
        sign = lk.crossings[bad][4]
        p_switched = run(switched(lk, bad))
        p_smoothed = run(smoothed(lk, bad))
        if sign > 0:
            value = _V2 * p_switched + _VZ * p_smoothed
        else:
            value = _VM2 * p_switched + _VMZ * p_smoothed
        memo[key] = value
        return value

    return run(link)


def homfly_of_diagram(d: PlanarDiagram, budget: int = DEFAULT_BUDGET) -> Laurent2:
    return homfly_link(from_planar(d), budget)
