"""Oriented knot diagrams as PD codes, plus the DT-code realizer.

Conventions
-----------
A crossing is a 4-tuple of arc labels read counterclockwise starting at the
incoming under-strand.  Arc labels run 1..2n and increase along the knot
(cyclically), so arc a always flows into arc a+1.  The crossing sign is
derived from the labels: the over-strand enters at the fourth slot for a
positive crossing and at the second slot for a negative one.

Only single-component diagrams are accepted; the unknot gets a dedicated
0-crossing value so the parsers can stay strict.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence


class DiagramError(ValueError):
    """Raised for malformed or unsupported diagram input."""


@dataclass(frozen=True)
class Crossing:
    """One crossing: arcs counterclockwise from the incoming under-strand."""

    arcs: tuple[int, int, int, int]
    sign: int  # +1 or -1, derived from the arc labels at validation time

    @property
    def over_in(self) -> int:
        """Arc label of the incoming over-strand."""
        return self.arcs[3] if self.sign > 0 else self.arcs[1]

    @property
    def over_out(self) -> int:
        return self.arcs[1] if self.sign > 0 else self.arcs[3]

    @property
    def under_in(self) -> int:
        return self.arcs[0]

    @property
    def under_out(self) -> int:
        return self.arcs[2]


class PlanarDiagram:
    """Immutable oriented knot diagram given by its PD code."""

    __slots__ = ("crossings", "arc_count")

    def __init__(self, tuples: Iterable[Sequence[int]]):
        tuples = [tuple(t) for t in tuples]
        if not tuples:
            raise DiagramError(
                "empty crossing list; use PlanarDiagram.unknot() for the unknot"
            )
        n = len(tuples)
        arc_count = 2 * n
        counts: dict[int, int] = {}
        for t in tuples:
            if len(t) != 4:
                raise DiagramError(f"crossing {t} is not a 4-tuple")
            for a in t:
                if not isinstance(a, int) or not (1 <= a <= arc_count):
                    raise DiagramError(f"arc label {a} outside 1..{arc_count}")
                counts[a] = counts.get(a, 0) + 1
        bad = [a for a in range(1, arc_count + 1) if counts.get(a, 0) != 2]
        if bad:
            raise DiagramError(f"arc labels {bad} do not appear exactly twice")
        crossings = tuple(Crossing(t, _crossing_sign(t, arc_count)) for t in tuples)
        self.crossings = crossings
        self.arc_count = arc_count

    @classmethod
    def unknot(cls) -> "PlanarDiagram":
        d = object.__new__(cls)
        d.crossings = ()
        d.arc_count = 1
        return d

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def is_unknot_diagram(self) -> bool:
        return not self.crossings

    def pd_tuples(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(c.arcs for c in self.crossings)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlanarDiagram)
            and sorted(self.pd_tuples()) == sorted(other.pd_tuples())
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.pd_tuples())))

    def __repr__(self) -> str:
        if self.is_unknot_diagram:
            return "PlanarDiagram(unknot)"
        body = " ".join("X(%d,%d,%d,%d)" % c.arcs for c in self.crossings)
        return f"PlanarDiagram({body})"


def _next_arc(a: int, arc_count: int) -> int:
    return a % arc_count + 1


def _crossing_sign(t: tuple[int, int, int, int], arc_count: int) -> int:
    """Sign of a crossing from its labels.

    The under-strand runs slot0 -> slot2 and must respect label succession.
    The over-strand occupies slots 1 and 3; whichever of them flows into the
    other (by label succession) is the incoming over-strand.  For the single
    1-crossing kinks both successions hold and the tie is broken by which
    over slot carries the under-out arc.
    """
    a, b, c, d = t
    if c != _next_arc(a, arc_count):
        raise DiagramError(
            f"crossing {t}: under-strand {a}->{c} breaks label succession; "
            "diagram is not a single knot with increasing arc labels"
        )
    b_in = _next_arc(b, arc_count) == d
    d_in = _next_arc(d, arc_count) == b
    if b_in and d_in:  # only possible when arc_count == 2
        return 1 if d == c else -1
    if d_in:
        return 1
    if b_in:
        return -1
    raise DiagramError(
        f"crossing {t}: over-strand {b}/{d} breaks label succession; "
        "diagram is not a single knot with increasing arc labels"
    )


_PD_TOKEN = re.compile(r"X\s*[\[(]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\])]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse a PD-code string like "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"."""
    stripped = text.strip()
    if not stripped:
        raise DiagramError("empty PD code (the unknot has a dedicated constructor)")
    tuples = []
    pos = 0
    for m in _PD_TOKEN.finditer(stripped):
        between = stripped[pos : m.start()]
        if between.strip(" ,;\t"):
            raise DiagramError(f"unexpected text in PD code: {between.strip()!r}")
        tuples.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if stripped[pos:].strip(" ,;\t"):
        raise DiagramError(f"unexpected text in PD code: {stripped[pos:].strip()!r}")
    if not tuples:
        raise DiagramError(f"no crossings found in {text!r}")
    return PlanarDiagram(tuples)


def writhe(d: PlanarDiagram) -> int:
    """Number of positive crossings minus number of negative ones."""
    return sum(c.sign for c in d.crossings)


def seifert_circles(d: PlanarDiagram) -> int:
    """Circle count after the orientation-respecting smoothing of every crossing."""
    if d.is_unknot_diagram:
        return 1
    parent = list(range(d.arc_count + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for c in d.crossings:
        a, b, cc, dd = c.arcs
        if c.sign > 0:
            union(a, b), union(cc, dd)
        else:
            union(a, dd), union(b, cc)
    return len({find(x) for x in range(1, d.arc_count + 1)})


def _switched_tuple(c: Crossing) -> tuple[int, int, int, int]:
    a, b, cc, d = c.arcs
    # The old incoming over-strand becomes the incoming under-strand; the
    # counterclockwise cyclic order of the four ends is unchanged.
    if c.sign > 0:
        return (d, a, b, cc)
    return (b, cc, d, a)


def switch_crossing(d: PlanarDiagram, index: int) -> PlanarDiagram:
    """Reverse over/under at one crossing; writhe changes by +-2."""
    if d.is_unknot_diagram or not (0 <= index < d.n):
        raise DiagramError(f"crossing index {index} out of range")
    tuples = list(d.pd_tuples())
    tuples[index] = _switched_tuple(d.crossings[index])
    return PlanarDiagram(tuples)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Mirror image: every crossing switched."""
    if d.is_unknot_diagram:
        return d
    return PlanarDiagram([_switched_tuple(c) for c in d.crossings])


def add_kink(d: PlanarDiagram, arc: int, sign: int) -> PlanarDiagram:
    """Insert a Reidemeister-1 kink of the given sign on the chosen arc.

    Handy for building non-minimal diagrams in property tests; writhe moves
    by `sign`, Seifert circles by one.
    """
    if sign not in (1, -1):
        raise DiagramError("kink sign must be +1 or -1")
    if d.is_unknot_diagram:
        t = (1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)
        return PlanarDiagram([t])
    if not (1 <= arc <= d.arc_count):
        raise DiagramError(f"arc {arc} out of range")

    def shift(x: int) -> int:
        return x + 2 if x > arc else x

    tuples = []
    for c in d.crossings:
        incoming = {0, 3 if c.sign > 0 else 1}
        t = []
        for slot, x in enumerate(c.arcs):
            if x == arc and slot in incoming:
                t.append(arc + 2)  # the kink sits upstream of this endpoint
            else:
                t.append(shift(x))
        tuples.append(tuple(t))
    if sign > 0:
        tuples.append((arc, arc + 2, arc + 1, arc + 1))
    else:
        tuples.append((arc, arc + 1, arc + 1, arc + 2))
    return PlanarDiagram(tuples)


def canonical_pd_string(d: PlanarDiagram) -> str:
    """Label-rotation-invariant encoding; used as cache/memo key."""
    if d.is_unknot_diagram:
        return "unknot"
    m = d.arc_count
    best = None
    for shift in range(m):
        relabeled = sorted(
            tuple((x - 1 + shift) % m + 1 for x in c.arcs) for c in d.crossings
        )
        s = ";".join(",".join(map(str, t)) for t in relabeled)
        if best is None or s < best:
            best = s
    return best


# --------------------------------------------------------------------------
# Pretzel diagrams
# --------------------------------------------------------------------------

# Corner labels of a crossing in counterclockwise order (y axis up).
_CCW = ("NW", "SW", "SE", "NE")

# Whether a positive twist parameter puts the NW-SE strand on top.  Pinned so
# that pretzel(-2, 3) is the right-handed trefoil (s = +2, not -2).
_PRETZEL_POS_OVER_NWSE = True


def pretzel(*twists: int) -> PlanarDiagram:
    """Diagram of the pretzel knot with the given vertical twist counts.

    Each parameter is one column of |p| crossings between two strands; the
    sign of p fixes the handedness of the column.  The columns are closed off
    left-to-right in the usual way.  Raises if the result has more than one
    component (e.g. two even parameters).
    """
    if len(twists) < 2 or any(p == 0 for p in twists):
        raise DiagramError("pretzel parameters must be nonzero, at least two")
    k = len(twists)
    n = sum(abs(p) for p in twists)

    # Planar arcs pair up darts (region, row, corner).
    join: dict[tuple[int, int, str], tuple[int, int, str]] = {}

    def link(a, b):
        join[a] = b
        join[b] = a

    for r, p in enumerate(twists):
        for m in range(abs(p) - 1):
            link((r, m, "SW"), (r, m + 1, "NW"))
            link((r, m, "SE"), (r, m + 1, "NE"))
    for r in range(k):
        last_r = abs(twists[r]) - 1
        nxt = (r + 1) % k
        link((r, 0, "NE"), (nxt, 0, "NW"))
        link((r, last_r, "SE"), (nxt, abs(twists[nxt]) - 1, "SW"))

    def partner(dart):
        r, m, c = dart
        opposite = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
        return (r, m, opposite[c])

    # Walk the knot, labelling each planar arc; remember at which dart every
    # arc comes in so the under-strand entry point is known per crossing.
    labels: dict[tuple[int, int, str], int] = {}
    incoming: set[tuple[int, int, str]] = set()
    dart = (0, 0, "NW")
    for arc in range(1, 2 * n + 1):
        out = partner(dart)
        dart = join[out]
        labels[out] = labels[dart] = arc
        incoming.add(dart)
    if dart != (0, 0, "NW"):
        raise DiagramError("pretzel parameters give a link, not a knot")

    tuples = []
    for r, p in enumerate(twists):
        over_nwse = (p > 0) == _PRETZEL_POS_OVER_NWSE
        under = ("NE", "SW") if over_nwse else ("NW", "SE")
        for m in range(abs(p)):
            (under_in,) = [c for c in under if (r, m, c) in incoming]
            start = _CCW.index(under_in)
            tuples.append(
                tuple(labels[(r, m, _CCW[(start + s) % 4])] for s in range(4))
            )
    return PlanarDiagram(tuples)


# --------------------------------------------------------------------------
# Dowker-Thistlethwaite realization
# --------------------------------------------------------------------------

# Chirality of the realized embedding is not determined by a DT code; this
# constant pins the convention so that "4 6 2" matches the PD-code trefoil
# X(1,4,2,5) X(3,6,4,1) X(5,2,6,3).
_DT_REFLECT = True

_DT_SEARCH_LIMIT = 14  # side-assignment search is 2^n


def parse_dt(code: str | Sequence[int]) -> PlanarDiagram:
    """Realize a Dowker-Thistlethwaite sequence as a planar diagram.

    Entries are signed even integers; entry i pairs passage 2i-1 with
    passage |a_i|, a negative entry flipping the over/under pattern at that
    crossing.  Non-realizable sequences are rejected.
    """
    if isinstance(code, str):
        parts = code.replace(",", " ").split()
        if not parts:
            raise DiagramError("empty DT code")
        try:
            entries = [int(p) for p in parts]
        except ValueError as exc:
            raise DiagramError(f"malformed DT entry in {code!r}") from exc
    else:
        entries = [int(x) for x in code]
    if not entries:
        raise DiagramError("empty DT code")
    n = len(entries)
    for e in entries:
        if e % 2 != 0 or e == 0:
            raise DiagramError(f"DT entry {e} is not a nonzero even integer")
    if sorted(abs(e) for e in entries) != list(range(2, 2 * n + 1, 2)):
        raise DiagramError("DT entries must be a permutation of 2,4,...,2n in absolute value")
    if n > _DT_SEARCH_LIMIT:
        raise DiagramError(f"DT realization supports at most {_DT_SEARCH_LIMIT} crossings")

    # passage time -> crossing id, and whether the passage goes over
    total = 2 * n
    crossing_of = [0] * (total + 1)
    over_at = [False] * (total + 1)
    for i, e in enumerate(entries):
        odd = 2 * i + 1
        even = abs(e)
        crossing_of[odd] = i
        crossing_of[even] = i
        # positive entry: the odd passage goes over
        over_at[odd] = e > 0
        over_at[even] = e < 0
    times_of = [[] for _ in range(n)]
    for t in range(1, total + 1):
        times_of[crossing_of[t]].append(t)

    sides = _find_planar_sides(n, total, times_of)
    if sides is None:
        raise DiagramError("DT sequence is not realizable as a planar knot diagram")
    rotations = _dt_rotations(times_of, sides, total)

    tuples = []
    for i in range(n):
        t1, t2 = times_of[i]
        under_t = t2 if over_at[t1] else t1
        rot = rotations[i]
        k = rot.index(("in", under_t))
        ordered = [rot[(k + j) % 4] for j in range(4)]
        if _DT_REFLECT:
            ordered = [ordered[0], ordered[3], ordered[2], ordered[1]]
        arcs = []
        for kind, t in ordered:
            arcs.append(t if kind == "in" else t % total + 1)
        tuples.append(tuple(arcs))
    return PlanarDiagram(tuples)


def _dt_rotations(times_of, sides, total):
    """Counterclockwise dart order at each crossing for one side assignment."""
    rotations = []
    for i, (t1, t2) in enumerate(times_of):
        if sides[i] > 0:
            rot = [("in", t1), ("in", t2), ("out", t1), ("out", t2)]
        else:
            rot = [("in", t1), ("out", t2), ("out", t1), ("in", t2)]
        rotations.append(rot)
    return rotations


def _find_planar_sides(n, total, times_of):
    """Brute-force the crossing side choices until the map has n+2 faces."""
    for sides in product((1, -1), repeat=n):
        rotations = _dt_rotations(times_of, sides, total)
        if _face_count(n, total, times_of, rotations) == n + 2:
            return sides
    return None


def _face_count(n, total, times_of, rotations) -> int:
    # Darts are ("in"/"out", passage time); "in" t is the head of edge t-1,
    # "out" t the tail of edge t.  Twin pairs head and tail of each edge.
    succ = {}
    for i in range(n):
        rot = rotations[i]
        for j, dart in enumerate(rot):
            succ[dart] = rot[(j + 1) % 4]

    def twin(dart):
        kind, t = dart
        if kind == "out":
            return ("in", t % total + 1)
        return ("out", (t - 2) % total + 1)

    seen = set()
    faces = 0
    for dart in succ:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            cur = succ[twin(cur)]
    return faces
