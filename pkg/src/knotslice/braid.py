"""Braid words with band generators and their closures.

Letters come in three shapes: plain Artin generators s_i / S_i, band
generators b(i,j) for the conjugated generator
(s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^-1, and explicit conjugates
c(w; i) = w s_i w^-1.  Quasipositivity is a property of the presentation:
a word is certified quasipositive when every top-level letter is a band, a
conjugate, or a positive generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .diagram import DiagramError, PlanarDiagram


class BraidError(ValueError):
    """Raised for malformed braid notation or out-of-range indices."""


@dataclass(frozen=True)
class Generator:
    index: int  # 1 <= index <= strands-1
    sign: int  # +1 for s_i, -1 for its inverse


@dataclass(frozen=True)
class Band:
    i: int
    j: int  # j >= i+1; Band(i, i+1) is just s_i


@dataclass(frozen=True)
class Conjugate:
    word: tuple  # tuple of letters
    index: int  # the conjugated positive generator


Letter = Union[Generator, Band, Conjugate]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("strand count must be >= 1")
        for letter in self.letters:
            _check_letter(letter, self.strands)


def _check_letter(letter: Letter, strands: int) -> None:
    if isinstance(letter, Generator):
        if not (1 <= letter.index <= strands - 1):
            raise BraidError(f"generator index {letter.index} out of range for {strands} strands")
        if letter.sign not in (1, -1):
            raise BraidError("generator sign must be +1 or -1")
    elif isinstance(letter, Band):
        if not (1 <= letter.i < letter.j <= strands):
            raise BraidError(f"band ({letter.i},{letter.j}) out of range for {strands} strands")
    elif isinstance(letter, Conjugate):
        if not (1 <= letter.index <= strands - 1):
            raise BraidError(f"conjugate core index {letter.index} out of range")
        for inner in letter.word:
            _check_letter(inner, strands)
    else:
        raise BraidError(f"unknown letter {letter!r}")


# --------------------------------------------------------------------------
# parsing: "k | s1 S2 b(2,4) c(s1 S2; 3)"
# --------------------------------------------------------------------------


def parse_braid(text: str) -> BraidWord:
    if "|" not in text:
        raise BraidError(f"braid notation needs 'strands | letters': {text!r}")
    head, _, body = text.partition("|")
    try:
        strands = int(head.strip())
    except ValueError as exc:
        raise BraidError(f"bad strand count {head.strip()!r}") from exc
    letters, pos = _parse_letters(body, 0, stop=None)
    return BraidWord(strands, tuple(letters))


def _parse_letters(s: str, pos: int, stop: str | None):
    letters = []
    while True:
        while pos < len(s) and s[pos] in " \t,":
            pos += 1
        if pos >= len(s):
            if stop is not None:
                raise BraidError("unterminated conjugate letter")
            return letters, pos
        if stop is not None and s[pos] == stop:
            return letters, pos
        ch = s[pos]
        if ch in "sS":
            m = _read_int(s, pos + 1)
            if m is None:
                raise BraidError(f"malformed generator token at {s[pos:]!r}")
            value, pos = m
            letters.append(Generator(value, 1 if ch == "s" else -1))
        elif ch == "b":
            pos = _expect(s, pos + 1, "(")
            m = _read_int(s, pos)
            if m is None:
                raise BraidError("malformed band token")
            i, pos = m
            pos = _expect(s, pos, ",")
            m = _read_int(s, pos)
            if m is None:
                raise BraidError("malformed band token")
            j, pos = m
            pos = _expect(s, pos, ")")
            letters.append(Band(i, j))
        elif ch == "c":
            pos = _expect(s, pos + 1, "(")
            inner, pos = _parse_letters(s, pos, stop=";")
            pos = _expect(s, pos, ";")
            m = _read_int(s, pos)
            if m is None:
                raise BraidError("malformed conjugate token")
            idx, pos = m
            pos = _expect(s, pos, ")")
            letters.append(Conjugate(tuple(inner), idx))
        else:
            raise BraidError(f"unexpected character {ch!r} in braid word")


def _read_int(s: str, pos: int):
    while pos < len(s) and s[pos] in " \t":
        pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start:
        return None
    return int(s[start:pos]), pos


def _expect(s: str, pos: int, ch: str) -> int:
    while pos < len(s) and s[pos] in " \t":
        pos += 1
    if pos >= len(s) or s[pos] != ch:
        raise BraidError(f"expected {ch!r} at position {pos} of braid word")
    return pos + 1


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def expand_bands(b: BraidWord) -> BraidWord:
    """Rewrite every band/conjugate letter into plain Artin generators."""
    out: list[Generator] = []
    for letter in b.letters:
        out.extend(_expand(letter))
    return BraidWord(b.strands, tuple(out))


def _expand(letter: Letter) -> list[Generator]:
    if isinstance(letter, Generator):
        return [letter]
    if isinstance(letter, Band):
        i, j = letter.i, letter.j
        if j == i + 1:
            return [Generator(i, 1)]
        w = [Generator(k, 1) for k in range(i, j - 1)]
        return w + [Generator(j - 1, 1)] + _inverse(w)
    if isinstance(letter, Conjugate):
        w: list[Generator] = []
        for inner in letter.word:
            w.extend(_expand(inner))
        return w + [Generator(letter.index, 1)] + _inverse(w)
    raise BraidError(f"unknown letter {letter!r}")


def _inverse(word: Sequence[Generator]) -> list[Generator]:
    return [Generator(g.index, -g.sign) for g in reversed(word)]


def exponent_sum(b: BraidWord) -> int:
    """Algebraic letter count after expansion; the writhe of the closure."""
    return sum(g.sign for g in expand_bands(b).letters)


def is_quasipositive_presentation(b: BraidWord) -> bool:
    return all(
        isinstance(l, (Band, Conjugate)) or (isinstance(l, Generator) and l.sign > 0)
        for l in b.letters
    )


def quasipositive_factor_count(b: BraidWord) -> int:
    """Number of w s w^-1 factors; each band and bare positive letter is one."""
    if not is_quasipositive_presentation(b):
        raise BraidError("word contains a negative generator outside a conjugating tail")
    return len(b.letters)


def s_quasipositive(b_count: int, strands: int) -> int:
    """Rasmussen invariant (= twice the slice genus) of a quasipositive closure."""
    return b_count - strands + 1


def bennequin_euler(b_count: int, strands: int) -> int:
    """Euler characteristic of the Bennequin surface of a quasipositive word."""
    return strands - b_count


def braid_permutation(b: BraidWord) -> list[int]:
    """Permutation of strand positions induced by the word (0-based)."""
    perm = list(range(b.strands))
    for g in expand_bands(b).letters:
        i = g.index - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def closure(b: BraidWord) -> PlanarDiagram:
    """Standard closure of the braid as an oriented knot diagram.

    Raises if the closure has more than one component.
    """
    word = expand_bands(b).letters
    k = b.strands
    if not word:
        if k == 1:
            return PlanarDiagram.unknot()
        raise BraidError(f"closure of the empty word on {k} strands is a {k}-component unlink")

    # Trace the number of closure components via the underlying permutation.
    perm = braid_permutation(b)
    seen = [False] * k
    cycles = 0
    for start in range(k):
        if seen[start]:
            continue
        cycles += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm.index(p)
    if cycles != 1:
        raise BraidError(f"braid closure is a {cycles}-component link, not a knot")

    # Wire up the crossings with symbolic arc ids, then relabel along the knot.
    next_id = [0]

    def fresh() -> int:
        next_id[0] += 1
        return next_id[0]

    top = [fresh() for _ in range(k)]
    cur = list(top)
    succ: dict[int, int] = {}
    records = []  # (tuple of symbolic arcs, sign)
    for g in word:
        i = g.index - 1
        left_in, right_in = cur[i], cur[i + 1]
        out_l, out_r = fresh(), fresh()
        if g.sign > 0:
            # under-strand NW->SE, over NE->SW; tuple ccw from under-in
            records.append(((left_in, out_l, out_r, right_in), 1))
            succ[left_in] = out_r
            succ[right_in] = out_l
        else:
            records.append(((right_in, left_in, out_l, out_r), -1))
            succ[right_in] = out_l
            succ[left_in] = out_r
        cur[i], cur[i + 1] = out_l, out_r

    # Closure identifies the bottom arc of each strand with its top arc.
    alias = {top[p]: cur[p] for p in range(k)}

    def resolve(x: int) -> int:
        while x in alias:
            x = alias[x]
        return x

    succ = {resolve(a): resolve(v) for a, v in succ.items()}
    records = [(tuple(resolve(x) for x in t), s) for t, s in records]

    start = resolve(top[0])
    labels: dict[int, int] = {}
    arc = start
    label = 1
    while arc not in labels:
        labels[arc] = label
        label += 1
        arc = succ[arc]
    if len(labels) != 2 * len(word):
        raise BraidError("internal error: closure traversal did not cover all arcs")

    tuples = [tuple(labels[x] for x in t) for t, _ in records]
    d = PlanarDiagram(tuples)
    # Sanity: the derived signs must reproduce the letter signs.
    for c, (_, s) in zip(d.crossings, records):
        if c.sign != s:
            raise BraidError("internal error: closure sign convention mismatch")
    return d
