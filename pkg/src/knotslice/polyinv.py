"""Classical polynomial invariants: HOMFLY, v-span, Morton bounds,
Alexander polynomial, and the quasipositivity obstruction flags."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .diagram import PlanarDiagram, seifert_circles, writhe
from .poly import Laurent1, Laurent2
from .rasmussen import SResult
from .skein import DEFAULT_BUDGET, homfly_of_diagram


class PolynomialError(ValueError):
    """Raised when a polynomial operation receives invalid input."""


@dataclass(frozen=True)
class VSpan:
    e: int  # lowest v-exponent
    E: int  # highest v-exponent

    def __post_init__(self):
        if self.e > self.E:
            raise PolynomialError("v-span must satisfy e <= E")


def homfly(d: PlanarDiagram, budget: int = DEFAULT_BUDGET) -> Laurent2:
    """HOMFLY polynomial P(v, z) of a knot diagram.

    Computed by skein recursion toward descending diagrams with
    v^-1 P+ - v P- = z P0 and P(unknot) = 1.
    """
    return homfly_of_diagram(d, budget)


def v_span(p: Laurent2) -> VSpan:
    if p.is_zero():
        raise PolynomialError("zero polynomial has no v-span")
    return VSpan(p.min_exp(0), p.max_exp(0))


def morton_check(d: PlanarDiagram, span: VSpan) -> bool:
    """w - O + 1 <= e <= E <= w + O - 1 for this diagram."""
    w = writhe(d)
    o = seifert_circles(d)
    return w - o + 1 <= span.e and span.E <= w + o - 1


def alexander(p: Laurent2) -> Laurent1:
    """Alexander polynomial by the specialization v = 1, z = t^1/2 - t^-1/2.

    Knot HOMFLY polynomials only carry even z-exponents, so the
    half-integer powers cancel; leftovers signal a link or a bug.  The
    result satisfies the knot normalization (value 1 at t = 1, symmetric
    under t -> 1/t), which is asserted.
    """
    doubled: dict[int, int] = {}
    for (_a, b), coef in p.coeffs.items():
        if b < 0:
            raise PolynomialError("negative z-exponent: not a knot HOMFLY polynomial")
        for k in range(b + 1):
            e = b - 2 * k
            doubled[e] = doubled.get(e, 0) + coef * comb(b, k) * (-1) ** k
    out: dict[int, int] = {}
    for e, c in doubled.items():
        if c == 0:
            continue
        if e % 2:
            raise PolynomialError("half-integer exponent survives specialization")
        out[e // 2] = c
    delta = Laurent1(out)
    if delta(1) != 1 or delta != delta.reciprocal():
        raise PolynomialError("specialized polynomial fails the knot normalization")
    return delta


@dataclass(frozen=True)
class QPFlags:
    can_be_qp: bool
    can_be_mirror_qp: bool


def qp_obstruction(s: SResult, span: VSpan) -> QPFlags:
    """HOMFLY v-span obstruction to (strong) quasipositivity.

    A quasipositive knot has 0 <= s <= e; a mirror of one has E <= s <= 0.
    For an ambiguous s the flags are the union over the candidates, so
    True means "possible".
    """
    candidates = s.candidates()
    return QPFlags(
        can_be_qp=any(0 <= c <= span.e for c in candidates),
        can_be_mirror_qp=any(span.E <= c <= 0 for c in candidates),
    )
