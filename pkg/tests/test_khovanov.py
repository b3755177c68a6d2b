"""Cube of resolutions and bigraded homology ranks."""

import pytest

from knotslice.diagram import PlanarDiagram, add_kink, mirror, parse_dt, parse_pd
from knotslice.khovanov import (
    BigradedRanks,
    ResourceLimitError,
    build_cube,
    differential_blocks,
    homological_width,
    homology_ranks,
    poincare_polynomial,
)

TREFOIL_NEG = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"

# Rational Khovanov ranks of the right-handed trefoil.
TREFOIL_POS_RANKS = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}

FIG8_RANKS = {(-2, -5): 1, (-1, -1): 1, (0, -1): 1, (0, 1): 1, (1, 1): 1, (2, 5): 1}


def test_unknot_ranks():
    r = homology_ranks(PlanarDiagram.unknot())
    assert r.ranks == {(0, -1): 1, (0, 1): 1}
    assert homological_width(r) == 2


def test_trefoil_ranks_both_chiralities():
    neg = homology_ranks(parse_pd(TREFOIL_NEG))
    pos = homology_ranks(mirror(parse_pd(TREFOIL_NEG)))
    assert pos.ranks == TREFOIL_POS_RANKS
    assert neg.ranks == {(-i, -j): h for (i, j), h in TREFOIL_POS_RANKS.items()}


def test_figure_eight_ranks():
    assert homology_ranks(parse_dt("4 6 8 2")).ranks == FIG8_RANKS


def test_mirror_duality(small_corpus):
    for name, d in small_corpus.items():
        if d.n > 7:
            continue
        assert homology_ranks(mirror(d)) == homology_ranks(d).mirror(), name


def test_cube_circle_counts():
    cube = build_cube(parse_pd(TREFOIL_NEG))
    by_weight = {}
    for v in range(8):
        by_weight.setdefault(bin(v).count("1"), []).append(cube.circle_count[v])
    # all-0 resolution of this left-handed diagram has three circles; each
    # 1-smoothing merges a pair, and the all-1 resolution splits one back off
    assert sorted(by_weight[0]) == [3]
    assert sorted(by_weight[1]) == [2, 2, 2]
    assert sorted(by_weight[2]) == [1, 1, 1]
    assert sorted(by_weight[3]) == [2]


def test_differential_squares_to_zero():
    """d∘d = 0 on each quantum degree of the figure-eight complex."""
    import numpy as np

    blocks = {}
    for (i, j), entries, nrows, ncols, _src, _dst in differential_blocks(parse_dt("4 6 8 2")):
        m = np.zeros((nrows, ncols), dtype=np.int64)
        for r, c, v in entries:
            m[r, c] += v
        blocks[(i, j)] = m
    for (i, j), m in blocks.items():
        nxt = blocks.get((i + 1, j))
        if nxt is not None:
            assert not (nxt @ m).any(), (i, j)


def test_graded_euler_characteristic_is_diagram_independent():
    """Alternating i-sum of the Poincaré polynomial is the Jones polynomial,
    so it must agree across diagrams of the same knot."""

    def euler(d):
        r = homology_ranks(d)
        out = {}
        for (i, j), h in r.ranks.items():
            out[j] = out.get(j, 0) + (-1) ** i * h
        return {j: c for j, c in out.items() if c}

    base = parse_pd(TREFOIL_NEG)
    assert euler(base) == euler(add_kink(base, 2, 1))
    assert euler(base) == euler(add_kink(base, 5, -1))


def test_invariance_under_kinks():
    base = parse_dt("4 6 2")
    expected = homology_ranks(base)
    for arc, sign in [(1, 1), (1, -1), (4, 1), (4, -1)]:
        assert homology_ranks(add_kink(base, arc, sign)) == expected


def test_poincare_polynomial_round_trip():
    r = BigradedRanks({(0, 1): 1, (2, 5): 3})
    p = poincare_polynomial(r)
    assert p.coeffs == {(0, 1): 1, (2, 5): 3}


def test_homological_width_values(small_corpus):
    for name, d in small_corpus.items():
        expected = 3 if name == "8_19" else 2
        assert homological_width(homology_ranks(d)) == expected, name


def test_crossing_limit_enforced():
    d = parse_pd(TREFOIL_NEG)
    with pytest.raises(ResourceLimitError):
        homology_ranks(d, max_crossings=2)


def test_total_dim_limit_enforced():
    d = parse_pd(TREFOIL_NEG)
    with pytest.raises(ResourceLimitError):
        homology_ranks(d, max_total_dim=3)
