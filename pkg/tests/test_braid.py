"""Braid words, band generators, and closures."""

import pytest

from knotslice.braid import (
    BraidError,
    bennequin_euler,
    closure,
    expand_bands,
    exponent_sum,
    is_quasipositive_presentation,
    parse_braid,
    quasipositive_factor_count,
    s_quasipositive,
)
from knotslice.diagram import canonical_pd_string, mirror, parse_pd, writhe

FIG1_BRAID = "6 | s1 s2 b(2,4) b(3,6) b(1,4) s5 b(2,5)"


def test_parse_simple_word():
    w = parse_braid("3 | s1 S2 s1")
    assert w.strands == 3
    assert exponent_sum(w) == 1


def test_parse_rejects_bad_input():
    for bad in ["", "| s1", "3 | s3", "3 | s0", "2 | b(1,1)", "x | s1",
                "3 | q1", "3 | b(1,4)"]:
        with pytest.raises(BraidError):
            parse_braid(bad)


def test_band_generator_expansion():
    # b(i, i+1) is just s_i; wider bands conjugate it down
    assert expand_bands(parse_braid("3 | b(1,2)")).letters == \
        expand_bands(parse_braid("3 | s1")).letters
    wide = expand_bands(parse_braid("4 | b(1,4)"))
    assert len(wide.letters) == 5
    assert exponent_sum(wide) == 1


def test_conjugate_letters():
    w = parse_braid("3 | c(s2; 1)")
    expanded = expand_bands(w)
    assert len(expanded.letters) == 3
    assert exponent_sum(expanded) == 1
    assert is_quasipositive_presentation(w)


def test_figure_one_braid_counts():
    w = parse_braid(FIG1_BRAID)
    assert w.strands == 6
    assert is_quasipositive_presentation(w)
    assert quasipositive_factor_count(w) == 7
    assert exponent_sum(w) == 7
    assert bennequin_euler(7, 6) == 6 - 7
    assert s_quasipositive(7, 6) == 2


def test_closure_trefoil():
    d = closure(parse_braid("2 | s1 s1 s1"))
    assert d.n == 3
    assert writhe(d) == 3
    negative = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert canonical_pd_string(d) == canonical_pd_string(mirror(negative))


def test_closure_rejects_links():
    with pytest.raises(BraidError):
        closure(parse_braid("2 | s1 s1"))  # Hopf link permutation
    with pytest.raises(BraidError):
        closure(parse_braid("3 | s1"))  # strand 3 closes off alone


def test_closure_writhe_is_exponent_sum():
    for word in ["2 | s1 s1 s1", "3 | s1 s2 s1 s2", FIG1_BRAID]:
        w = parse_braid(word)
        assert writhe(closure(w)) == exponent_sum(w)
