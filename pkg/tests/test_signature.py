"""Knot signature from the Goeritz form with the correction term."""

from knotslice.diagram import add_kink, mirror, parse_pd
from knotslice.khovanov import homology_ranks
from knotslice.rasmussen import extract_s
from knotslice.signature import signature
from tests.conftest import ALTERNATING_ABS_S

TREFOIL_NEG = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_trefoil_signatures():
    assert signature(parse_pd(TREFOIL_NEG)) == -2
    assert signature(mirror(parse_pd(TREFOIL_NEG))) == 2


def test_signature_matches_s_on_alternating(small_corpus):
    for name in ALTERNATING_ABS_S:
        d = small_corpus[name]
        s = extract_s(homology_ranks(d)).determined
        assert signature(d) == s, name


def test_signature_mirror_antisymmetry(small_corpus):
    for name, d in small_corpus.items():
        if d.is_unknot_diagram:
            continue
        assert signature(mirror(d)) == -signature(d), name


def test_signature_kink_invariance():
    d = parse_pd(TREFOIL_NEG)
    for arc, sign in [(1, 1), (1, -1), (3, 1), (6, -1)]:
        assert signature(add_kink(d, arc, sign)) == -2, (arc, sign)


def test_eight_nineteen():
    # non-alternating check: the (3,4) torus knot has |sigma| = 6
    from knotslice.braid import closure, parse_braid

    d = closure(parse_braid("3 | s1 s2 s1 s2 s1 s2 s1 s2"))
    assert signature(d) == 6
    assert extract_s(homology_ranks(d)).determined == 6
