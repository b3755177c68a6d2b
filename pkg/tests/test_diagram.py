"""PD-code parsing, diagram surgery, and the DT/pretzel constructors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotslice.diagram import (
    DiagramError,
    PlanarDiagram,
    add_kink,
    canonical_pd_string,
    mirror,
    parse_dt,
    parse_pd,
    pretzel,
    seifert_circles,
    switch_crossing,
    writhe,
)

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIG8_DT = "4 6 8 2"


def test_parse_pd_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert d.n == 3
    assert writhe(d) == -3
    assert seifert_circles(d) == 2


def test_parse_pd_rejects_garbage():
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3)")
    with pytest.raises(DiagramError):
        parse_pd("X(1,4,2,5) nonsense X(3,6,4,1)")
    with pytest.raises(DiagramError):
        parse_pd("")


def test_parse_pd_rejects_bad_labels():
    # arc 3 appears three times
    with pytest.raises(DiagramError):
        parse_pd("X(1,4,2,3) X(3,6,4,1) X(5,2,6,3)")


def test_unknot_diagram():
    u = PlanarDiagram.unknot()
    assert u.is_unknot_diagram
    assert writhe(u) == 0
    assert seifert_circles(u) == 1


def test_mirror_negates_writhe():
    d = parse_pd(TREFOIL_PD)
    assert writhe(mirror(d)) == 3
    assert mirror(mirror(d)).pd_tuples() == d.pd_tuples()


def test_switch_crossing_changes_one_sign():
    d = parse_pd(TREFOIL_PD)
    switched = switch_crossing(d, 0)
    assert writhe(switched) == writhe(d) + 2


def test_add_kink_adjusts_writhe():
    d = parse_pd(TREFOIL_PD)
    for arc in range(1, d.arc_count + 1):
        for sign in (1, -1):
            kinked = add_kink(d, arc, sign)
            assert kinked.n == d.n + 1
            assert writhe(kinked) == writhe(d) + sign


@given(st.integers(1, 6), st.sampled_from([1, -1]), st.integers(1, 8), st.sampled_from([1, -1]))
@settings(max_examples=40)
def test_double_kink_stays_valid(arc1, sign1, arc2, sign2):
    d = add_kink(parse_pd(TREFOIL_PD), arc1, sign1)
    d2 = add_kink(d, arc2, sign2)  # validation runs in the constructor
    assert d2.n == 5


def test_dt_trefoil_matches_pd():
    assert canonical_pd_string(parse_dt("4 6 2")) == canonical_pd_string(parse_pd(TREFOIL_PD))


def test_dt_figure_eight():
    d = parse_dt(FIG8_DT)
    assert d.n == 4
    assert writhe(d) == 0


def test_dt_rejects_odd_entries():
    with pytest.raises(DiagramError):
        parse_dt("3 5 1")


def test_dt_rejects_repeated_entries():
    with pytest.raises(DiagramError):
        parse_dt("4 4 2")


def test_dt_kinked_unknot():
    # pairing each odd passage with the next even one gives three kinks
    d = parse_dt("2 4 6")
    assert d.n == 3
    assert abs(writhe(d)) == 3


def test_canonical_pd_string_rotation_invariant():
    d = parse_pd(TREFOIL_PD)
    shifted = PlanarDiagram(
        [tuple((x % d.arc_count) + 1 for x in c.arcs) for c in d.crossings]
    )
    assert canonical_pd_string(shifted) == canonical_pd_string(d)


def test_pretzel_trefoils():
    assert writhe(pretzel(1, 1, 1)) == 3
    assert writhe(pretzel(-1, -1, -1)) == -3
    assert pretzel(-3, 5, 7).n == 15


def test_pretzel_rejects_links_and_trivia():
    with pytest.raises(DiagramError):
        pretzel(2, 2, 1)  # two even parameters give a 2-component link
    with pytest.raises(DiagramError):
        pretzel(3)
    with pytest.raises(DiagramError):
        pretzel(1, 0, 1)
