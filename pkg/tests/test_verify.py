import pytest
from hypothesis import given, settings, strategies as st

from geogrundy.conflict import ConflictGraph, Criterion
from geogrundy.constructions import EdgeColoring
from geogrundy.exceptions import InputError
from geogrundy.geometry import gen_convex, gen_general
from geogrundy.verify import (
    Violation,
    class_size_histogram,
    has_grundy_property,
    is_complete,
    is_grundy,
    is_proper,
    is_pseudo_grundy,
    singleton_count,
    verify_coloring,
)


def test_single_class_is_trivially_grundy(convex4_crossing, uniform_coloring):
    col = uniform_coloring(4, Criterion.CROSSING)
    assert is_pseudo_grundy(convex4_crossing, col)
    assert is_complete(convex4_crossing, col)
    # The two diagonals cross and share the class
    assert not is_proper(convex4_crossing, col)
    assert not is_grundy(convex4_crossing, col)


def test_diagonals_split_is_grundy(convex4_crossing, uniform_coloring):
    col = uniform_coloring(4, Criterion.CROSSING)
    col.assign((1, 3), 2)
    assert is_proper(convex4_crossing, col)
    assert is_grundy(convex4_crossing, col)


def test_violation_names_the_lowest_color(convex4_crossing, uniform_coloring):
    col = uniform_coloring(4, Criterion.CROSSING)
    col.assign((0, 1), 2)
    ok, violation = has_grundy_property(convex4_crossing, col)
    assert not ok
    # Side (0, 1) crosses nothing
    assert violation == Violation(1, 2, (0, 1))


def test_palette_gap_is_a_violation(convex4_crossing, uniform_coloring):
    col = uniform_coloring(4, Criterion.CROSSING, color=2)
    ok, violation = has_grundy_property(convex4_crossing, col)
    assert not ok
    assert violation.lower == 1


def test_partial_colorings_are_rejected(convex4_crossing):
    col = EdgeColoring(4, Criterion.CROSSING)
    col.assign((0, 1), 1)
    with pytest.raises(InputError, match="coloring is partial"):
        verify_coloring(convex4_crossing, col)


def test_size_mismatch_is_rejected(convex4_crossing, uniform_coloring):
    with pytest.raises(InputError):
        is_proper(convex4_crossing, uniform_coloring(5, Criterion.CROSSING))


def test_all_distinct_colors_on_a_triangle():
    g = ConflictGraph(gen_convex(3), Criterion.INTERSECTION)
    col = EdgeColoring(3, Criterion.INTERSECTION)
    for color, e in enumerate(g.edges, start=1):
        col.assign(e, color)
    report = verify_coloring(g, col)
    assert report.grundy
    assert report.complete
    assert report.singleton_class_count == 3
    assert report.class_size_histogram == {1: 3}
    assert report.first_violation is None


def test_histogram_and_singletons(uniform_coloring):
    col = uniform_coloring(5, Criterion.DISJOINTNESS)
    col.assign((0, 1), 2)
    col.assign((0, 2), 3)
    assert singleton_count(col) == 2
    assert class_size_histogram(col) == {1: 2, 8: 1}


def test_report_fields(convex4_crossing, uniform_coloring):
    col = uniform_coloring(4, Criterion.CROSSING)
    col.assign((1, 3), 2)
    report = verify_coloring(convex4_crossing, col)
    assert report.n == 4
    assert report.criterion == "crossing"
    assert report.color_count == 2
    assert report.constructed_colors == 2
    assert report.pseudo_grundy


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(list(Criterion)),
    st.integers(min_value=0, max_value=50),
    st.lists(st.integers(min_value=1, max_value=4), min_size=15, max_size=15),
)
def test_grundy_property_implies_complete(criterion, seed, colors):
    g = ConflictGraph(gen_general(6, seed), criterion)
    col = EdgeColoring(6, criterion)
    for e, color in zip(g.edges, colors):
        col.assign(e, color)
    if has_grundy_property(g, col)[0]:
        assert is_complete(g, col)
