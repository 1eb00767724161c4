from itertools import combinations
from math import comb

import pytest

from geogrundy.conflict import (
    ConflictGraph,
    Criterion,
    adjacent,
    build_conflict_graph,
    crossing_count,
    edge_index,
    iter_bits,
    max_edge_degree,
)
from geogrundy.exceptions import InputError
from geogrundy.geometry import all_edges, gen_convex, gen_general


def test_adjacent_examples(square):
    diagonals = ((0, 1), (2, 3))
    assert adjacent(square, *diagonals, Criterion.DISJOINTNESS) is False
    assert adjacent(square, *diagonals, Criterion.CROSSING) is True
    assert adjacent(square, (0, 2), (0, 3), Criterion.NONCROSSING) is True
    assert adjacent(square, (0, 2), (0, 3), Criterion.INTERSECTION) is True
    assert adjacent(square, (0, 2), (0, 3), Criterion.CROSSING) is False


def test_edge_index_is_lexicographic_position():
    for n in (3, 4, 7, 12):
        assert [edge_index(n, a, b) for a, b in all_edges(n)] == list(range(comb(n, 2)))


def test_iter_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b101001)) == [0, 3, 5]


@pytest.mark.parametrize(
    "n,criterion,pairs",
    [
        (4, Criterion.CROSSING, 1),
        (4, Criterion.INTERSECTION, 13),
        (4, Criterion.DISJOINTNESS, 2),
        (4, Criterion.NONCROSSING, 14),
        (3, Criterion.DISJOINTNESS, 0),
        (3, Criterion.INTERSECTION, 3),
    ],
)
def test_adjacent_pair_counts_on_convex_sets(n, criterion, pairs):
    assert build_conflict_graph(gen_convex(n), criterion).adjacent_pairs() == pairs


@pytest.mark.parametrize("criterion", list(Criterion))
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_rows_match_pairwise_predicate(criterion, seed):
    s = gen_general(9, seed)
    g = ConflictGraph(s, criterion)
    for i, j in combinations(range(g.size), 2):
        expected = adjacent(s, g.edges[i], g.edges[j], criterion)
        assert g.adjacent(i, j) == expected
        assert g.adjacent(j, i) == expected
    assert not any(g.adjacent(i, i) for i in range(g.size))


@pytest.mark.parametrize("criterion", list(Criterion))
def test_lazy_rows_equal_dense_rows(criterion):
    s = gen_general(12, 4)
    dense = ConflictGraph(s, criterion, dense=True)
    lazy = ConflictGraph(s, criterion, dense=False)
    assert [lazy.neighbors(i) for i in reversed(range(lazy.size))][::-1] == [
        dense.neighbors(i) for i in range(dense.size)
    ]


def test_criteria_are_complements():
    s = gen_general(10, 8)
    crossing = ConflictGraph(s, Criterion.CROSSING)
    intersection = ConflictGraph(s, Criterion.INTERSECTION)
    disjointness = ConflictGraph(s, Criterion.DISJOINTNESS)
    noncrossing = ConflictGraph(s, Criterion.NONCROSSING)
    for i in range(crossing.size):
        others = crossing.full_mask & ~(1 << i)
        assert crossing.neighbors(i) | noncrossing.neighbors(i) == others
        assert crossing.neighbors(i) & noncrossing.neighbors(i) == 0
        assert intersection.neighbors(i) | disjointness.neighbors(i) == others
        assert intersection.neighbors(i) & crossing.neighbors(i) == crossing.neighbors(i)


@pytest.mark.parametrize("n", range(4, 13))
def test_convex_crossing_count_is_n_choose_4(n):
    assert crossing_count(gen_convex(n)) == comb(n, 4)


def test_max_edge_degree_of_convex_hexagon():
    # The long diagonals split the other four points 2/2
    assert max_edge_degree(ConflictGraph(gen_convex(6), Criterion.CROSSING)) == 4


@pytest.mark.parametrize("n", range(4, 21))
def test_max_edge_degree_of_convex_drawings(n):
    # A diagonal splitting the other points as evenly as possible
    expected = ((n - 2) // 2) * ((n - 1) // 2)
    assert max_edge_degree(ConflictGraph(gen_convex(n), Criterion.CROSSING)) == expected


@pytest.mark.parametrize("criterion,expected", [(Criterion.CROSSING, 1), (Criterion.INTERSECTION, 5)])
def test_max_edge_degree_of_convex_quadrilateral(criterion, expected):
    assert max_edge_degree(ConflictGraph(gen_convex(4), criterion)) == expected


def test_max_edge_degree_rejects_other_criteria():
    with pytest.raises(InputError):
        max_edge_degree(ConflictGraph(gen_convex(5), Criterion.DISJOINTNESS))


def test_to_networkx_matches_rows():
    g = ConflictGraph(gen_general(8, 2), Criterion.INTERSECTION)
    graph = g.to_networkx()
    assert graph.number_of_nodes() == g.size
    assert graph.number_of_edges() == g.adjacent_pairs()
    assert graph.graph["criterion"] == "intersection"


def test_edge_id_rejects_foreign_edges(convex4_crossing):
    assert convex4_crossing.edge_id((3, 1)) == edge_index(4, 1, 3)
    with pytest.raises(InputError):
        convex4_crossing.edge_id((0, 4))
