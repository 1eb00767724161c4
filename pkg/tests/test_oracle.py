import random

import networkx as nx
import pytest

from geogrundy.bounds import counting_upper_bound, degree_upper_bound, incidence_upper_bound
from geogrundy.conflict import ConflictGraph, Criterion
from geogrundy.constructions import Construction, coloring_for, points_for
from geogrundy.exceptions import OracleSizeError
from geogrundy.geometry import all_edges, gen_convex, gen_general, make_point_set
from geogrundy.oracle import (
    GRUNDY_CAP,
    PSEUDO_GRUNDY_CAP,
    SmallInstance,
    disjoint_pair_exists,
    exact_grundy,
    exact_pseudo_grundy,
    greedy_grundy_number,
)


def test_crossing_square(convex4_crossing):
    instance = SmallInstance.from_conflict_graph(convex4_crossing)
    assert instance.size == 6
    assert exact_pseudo_grundy(instance) == 2
    assert exact_grundy(instance) == 2


def test_clique(clique3):
    instance = SmallInstance.from_networkx(clique3)
    assert exact_pseudo_grundy(instance) == 3
    assert exact_grundy(instance) == 3


def test_edgeless_graph():
    instance = SmallInstance.from_networkx(nx.empty_graph(5))
    assert exact_pseudo_grundy(instance) == 1
    assert exact_grundy(instance) == 1


def test_star():
    instance = SmallInstance.from_networkx(nx.star_graph(3))
    assert exact_grundy(instance) == 2
    assert exact_grundy(instance, method="classes") == 2


def test_path_on_four_nodes():
    # Greedy on 0, 3, 1, 2 gives 1, 1, 2, 3
    instance = SmallInstance.from_networkx(nx.path_graph(4))
    assert exact_grundy(instance) == 3


def test_intersection_square_by_both_methods(convex4):
    # Opposite sides are the only disjoint pairs
    instance = SmallInstance.from_conflict_graph(ConflictGraph(convex4, Criterion.INTERSECTION))
    assert exact_grundy(instance, method="orderings") == 4
    assert exact_grundy(instance, method="classes") == 4


def test_size_caps():
    with pytest.raises(OracleSizeError):
        exact_pseudo_grundy(SmallInstance.from_networkx(nx.empty_graph(PSEUDO_GRUNDY_CAP + 1)))
    with pytest.raises(OracleSizeError):
        exact_grundy(SmallInstance.from_networkx(nx.empty_graph(GRUNDY_CAP + 1)))
    with pytest.raises(OracleSizeError):
        greedy_grundy_number(SmallInstance.from_networkx(nx.empty_graph(9)))


@pytest.mark.parametrize("seed", range(12))
def test_methods_agree_on_random_graphs(seed):
    graph = nx.gnp_random_graph(7, 0.45, seed=seed)
    instance = SmallInstance.from_networkx(graph)
    grundy = exact_grundy(instance, method="orderings")
    assert grundy == exact_grundy(instance, method="classes")
    assert grundy <= exact_pseudo_grundy(instance)
    assert grundy <= max((d for _, d in graph.degree), default=0) + 1


@pytest.mark.parametrize("criterion", list(Criterion))
@pytest.mark.parametrize("points", [gen_convex(4), gen_general(4, 3), gen_convex(5), gen_general(5, 2)])
def test_exact_indices_respect_upper_bounds(points, criterion):
    g = ConflictGraph(points, criterion)
    instance = SmallInstance.from_conflict_graph(g)
    pseudo = exact_pseudo_grundy(instance)
    grundy = exact_grundy(instance)
    assert 1 <= grundy <= pseudo
    assert pseudo <= degree_upper_bound(g)
    assert pseudo <= incidence_upper_bound(g)
    if points.convex and criterion != Criterion.NONCROSSING:
        assert pseudo <= counting_upper_bound(len(points), criterion)


def test_disjoint_pair_examples(square):
    star = [(0, 1), (0, 2), (0, 3)]
    assert disjoint_pair_exists(square, star) is False

    parallel = make_point_set([(0, 0), (1, 0), (0, 3), (1, 3)])
    assert disjoint_pair_exists(parallel, [(0, 1), (2, 3)]) is True


@pytest.mark.parametrize("n", range(4, 11))
def test_n_plus_one_edges_contain_a_disjoint_pair(n):
    rng = random.Random(n)
    edges = all_edges(n)
    for seed in range(1000):
        s = gen_general(n, seed)
        assert disjoint_pair_exists(s, rng.sample(edges, n + 1))


@pytest.mark.parametrize(
    "name,n,criterion,solver",
    [
        (Construction.CIRCULANT, 4, Criterion.INTERSECTION, exact_grundy),
        (Construction.CIRCULANT, 5, Criterion.INTERSECTION, exact_grundy),
        (Construction.HALVING, 5, Criterion.DISJOINTNESS, exact_pseudo_grundy),
        (Construction.TRIANGLE, 4, Criterion.NONCROSSING, exact_pseudo_grundy),
        (Construction.TRIANGLE, 5, Criterion.NONCROSSING, exact_pseudo_grundy),
    ],
)
def test_constructions_sit_between_exact_index_and_counting_bound(name, n, criterion, solver):
    points = points_for(name, n, 1)
    coloring = coloring_for(name, points, criterion)
    exact = solver(SmallInstance.from_conflict_graph(ConflictGraph(points, criterion)))
    assert coloring.color_count <= exact <= counting_upper_bound(n, criterion)
