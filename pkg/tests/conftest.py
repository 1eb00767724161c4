import random

import networkx as nx
import pytest

from geogrundy.conflict import ConflictGraph, Criterion
from geogrundy.constructions import EdgeColoring
from geogrundy.exceptions import InputError
from geogrundy.geometry import all_edges, gen_convex, make_point_set


@pytest.fixture
def square():
    # 0-1 and 2-3 are the diagonals
    return make_point_set([(0, 0), (2, 2), (0, 2), (2, 0)])


@pytest.fixture
def convex4():
    return gen_convex(4)


@pytest.fixture
def convex4_crossing(convex4):
    return ConflictGraph(convex4, Criterion.CROSSING)


@pytest.fixture
def clique3():
    return nx.complete_graph(3)


@pytest.fixture
def uniform_coloring():
    """Factory for a coloring of K_n with every edge in one class"""

    def make(n: int, criterion: Criterion, color: int = 1) -> EdgeColoring:
        col = EdgeColoring(n, criterion)
        for e in all_edges(n):
            col.assign(e, color)
        return col

    return make


@pytest.fixture
def compass_clusters():
    """Four tight clusters of five points at the compass directions"""
    rng = random.Random(5)
    centers = [(1000, 0), (0, 1000), (-1000, 0), (0, -1000)]
    coords = []
    for cx, cy in centers:
        placed = 0
        while placed < 5:
            candidate = (cx + rng.randint(-50, 50), cy + rng.randint(-50, 50))
            try:
                make_point_set(coords + [candidate])
            except InputError:
                continue
            coords.append(candidate)
            placed += 1
    groups = [frozenset(range(5 * k, 5 * k + 5)) for k in range(4)]
    return make_point_set(coords), groups
