"""
Proper Grundy coloring of the complete convex graph under Intersection.

Vertices are the points of gen_convex(n) in cyclic order. For each offset
i = 1..n/2 the circulant C_n({i}) is split into i + 1 classes of pairwise
disjoint edges: class (i, l) takes the edge e_{l, l+i} and its rotations by
multiples of i + 1. Classes are colored by increasing (i, l); the edges left
over are colored greedily.
"""
import logging
from typing import List

from ..conflict import ConflictGraph, Criterion
from ..exceptions import InputError
from ..geometry import Edge, gen_convex
from .greedy import EdgeColoring, assign_classes, greedy_complete

logger = logging.getLogger(__name__)


def circulant_edges(n: int, i: int) -> List[Edge]:
    """Edges of C_n({i}): n of them, or n/2 when i = n/2"""
    if not 1 <= i <= n // 2:
        raise InputError(f"offset must lie in 1..{n // 2}, got {i}")
    count = n // 2 if 2 * i == n else n
    return [Edge.of(x, (x + i) % n) for x in range(count)]


def rotations(n: int, i: int, l: int) -> List[Edge]:
    """Class (i, l): e_{x, x+i} for x = l + (i+1)c while the base edge's arc allows"""
    if not 1 <= i <= n // 2:
        raise InputError(f"offset must lie in 1..{n // 2}, got {i}")
    if not 0 <= l < class_count(n, i):
        raise InputError(f"offset {i} has classes 0..{class_count(n, i) - 1}, got {l}")
    last = (n - 1 - i) // (i + 1)
    return [Edge.of(x, (x + i) % n) for x in (l + (i + 1) * c for c in range(last + 1))]


def class_count(n: int, i: int) -> int:
    """i + 1 classes per offset, capped by the n/2 edges of the diameter circulant"""
    return n // 2 if 2 * i == n else i + 1


def circulant_classes(n: int) -> List[List[Edge]]:
    """Constructed classes in color order"""
    if n < 3:
        raise InputError(f"circulant construction needs n >= 3, got {n}")
    return [rotations(n, i, l) for i in range(1, n // 2 + 1) for l in range(class_count(n, i))]


def circulant_coloring(n: int) -> EdgeColoring:
    points = gen_convex(n)
    g = ConflictGraph(points, Criterion.INTERSECTION)
    partial = EdgeColoring(n, Criterion.INTERSECTION)
    assign_classes(partial, circulant_classes(n))
    logger.info("circulant n=%s: %s constructed colors", n, partial.constructed_colors)
    return greedy_complete(g, partial)
