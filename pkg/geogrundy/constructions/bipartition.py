"""
Pseudo-Grundy coloring of the complete convex graph under Crossing.

Take m, the largest power of two <= n, and cut the first m vertices of the
convex n-gon into b = m/s consecutive blocks of size s for s = 2, 4, ..., m/4.
At block size s, each pair (a, c) of in-block positions gives one class:
the edges from position a of block t to position c of block t + 2 (mod b).
Cyclically consecutive edges of a class cross, and every edge of a coarser
level crosses some edge of each finer class, so colors run from the finest
level up and the constructed classes take colors 1..(m^2 - 16)/12.
"""
import logging
from typing import List

from ..conflict import ConflictGraph, Criterion
from ..exceptions import InputError
from ..geometry import Edge, gen_convex
from .greedy import EdgeColoring, assign_classes, greedy_complete

logger = logging.getLogger(__name__)


def largest_power_of_two(n: int) -> int:
    return 1 << (n.bit_length() - 1)


def bipartition_classes(n: int) -> List[List[Edge]]:
    """Constructed classes in color order; edges of a class are listed so neighbors cross"""
    if n < 8:
        raise InputError(f"crossing bipartition needs n >= 8, got {n}")
    m = largest_power_of_two(n)

    classes: List[List[Edge]] = []
    s = 2
    while 4 * s <= m:
        b = m // s
        # With four blocks, starting at block 2 or 3 repeats the edges of block 0 or 1
        starts = range(2) if b == 4 else range(b)
        for a in range(s):
            for c in range(s):
                classes.append([Edge.of(t * s + a, ((t + 2) % b) * s + c) for t in starts])
        s *= 2
    return classes


def crossing_bipartition_coloring(n: int) -> EdgeColoring:
    classes = bipartition_classes(n)
    points = gen_convex(n)
    g = ConflictGraph(points, Criterion.CROSSING)
    partial = EdgeColoring(n, Criterion.CROSSING)
    assign_classes(partial, classes)
    logger.info("crossing bipartition n=%s: %s constructed colors", n, len(classes))
    return greedy_complete(g, partial)
