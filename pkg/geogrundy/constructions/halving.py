"""
Pseudo-Grundy coloring under Disjointness from a halving line.

The halving line through points a and b splits the rest into two sides.
Point a joins the smaller side and, for even n, b joins the larger one, so
both sides hold floor(n/2) points. Each side's edges take colors
1..C(floor(n/2), 2) in lexicographic order. An edge on one side is disjoint
from every edge on the other, so the paired classes satisfy the Grundy
property. For odd n the edges at b are left to greedy completion.
"""
import logging
from itertools import combinations
from typing import List, Tuple

from ..conflict import ConflictGraph, Criterion
from ..exceptions import InputError
from ..geometry import Edge, PointSet, halving_line
from .greedy import EdgeColoring, Stage, greedy_complete

logger = logging.getLogger(__name__)


def halving_sides(s: PointSet) -> Tuple[List[int], List[int]]:
    """The two vertex sides whose edges get the constructed colors"""
    line = halving_line(s)
    left, right = list(line.left), list(line.right)
    smaller, larger = (left, right) if len(left) <= len(right) else (right, left)
    side_a = sorted(smaller + [line.a])
    side_b = sorted(larger + [line.b]) if len(s) % 2 == 0 else sorted(larger)
    return side_a, side_b


def halving_line_coloring(s: PointSet) -> EdgeColoring:
    n = len(s)
    if n < 5:
        raise InputError(f"halving-line construction needs n >= 5, got {n}")

    side_a, side_b = halving_sides(s)
    partial = EdgeColoring(n, Criterion.DISJOINTNESS)
    for side in (side_a, side_b):
        for color, (u, v) in enumerate(combinations(side, 2), start=1):
            partial.assign(Edge.of(u, v), color, Stage.CONSTRUCTED)

    logger.info("halving line n=%s: %s constructed colors", n, partial.constructed_colors)
    g = ConflictGraph(s, Criterion.DISJOINTNESS)
    return greedy_complete(g, partial)
