"""
Pseudo-Grundy coloring under NonCrossing from a triangle decomposition.
"""
import logging
from functools import cmp_to_key
from typing import List

from ..conflict import Criterion
from ..designs import LeaveKind, hanani_decompose
from ..exceptions import InputError
from ..geometry import Edge, PointSet, cross
from .greedy import EdgeColoring, Stage

logger = logging.getLogger(__name__)


def drawing_order(s: PointSet, kind: LeaveKind) -> List[int]:
    """Point for each decomposition label, chosen so the canonical leave draws without crossings"""
    order = sorted(range(len(s)), key=lambda i: s[i])
    if kind == LeaveKind.FOUR_CYCLE:
        # Around the leftmost point the other three are in a half-plane
        pivot = s[order[0]]

        def ccw_first(i: int, j: int) -> int:
            return -1 if cross(pivot, s[i], s[j]) > 0 else 1

        order[1:4] = sorted(order[1:4], key=cmp_to_key(ccw_first))
    return order


def triangle_coloring(s: PointSet) -> EdgeColoring:
    """Each triangle its own color, then one color per leave edge"""
    n = len(s)
    if n < 3:
        raise InputError(f"triangle construction needs n >= 3, got {n}")

    d = hanani_decompose(n)
    order = drawing_order(s, d.kind)
    coloring = EdgeColoring(n, Criterion.NONCROSSING)

    color = 1
    for a, b, c in d.triangles:
        for u, v in ((a, b), (a, c), (b, c)):
            coloring.assign(Edge.of(order[u], order[v]), color, Stage.CONSTRUCTED)
        color += 1
    for e in d.leave:
        coloring.assign(Edge.of(order[e.a], order[e.b]), color, Stage.CONSTRUCTED)
        color += 1

    logger.info("triangles n=%s: %s triangles, %s leave edges", n, d.triangle_count, d.leave_size)
    return coloring
