"""
Pseudo-Grundy coloring in general position from four point groups whose
transversals are all in convex position.

The groups are found by a certified search: two crossing lines through the
median point give four targets, one per direction, and each group is the q
points nearest its target. A candidate is accepted only after every
transversal (a1, a2, a3, a4) has been checked to have crossing diagonals
a1a3 and a2a4, which puts the four points in convex position in that order.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..conflict import ConflictGraph, Criterion
from ..exceptions import InputError, QuadrupleNotFoundError
from ..geometry import Edge, PointSet, SegmentRelation, in_convex_position, segment_relation
from .greedy import EdgeColoring, Stage, greedy_complete

logger = logging.getLogger(__name__)

# Line directions tried, in degrees; the perpendicular line is implied
_ANGLES = tuple(range(0, 90, 15))
# Distance of the targets from the median point, as a share of the half extent
_SCALES = (0.75, 0.6, 0.9, 0.45, 0.3)

Group = Tuple[int, ...]


@dataclass(frozen=True)
class ConvexQuadruple:
    groups: Tuple[Group, Group, Group, Group]
    q: int

    def transversal_edges(self) -> Tuple[List[Edge], List[Edge]]:
        """Edges between A1 and A3, and between A2 and A4, lexicographically"""
        a1, a2, a3, a4 = self.groups
        first = sorted(Edge.of(u, v) for u in a1 for v in a3)
        second = sorted(Edge.of(u, v) for u in a2 for v in a4)
        return first, second


def certify_quadruple(s: PointSet, groups: Sequence[Sequence[int]]) -> bool:
    """True iff every transversal is in convex position with a1a3 crossing a2a4"""
    a1s, a2s, a3s, a4s = groups
    for a1 in a1s:
        for a3 in a3s:
            for a2 in a2s:
                for a4 in a4s:
                    if not in_convex_position(s[a1], s[a2], s[a3], s[a4]):
                        return False
                    if segment_relation(s, (a1, a3), (a2, a4)) != SegmentRelation.CROSSING:
                        return False
    return True


def _nearest(s: PointSet, target: Tuple[float, float], q: int) -> Group:
    tx, ty = target
    ranked = sorted(range(len(s)), key=lambda i: ((s[i].x - tx) ** 2 + (s[i].y - ty) ** 2, i))
    return tuple(sorted(ranked[:q]))


def _candidates(s: PointSet, q: int) -> Iterator[Tuple[Group, Group, Group, Group]]:
    xs = sorted(p.x for p in s)
    ys = sorted(p.y for p in s)
    cx, cy = xs[len(xs) // 2], ys[len(ys) // 2]
    half = min(xs[-1] - xs[0], ys[-1] - ys[0]) / 2

    for scale in _SCALES:
        for angle in _ANGLES:
            ux, uy = math.cos(math.radians(angle)), math.sin(math.radians(angle))
            r = scale * half
            # Counterclockwise: u, rot90(u), rot180(u), rot270(u)
            directions = ((ux, uy), (-uy, ux), (-ux, -uy), (uy, -ux))
            yield tuple(_nearest(s, (cx + r * dx, cy + r * dy), q) for dx, dy in directions)


def find_convex_quadruple(s: PointSet, q: Optional[int] = None) -> ConvexQuadruple:
    """Four disjoint groups of size q (default n // 20, shrinking on failure) with certified transversals"""
    n = len(s)
    target = n // 20 if q is None else q
    if target < 2:
        raise InputError(f"convex quadruple search needs groups of size >= 2, n={n} gives {target}")
    if 4 * target > n:
        raise InputError(f"four groups of {target} need at least {4 * target} points, got {n}")

    for size in range(target, 1, -1):
        for groups in _candidates(s, size):
            if len({i for group in groups for i in group}) < 4 * size:
                logger.debug("q=%s: candidate groups overlap", size)
                continue
            if certify_quadruple(s, groups):
                if size < target:
                    logger.warning("convex quadruple shrunk from q=%s to q=%s", target, size)
                return ConvexQuadruple(groups, size)
            logger.debug("q=%s: candidate has a transversal not in convex position", size)

    raise QuadrupleNotFoundError(f"no certified convex quadruple with groups of size >= 2 among {n} points")


def transversal_coloring(s: PointSet, c: Criterion = Criterion.CROSSING) -> EdgeColoring:
    """Both transversal matchings colored 1..q^2, then greedy completion"""
    c = Criterion(c)
    if c not in (Criterion.CROSSING, Criterion.INTERSECTION):
        raise InputError(f"transversal construction supports crossing or intersection, not {c.value}")

    quadruple = find_convex_quadruple(s)
    partial = EdgeColoring(len(s), c)
    for edges in quadruple.transversal_edges():
        for color, e in enumerate(edges, start=1):
            partial.assign(e, color, Stage.CONSTRUCTED)

    logger.info("transversal n=%s: q=%s, %s constructed colors", len(s), quadruple.q, partial.constructed_colors)
    return greedy_complete(ConflictGraph(s, c), partial)
