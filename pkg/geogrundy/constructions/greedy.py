"""
Edge colorings and greedy completion.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence

from ..conflict import ConflictGraph, Criterion
from ..exceptions import InputError
from ..geometry import Edge

logger = logging.getLogger(__name__)


class Stage(str, Enum):
    CONSTRUCTED = "constructed"
    GREEDY = "greedy"


@dataclass
class EdgeColoring:
    """Colors of the edges of K_n, each tagged with the stage that assigned it"""

    n: int
    criterion: Criterion
    colors: Dict[Edge, int] = field(default_factory=dict)
    stages: Dict[Edge, Stage] = field(default_factory=dict)

    def assign(self, e: Sequence[int], color: int, stage: Stage = Stage.CONSTRUCTED) -> None:
        edge = Edge.of(e[0], e[1])
        if not 0 <= edge.a < edge.b < self.n:
            raise InputError(f"edge {tuple(e)} is not an edge of K_{self.n}")
        if color < 1:
            raise InputError(f"colors are positive integers, got {color} for edge {tuple(edge)}")
        self.colors[edge] = color
        self.stages[edge] = stage

    def is_total(self) -> bool:
        return len(self.colors) == comb(self.n, 2)

    @property
    def color_count(self) -> int:
        return max(self.colors.values(), default=0)

    @property
    def constructed_colors(self) -> int:
        """Number of distinct colors used by the constructed stage"""
        return len({c for e, c in self.colors.items() if self.stages.get(e) == Stage.CONSTRUCTED})

    def classes(self) -> Dict[int, List[Edge]]:
        grouped: Dict[int, List[Edge]] = defaultdict(list)
        for e in sorted(self.colors):
            grouped[self.colors[e]].append(e)
        return dict(sorted(grouped.items()))

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.n, self.criterion, dict(self.colors), dict(self.stages))


def assign_classes(coloring: EdgeColoring, classes: Iterable[Iterable[Sequence[int]]], first_color: int = 1) -> int:
    """Give each class the next color, starting at first_color; returns the next unused color"""
    color = first_color
    for edges in classes:
        for e in edges:
            coloring.assign(e, color, Stage.CONSTRUCTED)
        color += 1
    return color


def greedy_complete(
    g: ConflictGraph, partial: EdgeColoring, order: Optional[Iterable[Sequence[int]]] = None
) -> EdgeColoring:
    """Color every uncolored edge, in order, with the smallest color missing from its neighbors"""
    if partial.n != g.n:
        raise InputError(f"coloring is for K_{partial.n} but the conflict graph is for K_{g.n}")

    result = partial.copy()
    result.criterion = g.criterion
    masks: Dict[int, int] = defaultdict(int)
    for e, c in result.colors.items():
        masks[c] |= 1 << g.edge_id(e)

    before = result.color_count
    for e in (g.edges if order is None else order):
        edge = Edge.of(e[0], e[1])
        if edge in result.colors:
            continue
        i = g.edge_id(edge)
        row = g.neighbors(i)
        color = 1
        while row & masks[color]:
            color += 1
        result.colors[edge] = color
        result.stages[edge] = Stage.GREEDY
        masks[color] |= 1 << i

    if not result.is_total():
        raise InputError("edge order does not cover every uncolored edge")
    logger.info(
        "greedy completion under %s: %s -> %s colors", g.criterion.value, before, result.color_count
    )
    return result
