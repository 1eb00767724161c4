"""
Certification of edge colorings against a conflict graph.

Each color class is a bitset over edge indices, and so is the set of edges
adjacent to a class (the OR of its members' rows). With those two per color,
every check below is a pass of big-integer ANDs over the palette.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from .conflict import ConflictGraph, iter_bits
from .constructions.greedy import EdgeColoring
from .exceptions import InputError
from .geometry import Edge

logger = logging.getLogger(__name__)


class Violation(NamedTuple):
    """An edge of color `upper` with no neighbor of color `lower`"""
    lower: int
    upper: int
    edge: Edge


@dataclass
class VerificationReport:
    n: int
    criterion: str
    color_count: int
    proper: bool
    complete: bool
    grundy_property: bool
    singleton_class_count: int
    class_size_histogram: Dict[int, int] = field(default_factory=dict)
    first_violation: Optional[Violation] = None
    constructed_colors: int = 0

    @property
    def pseudo_grundy(self) -> bool:
        return self.grundy_property

    @property
    def grundy(self) -> bool:
        return self.proper and self.grundy_property


class _Palette:
    """Per-color class bitsets and neighborhood bitsets of a total coloring"""

    def __init__(self, g: ConflictGraph, col: EdgeColoring):
        if col.n != g.n:
            raise InputError(f"coloring is for K_{col.n} but the conflict graph is for K_{g.n}")
        for e in g.edges:
            if e not in col.colors:
                raise InputError(f"coloring is partial: edge ({e.a}, {e.b}) has no color")
        if len(col.colors) != g.size:
            raise InputError("coloring assigns colors to edges outside K_n")

        self.members: Dict[int, int] = {}
        self.reach: Dict[int, int] = {}
        for e, c in col.colors.items():
            if c < 1:
                raise InputError(f"edge ({e.a}, {e.b}) has non-positive color {c}")
            i = g.edge_id(e)
            self.members[c] = self.members.get(c, 0) | (1 << i)
            self.reach[c] = self.reach.get(c, 0) | g.neighbors(i)
        self.colors: List[int] = sorted(self.members)
        self.k = self.colors[-1] if self.colors else 0


def is_proper(g: ConflictGraph, col: EdgeColoring) -> bool:
    """No two adjacent edges share a color"""
    palette = _Palette(g, col)
    return all(palette.members[c] & palette.reach[c] == 0 for c in palette.colors)


def is_complete(g: ConflictGraph, col: EdgeColoring) -> bool:
    """Every pair of color classes has an adjacent representative pair"""
    palette = _Palette(g, col)
    for index, j in enumerate(palette.colors):
        for i in palette.colors[:index]:
            if palette.reach[j] & palette.members[i] == 0:
                return False
    return True


def has_grundy_property(g: ConflictGraph, col: EdgeColoring) -> Tuple[bool, Optional[Violation]]:
    """Every edge of color j has a neighbor of each color i < j; on failure the witness with smallest i"""
    palette = _Palette(g, col)
    above = 0
    for c in palette.colors:
        above |= palette.members[c]

    for i in range(1, palette.k):
        above &= ~palette.members.get(i, 0)
        missing = above & ~palette.reach.get(i, 0)
        if missing:
            edge = g.edges[next(iter_bits(missing))]
            return False, Violation(i, col.colors[edge], edge)
    return True, None


def is_pseudo_grundy(g: ConflictGraph, col: EdgeColoring) -> bool:
    return has_grundy_property(g, col)[0]


def is_grundy(g: ConflictGraph, col: EdgeColoring) -> bool:
    return is_proper(g, col) and has_grundy_property(g, col)[0]


def singleton_count(col: EdgeColoring) -> int:
    """Number of colors used exactly once"""
    return sum(1 for size in Counter(col.colors.values()).values() if size == 1)


def class_size_histogram(col: EdgeColoring) -> Dict[int, int]:
    """Class size -> number of classes of that size"""
    sizes = Counter(Counter(col.colors.values()).values())
    return dict(sorted(sizes.items()))


def verify_coloring(g: ConflictGraph, col: EdgeColoring) -> VerificationReport:
    grundy_property, violation = has_grundy_property(g, col)
    report = VerificationReport(
        n=g.n,
        criterion=g.criterion.value,
        color_count=col.color_count,
        proper=is_proper(g, col),
        complete=is_complete(g, col),
        grundy_property=grundy_property,
        singleton_class_count=singleton_count(col),
        class_size_histogram=class_size_histogram(col),
        first_violation=violation,
        constructed_colors=col.constructed_colors,
    )
    if violation is not None:
        logger.info(
            "edge (%s, %s) of color %s has no neighbor of color %s",
            violation.edge.a, violation.edge.b, violation.upper, violation.lower,
        )
    return report
