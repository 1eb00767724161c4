import logging
from enum import Enum
from typing import Dict, Optional, Tuple

from ..conflict import Criterion
from ..exceptions import InputError
from ..geometry import PointSet, gen_convex, gen_general
from .bipartition import bipartition_classes, crossing_bipartition_coloring
from .circulant import circulant_classes, circulant_coloring, circulant_edges, rotations
from .greedy import EdgeColoring, Stage, greedy_complete
from .halving import halving_line_coloring
from .transversal import ConvexQuadruple, find_convex_quadruple, transversal_coloring
from .triangles import triangle_coloring

logger = logging.getLogger(__name__)


class Construction(str, Enum):
    CIRCULANT = "circulant"
    BIPARTITION = "bipartition"
    HALVING = "halving"
    TRIANGLE = "triangle"
    TRANSVERSAL = "transversal"


# First entry is the default criterion
CRITERIA: Dict[Construction, Tuple[Criterion, ...]] = {
    Construction.CIRCULANT: (Criterion.INTERSECTION,),
    Construction.BIPARTITION: (Criterion.CROSSING,),
    Construction.HALVING: (Criterion.DISJOINTNESS,),
    Construction.TRIANGLE: (Criterion.NONCROSSING,),
    Construction.TRANSVERSAL: (Criterion.CROSSING, Criterion.INTERSECTION),
}

CONVEX_ONLY = (Construction.CIRCULANT, Construction.BIPARTITION)


def requires_proper(name: Construction) -> bool:
    """Only the circulant construction is certified as a proper Grundy coloring"""
    return Construction(name) == Construction.CIRCULANT


def resolve_criterion(name: Construction, criterion: Optional[Criterion] = None) -> Criterion:
    name = Construction(name)
    allowed = CRITERIA[name]
    if criterion is None:
        return allowed[0]
    criterion = Criterion(criterion)
    if criterion not in allowed:
        supported = ", ".join(c.value for c in allowed)
        raise InputError(f"{name.value} construction supports {supported}, not {criterion.value}")
    return criterion


def points_for(name: Construction, n: int, seed: int, points: Optional[PointSet] = None) -> PointSet:
    """The point set a construction runs on: the convex n-gon, given points, or a seeded random set"""
    name = Construction(name)
    if name in CONVEX_ONLY:
        if points is not None and points.points != gen_convex(len(points)).points:
            raise InputError(f"{name.value} construction runs on the generated convex n-gon only")
        return gen_convex(n if points is None else len(points))
    if points is not None:
        return points
    return gen_general(n, seed)


def coloring_for(name: Construction, points: PointSet, criterion: Optional[Criterion] = None) -> EdgeColoring:
    """Run a construction by name after checking it supports the criterion"""
    name = Construction(name)
    criterion = resolve_criterion(name, criterion)
    n = len(points)

    if name in CONVEX_ONLY and points.points != gen_convex(n).points:
        raise InputError(f"{name.value} construction runs on the generated convex n-gon only")
    if name == Construction.CIRCULANT:
        return circulant_coloring(n)
    if name == Construction.BIPARTITION:
        return crossing_bipartition_coloring(n)
    if name == Construction.HALVING:
        return halving_line_coloring(points)
    if name == Construction.TRIANGLE:
        return triangle_coloring(points)
    return transversal_coloring(points, criterion)


__all__ = [
    "CONVEX_ONLY",
    "CRITERIA",
    "Construction",
    "ConvexQuadruple",
    "EdgeColoring",
    "Stage",
    "bipartition_classes",
    "circulant_classes",
    "circulant_coloring",
    "circulant_edges",
    "coloring_for",
    "crossing_bipartition_coloring",
    "find_convex_quadruple",
    "greedy_complete",
    "halving_line_coloring",
    "points_for",
    "requires_proper",
    "resolve_criterion",
    "rotations",
    "transversal_coloring",
    "triangle_coloring",
]
