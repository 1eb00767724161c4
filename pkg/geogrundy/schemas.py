from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Dict, List, Optional, Tuple

from .conflict import Criterion
from .constructions.greedy import EdgeColoring, Stage
from .designs import Decomposition, LeaveKind
from .geometry import Edge


# Schemas for colorings
class Assignment(BaseModel):
    edge: Tuple[int, int]
    color: int = Field(ge=1)
    stage: Stage = Stage.CONSTRUCTED


class ColoringFile(BaseModel):
    n: int = Field(ge=1)
    criterion: Criterion
    assignments: List[Assignment]

    @model_validator(mode="after")
    def check_edges(self) -> "ColoringFile":
        seen = set()
        for item in self.assignments:
            a, b = item.edge
            if a == b or not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {list(item.edge)} is not an edge of K_{self.n}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"edge {list(key)} is assigned twice")
            seen.add(key)
        return self

    @classmethod
    def from_coloring(cls, col: EdgeColoring) -> "ColoringFile":
        return cls(
            n=col.n,
            criterion=col.criterion,
            assignments=[
                Assignment(edge=(e.a, e.b), color=col.colors[e], stage=col.stages.get(e, Stage.CONSTRUCTED))
                for e in sorted(col.colors)
            ],
        )

    def to_coloring(self) -> EdgeColoring:
        col = EdgeColoring(self.n, self.criterion)
        for item in self.assignments:
            col.assign(Edge.of(*item.edge), item.color, item.stage)
        return col


# Schemas for decompositions
class DecompositionFile(BaseModel):
    n: int
    triangles: List[Tuple[int, int, int]]
    leave: List[Tuple[int, int]]
    kind: LeaveKind

    @classmethod
    def from_decomposition(cls, d: Decomposition) -> "DecompositionFile":
        return cls(n=d.n, triangles=list(d.triangles), leave=[tuple(e) for e in d.leave], kind=d.kind)

    def to_decomposition(self) -> Decomposition:
        return Decomposition(self.n, tuple(self.triangles), tuple(Edge(a, b) for a, b in self.leave), self.kind)


# Schemas for reports
class ViolationOut(BaseModel):
    lower: int
    upper: int
    edge: Tuple[int, int]

    model_config = ConfigDict(from_attributes=True)


class ReportOut(BaseModel):
    n: int
    criterion: Criterion
    color_count: int
    proper: bool
    complete: bool
    grundy_property: bool
    singleton_class_count: int
    class_size_histogram: Dict[int, int]
    first_violation: Optional[ViolationOut] = None
    constructed_colors: int = 0
    construction: Optional[str] = None
    certified: Optional[bool] = None

    model_config = ConfigDict(from_attributes=True)


class OracleOut(BaseModel):
    n: int
    criterion: Criterion
    convex: bool
    seed: Optional[int] = None
    nodes: int
    exact_grundy: Optional[int] = None
    exact_pseudo_grundy: Optional[int] = None


class BoundsRow(BaseModel):
    n: int
    criterion: Criterion
    setting: str
    lower: str
    upper: int
    achieved: Optional[int] = None
