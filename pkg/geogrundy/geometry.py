"""
Exact planar geometry on integer points.

Every predicate is computed with Python integers, so orientation and
crossing tests are exact for any coordinates inside the declared bound.
Floating point only appears when gen_convex places points on a circle, and
the result is re-checked with the exact predicates before it is returned.
"""
import logging
import math
import random
from dataclasses import dataclass
from enum import Enum, IntEnum
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import config
from .exceptions import GenerationError, GeoGrundyError, InputError

logger = logging.getLogger(__name__)

# |x|, |y| <= 2^30 keeps every determinant below 2^63 in magnitude
COORD_BOUND = 1 << 30


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class SegmentRelation(str, Enum):
    SHARED_ENDPOINT = "shared_endpoint"
    CROSSING = "crossing"
    DISJOINT = "disjoint"


class Point(NamedTuple):
    x: int
    y: int


class Edge(NamedTuple):
    """Unordered vertex pair stored with a < b"""
    a: int
    b: int

    @classmethod
    def of(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise InputError(f"an edge needs two distinct vertices, got {u} twice")
        return cls(u, v) if u < v else cls(v, u)


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Point, ...]
    convex: bool = False

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def __iter__(self):
        return iter(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def edges(self) -> List[Edge]:
        return all_edges(len(self.points))


@dataclass(frozen=True)
class HalvingLine:
    a: int
    b: int
    left: Tuple[int, ...]
    right: Tuple[int, ...]

    @property
    def sides(self) -> Tuple[int, int]:
        return len(self.left), len(self.right)


def all_edges(n: int) -> List[Edge]:
    """All C(n, 2) edges in lexicographic order"""
    return [Edge(a, b) for a, b in combinations(range(n), 2)]


def cross(p: Point, q: Point, r: Point) -> int:
    """Twice the signed area of the triangle pqr"""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Turn direction of p -> q -> r"""
    d = cross(p, q, r)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def segment_relation(s: PointSet, e: Sequence[int], f: Sequence[int]) -> SegmentRelation:
    """Classify two edges of the drawing as sharing an endpoint, crossing or disjoint"""
    ea, eb = e[0], e[1]
    fa, fb = f[0], f[1]
    if {ea, eb} == {fa, fb}:
        raise InputError(f"segment_relation needs two distinct edges, got {tuple(e)} twice")
    if ea in (fa, fb) or eb in (fa, fb):
        return SegmentRelation.SHARED_ENDPOINT

    p1, p2, q1, q2 = s[ea], s[eb], s[fa], s[fb]
    if (orientation(p1, p2, q1) * orientation(p1, p2, q2) < 0
            and orientation(q1, q2, p1) * orientation(q1, q2, p2) < 0):
        return SegmentRelation.CROSSING
    return SegmentRelation.DISJOINT


def in_convex_position(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Four points are in convex position iff none lies inside the triangle of the others"""
    quad = (p1, p2, p3, p4)
    for i in range(4):
        t0, t1, t2 = (quad[j] for j in range(4) if j != i)
        p = quad[i]
        o1, o2, o3 = orientation(t0, t1, p), orientation(t1, t2, p), orientation(t2, t0, p)
        if o1 == o2 == o3 != Orientation.COLLINEAR:
            return False
    return True


def convex_hull(points: Sequence[Point]) -> List[int]:
    """Indices of the strict hull vertices, counterclockwise (monotone chain)"""
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) < 3:
        return order

    def chain(indices: Iterable[int]) -> List[int]:
        hull: List[int] = []
        for i in indices:
            while len(hull) >= 2 and cross(points[hull[-2]], points[hull[-1]], points[i]) <= 0:
                hull.pop()
            hull.append(i)
        return hull

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def is_convex_position(s: PointSet) -> bool:
    return len(convex_hull(s.points)) == len(s)


def check_point_set(coords: Sequence[Tuple[int, int]]) -> Tuple[bool, str]:
    """Check the coordinate bound, distinctness and general position"""
    if len(coords) == 0:
        return False, "point set is empty"
    for index, (x, y) in enumerate(coords):
        if not (isinstance(x, int) and isinstance(y, int)):
            return False, f"point {index} has non-integer coordinates"
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            return False, f"point {index} exceeds the coordinate bound 2^30"

    seen = {}
    for index, p in enumerate(coords):
        if tuple(p) in seen:
            return False, f"points {seen[tuple(p)]} and {index} coincide"
        seen[tuple(p)] = index

    # Two later points in the same reduced direction from point i are collinear with it
    for i, (xi, yi) in enumerate(coords):
        directions = {}
        for j in range(i + 1, len(coords)):
            dx, dy = coords[j][0] - xi, coords[j][1] - yi
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in directions:
                return False, f"points {i}, {directions[(dx, dy)]} and {j} are collinear"
            directions[(dx, dy)] = j
    return True, "ok"


def make_point_set(coords: Sequence[Tuple[int, int]], convex: bool = False) -> PointSet:
    """Validate raw coordinates and wrap them as a PointSet"""
    ok, reason = check_point_set(coords)
    if not ok:
        raise InputError(reason)
    s = PointSet(tuple(Point(int(x), int(y)) for x, y in coords), convex=convex)
    if convex and not is_convex_position(s):
        raise InputError("points are flagged convex but some point is not a hull vertex")
    return s


def _turns_clockwise(points: Sequence[Point]) -> bool:
    n = len(points)
    return all(
        orientation(points[k - 1], points[k], points[(k + 1) % n]) == Orientation.CW
        for k in range(n)
    )


def gen_convex(n: int) -> PointSet:
    """n points of a regular n-gon snapped to the integer grid, clockwise from the top"""
    if n < 3:
        raise InputError(f"gen_convex needs n >= 3, got {n}")

    radius = max(config.CONVEX_RADIUS, 4 * n * n)
    points = []
    for k in range(n):
        theta = math.pi / 2 - 2 * math.pi * k / n
        points.append(Point(round(radius * math.cos(theta)), round(radius * math.sin(theta))))

    if not _turns_clockwise(points):
        # Snapping broke strict convexity; a concave parabola is always safe
        logger.debug("circle snap for n=%s not strictly convex, using parabola", n)
        points = [Point(k, -k * k) for k in range(n)]

    return PointSet(tuple(points), convex=True)


def gen_general(n: int, seed: int, grid: Optional[int] = None, retries: Optional[int] = None) -> PointSet:
    """n random grid points in general position, redrawing any point that would create a collinear triple"""
    if n < 3:
        raise InputError(f"gen_general needs n >= 3, got {n}")
    grid = grid or config.GRID_SIZE
    retries = retries or config.RETRY_BUDGET
    if grid > COORD_BOUND:
        raise InputError("grid exceeds the coordinate bound 2^30")

    rng = random.Random(seed)
    points: List[Point] = []
    taken = set()
    for index in range(n):
        for _ in range(retries):
            p = Point(rng.randrange(grid), rng.randrange(grid))
            if p in taken:
                continue
            if any(cross(q, r, p) == 0 for q, r in combinations(points, 2)):
                continue
            break
        else:
            raise GenerationError(
                f"could not place point {index} of {n} on a {grid}x{grid} grid "
                f"after {retries} draws; the grid is too small"
            )
        points.append(p)
        taken.add(p)

    return PointSet(tuple(points), convex=False)


def halving_line(s: PointSet) -> HalvingLine:
    """Lexicographically first pair (a, b) whose line splits the other points evenly"""
    n = len(s)
    if n < 4:
        raise InputError(f"halving_line needs n >= 4, got {n}")

    for a, b in combinations(range(n), 2):
        left, right = [], []
        for r in range(n):
            if r == a or r == b:
                continue
            if orientation(s[a], s[b], s[r]) == Orientation.CCW:
                left.append(r)
            else:
                right.append(r)
        if abs(len(left) - len(right)) <= 1:
            return HalvingLine(a, b, tuple(left), tuple(right))

    # Unreachable for points in general position
    raise GeoGrundyError("no halving line found; is the point set in general position?")
