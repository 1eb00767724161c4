"""
Triangle decompositions of K_n with a small leave.

For every n >= 3 the edges of K_n minus a leave F split into triangles, with
F empty (n = 1, 3 mod 6), a perfect matching (n = 0, 2 mod 6), a tripole
(n = 4 mod 6) or a 4-cycle (n = 5 mod 6). Steiner triple systems come from
the Bose (n = 3 mod 6) and Skolem (n = 1 mod 6) quasigroup constructions;
the other residues delete a point from a nearby system. Every decomposition
is relabeled so its leave has a canonical shape, then certified by
validate_decomposition.

Finite points (x, i) of the quasigroup constructions are labeled 3x + i;
the points at infinity come last.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from .exceptions import GeoGrundyError, InputError
from .geometry import Edge

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]


class LeaveKind(str, Enum):
    EMPTY = "empty"
    PERFECT_MATCHING = "perfect_matching"
    TRIPOLE = "tripole"
    FOUR_CYCLE = "four_cycle"


@dataclass(frozen=True)
class Decomposition:
    n: int
    triangles: Tuple[Triangle, ...]
    leave: Tuple[Edge, ...]
    kind: LeaveKind

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    @property
    def leave_size(self) -> int:
        return len(self.leave)


def expected_leave(n: int) -> Tuple[LeaveKind, int]:
    """Leave shape and size for n's residue mod 6"""
    r = n % 6
    if r in (1, 3):
        return LeaveKind.EMPTY, 0
    if r in (0, 2):
        return LeaveKind.PERFECT_MATCHING, n // 2
    if r == 4:
        return LeaveKind.TRIPOLE, n // 2 + 1
    return LeaveKind.FOUR_CYCLE, 4


def _bose(v: int) -> List[Triangle]:
    """STS(v), v = 6t + 3, over the idempotent commutative quasigroup on Z_{2t+1}"""
    t = (v - 3) // 6
    m = 2 * t + 1

    def op(x: int, y: int) -> int:
        return ((x + y) * (t + 1)) % m

    blocks = [(3 * x, 3 * x + 1, 3 * x + 2) for x in range(m)]
    for i in range(3):
        for x in range(m):
            for y in range(x + 1, m):
                blocks.append((3 * x + i, 3 * y + i, 3 * op(x, y) + (i + 1) % 3))
    return blocks


def _skolem(v: int) -> List[Triangle]:
    """STS(v), v = 6t + 1, over the half-idempotent commutative quasigroup on Z_{2t}"""
    t = (v - 1) // 6
    m = 2 * t
    infinity = 3 * m

    def op(x: int, y: int) -> int:
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else t + s // 2

    blocks = [(3 * x, 3 * x + 1, 3 * x + 2) for x in range(t)]
    for i in range(3):
        for x in range(t):
            blocks.append((infinity, 3 * (x + t) + i, 3 * x + (i + 1) % 3))
        for x in range(m):
            for y in range(x + 1, m):
                blocks.append((3 * x + i, 3 * y + i, 3 * op(x, y) + (i + 1) % 3))
    return blocks


def _five_mod_six(v: int) -> Tuple[List[Triangle], List[Edge]]:
    """Triangles of K_v, v = 6t + 5, leaving the 4-cycle inf1-(0,1)-inf2-(0,2)"""
    t = (v - 5) // 6
    m = 2 * t + 1
    inf1, inf2 = 3 * m, 3 * m + 1

    def swap(x: int) -> int:
        # Pairs 2s-1 <-> 2s, fixing 0
        if x == 0:
            return 0
        return x + 1 if x % 2 == 1 else x - 1

    def op(x: int, y: int) -> int:
        return swap(((x + y) * (t + 1)) % m)

    def pt(x: int, i: int) -> int:
        return 3 * x + i % 3

    blocks: List[Triangle] = []
    for i in range(3):
        for x in range(m):
            for y in range(x + 1, m):
                blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))

    # x op x = swap(x), so the cross-level pairs (x, i)-(swap(x), i+1) are still open
    for s in range(1, t + 1):
        a, b = 2 * s - 1, 2 * s
        blocks += [
            (inf1, pt(a, 0), pt(b, 1)),
            (inf2, pt(b, 1), pt(a, 2)),
            (inf1, pt(a, 2), pt(b, 0)),
            (inf2, pt(b, 0), pt(a, 1)),
            (inf1, pt(a, 1), pt(b, 2)),
            (inf2, pt(b, 2), pt(a, 0)),
        ]
    blocks.append((pt(0, 0), pt(0, 1), pt(0, 2)))
    blocks.append((inf1, inf2, pt(0, 0)))

    leave = [Edge.of(inf1, pt(0, 1)), Edge.of(pt(0, 1), inf2), Edge.of(inf2, pt(0, 2)), Edge.of(pt(0, 2), inf1)]
    return blocks, leave


def _delete_point(
    triangles: Sequence[Triangle], leave: Sequence[Edge], p: int
) -> Tuple[List[Triangle], List[Edge]]:
    """Drop point p: its triangles shrink to leave edges, higher labels shift down"""

    def shift(x: int) -> int:
        return x - 1 if x > p else x

    kept: List[Triangle] = []
    new_leave: List[Edge] = []
    for tri in triangles:
        if p in tri:
            u, w = (x for x in tri if x != p)
            new_leave.append(Edge.of(shift(u), shift(w)))
        else:
            kept.append(tuple(shift(x) for x in tri))
    for e in leave:
        if p not in e:
            new_leave.append(Edge.of(shift(e.a), shift(e.b)))
    return kept, new_leave


def _leave_order(n: int, leave: Sequence[Edge], kind: LeaveKind) -> List[int]:
    """Vertices listed so that relabeling by position gives the canonical leave"""
    if kind == LeaveKind.EMPTY:
        return list(range(n))

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(leave)
    order: List[int] = []

    if kind == LeaveKind.FOUR_CYCLE:
        start = min(v for v in graph if graph.degree(v) == 2)
        previous, current = start, min(graph[start])
        order.append(start)
        while current != start:
            order.append(current)
            previous, current = current, next(u for u in graph[current] if u != previous)
    else:
        if kind == LeaveKind.TRIPOLE:
            center = next(v for v in sorted(graph) if graph.degree(v) == 3)
            order.append(center)
            order.extend(sorted(graph[center]))
        for e in sorted(leave):
            if e.a not in order and e.b not in order:
                order.extend(e)

    order.extend(v for v in range(n) if v not in order)
    return order


def _canonical_leave(n: int, kind: LeaveKind) -> List[Edge]:
    if kind == LeaveKind.EMPTY:
        return []
    if kind == LeaveKind.FOUR_CYCLE:
        return [Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)]
    start = 0
    leave: List[Edge] = []
    if kind == LeaveKind.TRIPOLE:
        leave = [Edge(0, 1), Edge(0, 2), Edge(0, 3)]
        start = 4
    leave.extend(Edge(v, v + 1) for v in range(start, n, 2))
    return leave


def relabel(d: Decomposition, mapping: Dict[int, int]) -> Decomposition:
    """Apply a vertex permutation to a decomposition"""
    if sorted(mapping) != list(range(d.n)) or sorted(mapping.values()) != list(range(d.n)):
        raise InputError(f"relabeling must be a permutation of 0..{d.n - 1}")
    triangles = sorted(tuple(sorted(mapping[x] for x in tri)) for tri in d.triangles)
    leave = [Edge.of(mapping[e.a], mapping[e.b]) for e in d.leave]
    return Decomposition(d.n, tuple(triangles), tuple(leave), d.kind)


@lru_cache(maxsize=None)
def hanani_decompose(n: int) -> Decomposition:
    """Triangle decomposition of K_n whose leave is in canonical form"""
    if n < 3:
        raise InputError(f"hanani_decompose needs n >= 3, got {n}")

    r = n % 6
    leave: List[Edge] = []
    if r == 3:
        triangles = _bose(n)
    elif r == 1:
        triangles = _skolem(n)
    elif r == 5:
        triangles, leave = _five_mod_six(n)
    elif r == 4:
        # inf1 of the n + 1 system is label n - 1
        triangles, leave = _five_mod_six(n + 1)
        triangles, leave = _delete_point(triangles, leave, n - 1)
    elif r == 0:
        triangles, leave = _delete_point(_skolem(n + 1), [], n)
    else:
        triangles, leave = _delete_point(_bose(n + 1), [], 0)

    kind, _ = expected_leave(n)
    raw = Decomposition(n, tuple(triangles), tuple(leave), kind)
    order = _leave_order(n, raw.leave, kind)
    d = relabel(raw, {v: position for position, v in enumerate(order)})
    # Leave edges listed in canonical order, not discovery order
    d = Decomposition(n, d.triangles, tuple(_canonical_leave(n, kind)), kind)

    ok, reason = validate_decomposition(d)
    if not ok:
        raise GeoGrundyError(f"decomposition of K_{n} failed validation: {reason}")
    logger.debug("K_%s: %s triangles, %s leave", n, d.triangle_count, kind.value)
    return d


def validate_decomposition(d: Decomposition) -> Tuple[bool, str]:
    """Check that triangles plus leave cover K_n exactly once and the leave has its residue's shape"""
    n = d.n
    if n < 3:
        return False, f"n must be at least 3, got {n}"

    covered: Counter = Counter()
    for tri in d.triangles:
        if len(tri) != 3 or len(set(tri)) != 3:
            return False, f"triangle {tuple(tri)} is degenerate"
        if any(not 0 <= x < n for x in tri):
            return False, f"triangle {tuple(tri)} has a vertex outside 0..{n - 1}"
        a, b, c = tri
        for e in (Edge.of(a, b), Edge.of(a, c), Edge.of(b, c)):
            covered[e] += 1
    for e in d.leave:
        if e[0] == e[1] or any(not 0 <= x < n for x in e):
            return False, f"leave edge {tuple(e)} is not an edge of K_{n}"
        covered[Edge.of(e[0], e[1])] += 1

    for e, count in sorted(covered.items()):
        if count > 1:
            return False, f"edge ({e.a}, {e.b}) covered twice"
    if len(covered) != comb(n, 2):
        missing = next(Edge(a, b) for a in range(n) for b in range(a + 1, n) if Edge(a, b) not in covered)
        return False, f"edge ({missing.a}, {missing.b}) not covered"

    kind, size = expected_leave(n)
    if len(d.leave) != size:
        return False, f"leave has {len(d.leave)} edges, expected {size} for n = {n % 6} mod 6"
    if LeaveKind(d.kind) != kind:
        return False, f"leave kind is {LeaveKind(d.kind).value}, expected {kind.value} for n = {n % 6} mod 6"

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((e[0], e[1]) for e in d.leave)
    degrees = [graph.degree(v) for v in range(n)]

    if kind == LeaveKind.PERFECT_MATCHING and any(deg != 1 for deg in degrees):
        return False, "leave is not a perfect matching"
    if kind == LeaveKind.TRIPOLE:
        if not nx.is_forest(graph):
            return False, "tripole leave contains a cycle"
        if any(deg % 2 == 0 for deg in degrees):
            return False, "tripole leave has a vertex of even degree"
    if kind == LeaveKind.FOUR_CYCLE:
        touched = [v for v in range(n) if degrees[v] > 0]
        if len(touched) != 4 or any(degrees[v] != 2 for v in touched):
            return False, "leave is not a 4-cycle"
        if not nx.is_connected(graph.subgraph(touched)):
            return False, "leave is not a 4-cycle"

    return True, "ok"
