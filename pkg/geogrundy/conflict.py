"""
Adjacency criteria and the edge-conflict graph of a complete geometric graph.

The nodes of a conflict graph are the C(n, 2) edges of K_n in lexicographic
order; node i is ``graph.edges[i]``. Each row of the adjacency relation is a
Python int used as a bitset over node indices, which keeps verification and
greedy completion down to a handful of big-integer ANDs per edge.
"""
import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence

import networkx as nx

from . import config
from .exceptions import InputError
from .geometry import Edge, PointSet, SegmentRelation, all_edges, cross, segment_relation

logger = logging.getLogger(__name__)


class Criterion(str, Enum):
    CROSSING = "crossing"
    INTERSECTION = "intersection"
    DISJOINTNESS = "disjointness"
    NONCROSSING = "noncrossing"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def edge_index(n: int, a: int, b: int) -> int:
    """Position of edge (a, b), a < b, in the lexicographic edge list of K_n"""
    return a * (2 * n - a - 1) // 2 + (b - a - 1)


def adjacent(s: PointSet, e: Sequence[int], f: Sequence[int], c: Criterion) -> bool:
    relation = segment_relation(s, e, f)
    c = Criterion(c)
    if c == Criterion.CROSSING:
        return relation == SegmentRelation.CROSSING
    if c == Criterion.INTERSECTION:
        return relation != SegmentRelation.DISJOINT
    if c == Criterion.DISJOINTNESS:
        return relation == SegmentRelation.DISJOINT
    return relation != SegmentRelation.CROSSING


class _Drawing:
    """Per point set tables shared by every criterion"""

    def __init__(self, points: PointSet):
        n = len(points)
        self.n = n
        self.size = n * (n - 1) // 2
        everyone = (1 << n) - 1

        # left[u][v]: points strictly left of the directed line u -> v
        self.left: List[List[int]] = [[0] * n for _ in range(n)]
        for u in range(n):
            pu = points[u]
            for v in range(u + 1, n):
                pv = points[v]
                mask = 0
                for r in range(n):
                    if cross(pu, pv, points[r]) > 0:
                        mask |= 1 << r
                self.left[u][v] = mask
                self.left[v][u] = everyone & ~mask & ~(1 << u) & ~(1 << v)

        # incident[v]: edges with v as an endpoint
        self.incident = [0] * n
        for a in range(n):
            for b in range(a + 1, n):
                bit = 1 << edge_index(n, a, b)
                self.incident[a] |= bit
                self.incident[b] |= bit

        self._crossing: Dict[int, int] = {}

    def crossing_row(self, a: int, b: int) -> int:
        i = edge_index(self.n, a, b)
        row = self._crossing.get(i)
        if row is not None:
            return row

        n, left = self.n, self.left
        bits = bytearray((self.size + 7) // 8)
        # (c, d) crosses (a, b) iff c is left of a->b, d is right of it,
        # and exactly one of a, b is left of c->d
        for c in iter_bits(left[a][b]):
            for d in iter_bits(left[b][a] & (left[a][c] ^ left[b][c])):
                j = edge_index(n, c, d) if c < d else edge_index(n, d, c)
                bits[j >> 3] |= 1 << (j & 7)
        row = int.from_bytes(bits, "little")
        self._crossing[i] = row
        return row


@lru_cache(maxsize=8)
def _drawing_for(points: PointSet) -> _Drawing:
    return _Drawing(points)


class ConflictGraph:
    """Edge-adjacency structure of K_n drawn on a point set under one criterion"""

    def __init__(self, points: PointSet, criterion: Criterion, dense: Optional[bool] = None):
        self.points = points
        self.criterion = Criterion(criterion)
        self.n = len(points)
        self.edges: List[Edge] = all_edges(self.n)
        self.index: Dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}
        self.size = len(self.edges)
        self.full_mask = (1 << self.size) - 1
        self._drawing = _drawing_for(points)
        self._rows: List[Optional[int]] = [None] * self.size

        if dense is None:
            dense = self.n <= config.DENSE_LIMIT
        if dense:
            for i in range(self.size):
                self.neighbors(i)

    def __len__(self) -> int:
        return self.size

    def edge_id(self, e: Sequence[int]) -> int:
        a, b = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
        if not 0 <= a < b < self.n:
            raise InputError(f"edge {tuple(e)} is not an edge of K_{self.n}")
        return edge_index(self.n, a, b)

    def _compute_row(self, i: int) -> int:
        a, b = self.edges[i]
        crossing = self._drawing.crossing_row(a, b)
        if self.criterion == Criterion.CROSSING:
            return crossing
        touching = self._drawing.incident[a] | self._drawing.incident[b]
        if self.criterion == Criterion.INTERSECTION:
            return (crossing | touching) & ~(1 << i)
        if self.criterion == Criterion.DISJOINTNESS:
            return self.full_mask & ~(crossing | touching)
        return self.full_mask & ~crossing & ~(1 << i)

    def neighbors(self, i: int) -> int:
        """Bitset of the nodes adjacent to node i"""
        row = self._rows[i]
        if row is None:
            row = self._compute_row(i)
            self._rows[i] = row
        return row

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.neighbors(i) >> j) & 1)

    def degree(self, i: int) -> int:
        return self.neighbors(i).bit_count()

    def adjacent_pairs(self) -> int:
        return sum(self.degree(i) for i in range(self.size)) // 2

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph(criterion=self.criterion.value)
        graph.add_nodes_from(self.edges)
        for i in range(self.size):
            for j in iter_bits(self.neighbors(i) >> (i + 1)):
                graph.add_edge(self.edges[i], self.edges[i + 1 + j])
        return graph


def build_conflict_graph(s: PointSet, c: Criterion) -> ConflictGraph:
    return ConflictGraph(s, c)


def max_edge_degree(g: ConflictGraph) -> int:
    """Maximum geometric edge-degree of the drawing"""
    if g.criterion not in (Criterion.CROSSING, Criterion.INTERSECTION):
        raise InputError(f"max_edge_degree is defined for crossing or intersection, not {g.criterion.value}")
    return max((g.degree(i) for i in range(g.size)), default=0)


def crossing_count(s: PointSet) -> int:
    """Number of crossing edge pairs in the drawing"""
    return ConflictGraph(s, Criterion.CROSSING).adjacent_pairs()
