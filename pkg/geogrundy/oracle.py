"""
Exact Grundy and pseudo-Grundy indices of small conflict graphs.

Both indices peel color classes from the bottom: in a (pseudo-)Grundy
coloring the class of color 1 dominates every other node, and the remaining
classes form a (pseudo-)Grundy coloring of what is left. For Grundy colorings
that first class must also be independent, which makes it a maximal
independent set. Searches are exponential and guarded by size caps.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Hashable, Iterator, Literal, Optional, Sequence, Tuple

import networkx as nx

from . import config
from .conflict import ConflictGraph, iter_bits
from .exceptions import OracleSizeError
from .geometry import PointSet, SegmentRelation, segment_relation

logger = logging.getLogger(__name__)

PSEUDO_GRUNDY_CAP = 15
GRUNDY_CAP = 12


@dataclass(frozen=True)
class SmallInstance:
    """Abstract graph on nodes 0..size-1 with bitset rows"""
    rows: Tuple[int, ...]
    labels: Tuple[Hashable, ...] = ()

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def from_conflict_graph(cls, g: ConflictGraph) -> "SmallInstance":
        return cls(tuple(g.neighbors(i) for i in range(g.size)), tuple(g.edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SmallInstance":
        nodes = list(graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        rows = [0] * len(nodes)
        for u, v in graph.edges:
            if u == v:
                continue
            rows[index[u]] |= 1 << index[v]
            rows[index[v]] |= 1 << index[u]
        return cls(tuple(rows), tuple(nodes))

    def degree_within(self, i: int, mask: int) -> int:
        return (self.rows[i] & mask).bit_count()


def _check_size(instance: SmallInstance, cap: int, what: str) -> None:
    if instance.size > cap:
        raise OracleSizeError(f"{what} handles at most {cap} nodes, got {instance.size}")


def _bound(instance: SmallInstance, mask: int) -> int:
    """A node of color k needs k - 1 neighbors inside mask"""
    if not mask:
        return 0
    return 1 + max(instance.degree_within(i, mask) for i in iter_bits(mask))


def _dominates(instance: SmallInstance, chosen: int, rest: int) -> bool:
    return all(instance.rows[v] & chosen for v in iter_bits(rest))


def exact_pseudo_grundy(instance: SmallInstance) -> int:
    _check_size(instance, PSEUDO_GRUNDY_CAP, "exact_pseudo_grundy")
    memo: Dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        ceiling = _bound(instance, mask)
        value = 1
        chosen = mask
        while chosen and value < ceiling:
            rest = mask ^ chosen
            if rest and 1 + _bound(instance, rest) > value and _dominates(instance, chosen, rest):
                value = max(value, 1 + best(rest))
            chosen = (chosen - 1) & mask
        memo[mask] = value
        return value

    result = best((1 << instance.size) - 1)
    logger.debug("pseudo-Grundy index of %s nodes: %s (%s states)", instance.size, result, len(memo))
    return result


def _maximal_independent_sets(instance: SmallInstance, mask: int) -> Iterator[int]:
    """Maximal independent sets of the subgraph induced by mask"""

    def extend(chosen: int, candidates: int, excluded: int) -> Iterator[int]:
        if not candidates:
            if not excluded:
                yield chosen
            return
        v = (candidates & -candidates).bit_length() - 1
        bit = 1 << v
        yield from extend(chosen | bit, candidates & ~instance.rows[v] & ~bit, excluded & ~instance.rows[v])
        yield from extend(chosen, candidates & ~bit, excluded | bit)

    yield from extend(0, mask, 0)


def _grundy_by_classes(instance: SmallInstance) -> int:
    memo: Dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        ceiling = _bound(instance, mask)
        value = 0
        for chosen in _maximal_independent_sets(instance, mask):
            value = max(value, 1 + best(mask ^ chosen))
            if value >= ceiling:
                break
        memo[mask] = value
        return value

    return best((1 << instance.size) - 1)


def _greedy_colors(instance: SmallInstance, order: Sequence[int]) -> int:
    colors = [0] * instance.size
    for v in order:
        taken = {colors[u] for u in iter_bits(instance.rows[v])}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return max(colors, default=0)


def greedy_grundy_number(instance: SmallInstance) -> int:
    """Largest greedy color count over every node ordering"""
    _check_size(instance, config.ORDERING_LIMIT, "greedy_grundy_number")
    return max((_greedy_colors(instance, order) for order in permutations(range(instance.size))), default=0)


def exact_grundy(instance: SmallInstance, method: Optional[Literal["orderings", "classes"]] = None) -> int:
    _check_size(instance, GRUNDY_CAP, "exact_grundy")
    if method is None:
        method = "orderings" if instance.size <= config.ORDERING_LIMIT else "classes"
    if method == "orderings":
        return greedy_grundy_number(instance)
    return _grundy_by_classes(instance)


def disjoint_pair_exists(s: PointSet, edges: Sequence[Sequence[int]]) -> bool:
    """True iff two of the given edges are disjoint segments"""
    distinct = sorted({(min(e[0], e[1]), max(e[0], e[1])) for e in edges})
    return any(
        segment_relation(s, e, f) == SegmentRelation.DISJOINT for e, f in combinations(distinct, 2)
    )
