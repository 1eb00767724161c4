"""
Closed-form lower and upper bounds on the (pseudo-)Grundy index of K_n.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .conflict import ConflictGraph, Criterion
from .designs import expected_leave
from .exceptions import InputError

logger = logging.getLogger(__name__)

# Values of the local crossing number formula that do not follow the residue cases
LCR_EXCEPTIONS = {8: 4, 14: 15}


class Setting(str, Enum):
    CONVEX = "convex"
    GENERAL = "general"


@dataclass(frozen=True)
class IncidenceBudget:
    """Adjacent edge pairs available to a complete coloring of the convex drawing"""
    n: int
    criterion: Criterion
    m: int
    cr: int

    @property
    def total(self) -> int:
        return self.m + self.cr


def _require(n: int, least: int) -> None:
    if n < least:
        raise InputError(f"n must be at least {least}, got {n}")


def lcr_formula(n: int) -> int:
    """Rectilinear local crossing number of K_n"""
    _require(n, 3)
    if n in LCR_EXCEPTIONS:
        return LCR_EXCEPTIONS[n]
    if n % 3 == 0:
        return (n - 3) ** 2 // 9
    if n % 3 == 1:
        return (n - 1) * (n - 4) // 9
    return (n - 2) ** 2 // 9 - (n - 2) // 6


def singleton_allowance(n: int, c: Criterion) -> int:
    """Most singleton classes a complete coloring can have: they must be pairwise adjacent"""
    c = Criterion(c)
    if c in (Criterion.CROSSING, Criterion.INTERSECTION):
        return n
    if c == Criterion.DISJOINTNESS:
        return n // 2
    return 3 * n - 6


def incidence_budget(n: int, c: Criterion) -> IncidenceBudget:
    c = Criterion(c)
    if c not in (Criterion.CROSSING, Criterion.INTERSECTION):
        raise InputError(f"incidence budget is defined for crossing or intersection, not {c.value}")
    m = n * comb(n - 1, 2) if c == Criterion.INTERSECTION else 0
    return IncidenceBudget(n, c, m, comb(n, 4))


def _largest_gamma(budget: int, singletons: int) -> int:
    gamma = 0
    while comb(gamma + 1, 2) + comb(max(gamma + 1 - singletons, 0), 2) <= budget:
        gamma += 1
    return gamma


def counting_upper_bound(n: int, c: Criterion) -> int:
    _require(n, 4)
    c = Criterion(c)
    if c in (Criterion.CROSSING, Criterion.INTERSECTION):
        budget = incidence_budget(n, c)
        return _largest_gamma(budget.total, singleton_allowance(n, c))
    if c == Criterion.DISJOINTNESS:
        s = n // 2
        return (comb(n, 2) - s) // 2 + s
    return (n * (n + 5) - 12) // 4


def hanani_color_count(n: int) -> int:
    """Colors used by the triangle construction: one per triangle plus one per leave edge"""
    _require(n, 3)
    _, leave = expected_leave(n)
    return (comb(n, 2) - leave) // 3 + leave


def lower_bound_formula(n: int, c: Criterion, setting: Setting) -> Fraction:
    _require(n, 4)
    c, setting = Criterion(c), Setting(setting)
    if c == Criterion.DISJOINTNESS:
        return Fraction((n - 3) * (n - 1), 8)
    if c == Criterion.NONCROSSING:
        return Fraction(hanani_color_count(n))
    if setting == Setting.GENERAL:
        return Fraction(n * n // 400)
    if c == Criterion.INTERSECTION:
        return Fraction(n * n, 8) + Fraction(n, 4)
    m = 1 << (n.bit_length() - 1)
    return Fraction(max(m * m - 16, 0), 12)


def general_upper_bound(n: int, c: Criterion) -> int:
    """Index bound of the drawing that attains lcr: an edge of color k needs k - 1 neighbors"""
    c = Criterion(c)
    if c == Criterion.CROSSING:
        return lcr_formula(n) + 1
    if c == Criterion.INTERSECTION:
        return lcr_formula(n) + 2 * (n - 2) + 1
    raise InputError(f"general upper bound is defined for crossing or intersection, not {c.value}")


def degree_upper_bound(g: ConflictGraph) -> int:
    return max((g.degree(i) for i in range(g.size)), default=0) + 1


def incidence_upper_bound(g: ConflictGraph) -> int:
    """Counting bound for one drawing: distinct class pairs need distinct adjacent pairs"""
    pairs = g.adjacent_pairs()
    s = min(singleton_allowance(g.n, g.criterion), g.size)
    gamma = 0
    while comb(gamma + 1, 2) <= pairs:
        gamma += 1
    # At most s singleton classes; every other class has two edges or more
    return min(gamma, s + (g.size - s) // 2)
