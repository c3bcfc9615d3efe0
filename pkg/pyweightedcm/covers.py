"""Weighted vertex covers and the irreducible decomposition of I(G_w).

A pair (C, d) covers G_w when every edge e = uv has an endpoint t in C with
d(t) <= w(e). Minimal covers (for the order C <= C', d >= d') index the
irredundant irreducible decomposition of I(G_w).

Enumeration never needs levels outside W(v), the weights incident to v, and
minimality is local: (C, d) is minimal iff every v in C has a critical edge
e = vu with w(e) = d(v) that u does not cover. If v had none, either v could
be dropped or d(v) raised by one, both giving a smaller cover; conversely a
smaller cover lets one single vertex be dropped or raised.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
import itertools
import logging
import math
from typing import Any

from .constants import DEFAULT_MIS_BOUND, DEFAULT_SEARCH_BUDGET, resolve_budget
from .exceptions import BudgetExceededError, LevelError, UnknownVertexError, WeightedCMError
from .graph import WeightedGraph
from .ideals import Monomial, MonomialIdeal, intersect, weighted_edge_ideal
from .structure import independence_number

_LOGGER = logging.getLogger(__name__)

LevelChoice = Callable[[WeightedGraph, str], list[int]]


@dataclass(frozen=True)
class WeightedCover:
    """Support C with a positive level d(v) for each v in C."""

    levels: tuple[tuple[str, int], ...]

    @classmethod
    def build(
        cls, support: Iterable[str], level: Mapping[str, int]
    ) -> WeightedCover:
        """Pair a support with its levels, rejecting levels off the support."""
        _support = set(support)
        stray = set(level) - _support
        if stray:
            raise LevelError(f"Level defined off the support: {sorted(stray)}")
        missing = _support - set(level)
        if missing:
            raise LevelError(f"No level for {sorted(missing)}")
        for vertex, value in level.items():
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise LevelError(f"Level of {vertex} must be a positive integer")
        return cls(tuple(sorted(level.items())))

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.levels)

    @property
    def level(self) -> dict[str, int]:
        return dict(self.levels)

    def __len__(self) -> int:
        return len(self.levels)

    def prime_component(self) -> MonomialIdeal:
        """P(C, d) = (v^d(v) : v in C)."""
        return MonomialIdeal(Monomial({v: d}) for v, d in self.levels)


@dataclass(frozen=True)
class UnmixedReport:
    unmixed: bool
    height: int
    bigheight: int
    dimension: int

    def to_document(self) -> dict[str, Any]:
        return {
            "unmixed": self.unmixed,
            "height": self.height,
            "bigheight": self.bigheight,
            "dimension": self.dimension,
        }


@dataclass(frozen=True)
class DecompositionCheck:
    intersection_matches: bool
    irredundant: bool


def _covered_by(g: WeightedGraph, level: Mapping[str, int], t: str, u: str) -> bool:
    """Does t cover the edge tu."""
    return t in level and level[t] <= g.weight(t, u)


def is_weighted_cover(g: WeightedGraph, cover: WeightedCover) -> bool:
    """Every edge has an endpoint in C with level at most its weight."""
    for vertex in cover.support:
        if vertex not in g:
            raise UnknownVertexError(f"Unknown vertex: {vertex}")
    level = cover.level
    return all(
        _covered_by(g, level, u, v) or _covered_by(g, level, v, u) for u, v in g.edges
    )


def cover_leq(a: WeightedCover, b: WeightedCover) -> bool:
    """(C, d) <= (C', d'): C inside C' and d >= d' on C."""
    theirs = b.level
    return all(v in theirs and d >= theirs[v] for v, d in a.levels)


def minimal_elements(covers: Iterable[WeightedCover]) -> list[WeightedCover]:
    """Pairwise sweep keeping the order-minimal covers."""
    pool = list(dict.fromkeys(covers))
    return [c for c in pool if not any(d != c and cover_leq(d, c) for d in pool)]


def _has_critical_edge(g: WeightedGraph, level: Mapping[str, int], v: str) -> bool:
    return any(
        g.weight(v, u) == level[v] and not _covered_by(g, level, u, v)
        for u in g.neighbors(v)
    )


def _has_private_edge(g: WeightedGraph, level: Mapping[str, int], v: str) -> bool:
    return any(
        _covered_by(g, level, v, u) and not _covered_by(g, level, u, v)
        for u in g.neighbors(v)
    )


def _weight_levels(g: WeightedGraph, v: str) -> list[int]:
    return g.incident_weights(v)


def _every_level(g: WeightedGraph, v: str) -> list[int]:
    return list(range(1, max(g.incident_weights(v), default=0) + 1))


def _search_space(g: WeightedGraph, levels: LevelChoice = _weight_levels) -> int:
    return math.prod(len(levels(g, v)) + 1 for v in g.vertices)


def _canonical(g: WeightedGraph, covers: Iterable[WeightedCover]) -> list[WeightedCover]:
    def key(c: WeightedCover) -> tuple[int, list[int], list[int]]:
        support = g.order(c.support)
        level = c.level
        return (len(support), [g.index(v) for v in support], [level[v] for v in support])

    return sorted(covers, key=key)


def _enumerate(
    g: WeightedGraph,
    keep: Callable[[WeightedGraph, Mapping[str, int], str], bool],
    budget: int | None,
    levels: LevelChoice = _weight_levels,
) -> list[WeightedCover]:
    """Backtrack over v -> absent | one of ``levels(g, v)``.

    A partial assignment dies when a decided edge is uncovered, or when a
    vertex of C whose whole neighbourhood is decided fails ``keep``.
    """

    _budget = resolve_budget(DEFAULT_SEARCH_BUDGET, budget)
    space = _search_space(g, levels)
    if space > _budget:
        raise BudgetExceededError(
            f"Cover search space {space} exceeds the budget of {_budget}"
        )

    order = list(g.vertices)
    position = {v: i for i, v in enumerate(order)}
    edges_at: list[list[tuple[str, str]]] = [[] for _ in order]
    closing_at: list[list[str]] = [[] for _ in order]
    for u, v in g.edges:
        edges_at[max(position[u], position[v])].append((u, v))
    for v in order:
        last = max([position[v]] + [position[u] for u in g.neighbors(v)])
        closing_at[last].append(v)
    options = [[0] + levels(g, v) for v in order]

    found: list[WeightedCover] = []
    level: dict[str, int] = {}

    def extend(i: int) -> None:
        if i == len(order):
            found.append(WeightedCover(tuple(sorted(level.items()))))
            return
        vertex = order[i]
        for choice in options[i]:
            if choice:
                level[vertex] = choice
            if all(
                _covered_by(g, level, u, v) or _covered_by(g, level, v, u)
                for u, v in edges_at[i]
            ) and all(t not in level or keep(g, level, t) for t in closing_at[i]):
                extend(i + 1)
            level.pop(vertex, None)

    extend(0)
    _LOGGER.debug("Cover search over %d candidates kept %d", space, len(found))
    return _canonical(g, found)


def minimal_weighted_covers(
    g: WeightedGraph, budget: int | None = None
) -> list[WeightedCover]:
    """The order-minimal weighted covers, canonically sorted."""
    return _enumerate(g, _has_critical_edge, budget)


def minimal_support_covers(
    g: WeightedGraph, budget: int | None = None
) -> list[WeightedCover]:
    """Covers from which no vertex can be dropped, at every level that works.

    A vertex stays only with an edge it covers alone, so its level never
    exceeds its heaviest edge.
    """
    return _enumerate(g, _has_private_edge, budget, _every_level)


def brute_force_minimal_covers(g: WeightedGraph) -> list[WeightedCover]:
    """Every d: V -> {absent, 1..max weight}, filtered and swept pairwise."""
    top = max(g.weights.values(), default=1)
    covers = []
    for choice in itertools.product(range(top + 1), repeat=len(g)):
        level = {v: d for v, d in zip(g.vertices, choice) if d}
        candidate = WeightedCover(tuple(sorted(level.items())))
        if is_weighted_cover(g, candidate):
            covers.append(candidate)
    return _canonical(g, minimal_elements(covers))


def irreducible_decomposition(
    g: WeightedGraph, budget: int | None = None
) -> list[MonomialIdeal]:
    """Components P(C, d), one per minimal weighted cover."""
    return [c.prime_component() for c in minimal_weighted_covers(g, budget)]


def verify_decomposition(
    g: WeightedGraph, budget: int | None = None
) -> DecompositionCheck:
    """Check the intersection equals I(G_w) and no component is redundant."""
    components = irreducible_decomposition(g, budget)
    ideal = weighted_edge_ideal(g)
    if not components:
        return DecompositionCheck(intersection_matches=False, irredundant=False)

    # prefix[i] is the intersection of components[:i]; suffix[i] of components[i:]
    prefix: list[MonomialIdeal | None] = [None]
    for component in components:
        prefix.append(component if prefix[-1] is None else prefix[-1].intersect(component))
    suffix: list[MonomialIdeal | None] = [None]
    for component in reversed(components):
        suffix.append(component if suffix[-1] is None else suffix[-1].intersect(component))
    suffix.reverse()

    irredundant = True
    for i in range(len(components)):
        rest = [part for part in (prefix[i], suffix[i + 1]) if part is not None]
        if not rest:
            # a single component can only be redundant against the whole ring
            continue
        if intersect(*rest) == ideal:
            irredundant = False
            break

    return DecompositionCheck(
        intersection_matches=prefix[-1] == ideal, irredundant=irredundant
    )


def associated_primes(
    g: WeightedGraph, budget: int | None = None
) -> list[tuple[str, ...]]:
    """Distinct supports of the minimal covers."""
    seen: dict[frozenset[str], None] = {}
    for cover in minimal_weighted_covers(g, budget):
        seen.setdefault(cover.support, None)
    return [tuple(g.order(s)) for s in seen]


def _is_minimal_vertex_cover(g: WeightedGraph, support: frozenset[str]) -> bool:
    if not all(u in support or v in support for u, v in g.edges):
        return False
    return all(any(u not in support for u in g.neighbors(v)) for v in support)


def is_unmixed(g: WeightedGraph, budget: int | None = None) -> UnmixedReport:
    """Height and big height over the minimal covers; unmixed iff equal."""
    covers = minimal_weighted_covers(g, budget)
    sizes = [len(c) for c in covers]
    height, bigheight = min(sizes), max(sizes)
    report = UnmixedReport(
        unmixed=height == bigheight,
        height=height,
        bigheight=bigheight,
        dimension=len(g) - height,
    )

    if len(g) <= DEFAULT_MIS_BOUND and report.dimension != independence_number(g):
        raise WeightedCMError(
            f"dim R/I = {report.dimension} disagrees with the independence number"
        )
    if report.unmixed:
        for cover in covers:
            if not _is_minimal_vertex_cover(g, cover.support):
                raise WeightedCMError(
                    f"Unmixed, yet {sorted(cover.support)} is not a minimal vertex cover"
                )
    return report


def cover_to_document(g: WeightedGraph, cover: WeightedCover) -> dict[str, Any]:
    support = g.order(cover.support)
    level = cover.level
    return {"support": support, "level": {v: level[v] for v in support}}
