"""Unweighted structure: girth, pendant edges, basic 5-cycles, class PC."""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
import logging
import math
from typing import Any

import networkx as nx

from .constants import DEFAULT_MIS_BOUND, DEFAULT_VD_BOUND, NotPCReason
from .exceptions import SizeBoundError
from .graph import Edge, WeightedGraph, components

_LOGGER = logging.getLogger(__name__)

Cycle = tuple[str, str, str, str, str]


@dataclass(frozen=True)
class PCWitness:
    """Partition V(G) = P(G) + C(G) with the pendant matching and cycles."""

    pendant_vertices: tuple[str, ...]
    cycle_vertices: tuple[str, ...]
    pendant_matching: tuple[Edge, ...]
    basic_cycles: tuple[Cycle, ...]

    def to_document(self) -> dict[str, Any]:
        return {
            "pendant_vertices": list(self.pendant_vertices),
            "cycle_vertices": list(self.cycle_vertices),
            "pendant_matching": [list(e) for e in self.pendant_matching],
            "basic_cycles": [list(c) for c in self.basic_cycles],
        }


@dataclass(frozen=True)
class NotPC:
    """The first violated clause of the class PC definition."""

    reason: NotPCReason
    vertices: tuple[str, ...]

    def to_document(self) -> dict[str, Any]:
        return {"reason": self.reason.value, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class WellCovered:
    well_covered: bool
    independence_number: int


@dataclass(frozen=True)
class VertexDecomposition:
    """Verdict plus, on request, one shedding vertex per recursion node."""

    decomposable: bool
    shedding: tuple[tuple[tuple[str, ...], str], ...] = field(default=())


def girth(g: WeightedGraph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    value = nx.girth(g.graph)
    return value if value == math.inf else int(value)


def pendant_edges(g: WeightedGraph) -> list[Edge]:
    """Edges with at least one leaf endpoint."""
    return [e for e in g.edges if g.degree(e[0]) == 1 or g.degree(e[1]) == 1]


def _is_induced_cycle(g: WeightedGraph, cycle: tuple[str, ...]) -> bool:
    size = len(cycle)
    if size < 3 or len(set(cycle)) != size or any(v not in g for v in cycle):
        return False
    for i in range(size):
        for j in range(i + 1, size):
            consecutive = j == i + 1 or (i == 0 and j == size - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def is_induced_five_cycle(g: WeightedGraph, cycle: Iterable[str]) -> bool:
    _cycle = tuple(cycle)
    return len(_cycle) == 5 and _is_induced_cycle(g, _cycle)


def is_basic(g: WeightedGraph, cycle: Iterable[str]) -> bool:
    """Induced 5-cycle with no two cycle-adjacent vertices of degree >= 3."""
    _cycle = tuple(cycle)
    if not is_induced_five_cycle(g, _cycle):
        return False
    return not any(
        g.degree(_cycle[i]) >= 3 and g.degree(_cycle[(i + 1) % 5]) >= 3
        for i in range(5)
    )


def canonical_cycle(g: WeightedGraph, cycle: Iterable[str]) -> Cycle:
    """Rotate to the least vertex, then orient towards its lesser neighbour."""
    _cycle = list(cycle)
    start = min(range(len(_cycle)), key=lambda i: g.index(_cycle[i]))
    _cycle = _cycle[start:] + _cycle[:start]
    if g.index(_cycle[-1]) < g.index(_cycle[1]):
        _cycle = [_cycle[0]] + _cycle[:0:-1]
    return tuple(_cycle)  # type: ignore[return-value]


def induced_five_cycles(g: WeightedGraph) -> list[Cycle]:
    """Every induced 5-cycle once, in canonical rotation and orientation."""
    found: list[Cycle] = []
    for start in g.vertices:
        floor = g.index(start)

        def extend(path: list[str]) -> None:
            if len(path) == 5:
                if g.has_edge(path[-1], start) and g.index(path[1]) < g.index(path[4]):
                    candidate = tuple(path)
                    if _is_induced_cycle(g, candidate):
                        found.append(candidate)  # type: ignore[arg-type]
                return
            for nxt in g.neighbors(path[-1]):
                if g.index(nxt) > floor and nxt not in path:
                    extend(path + [nxt])

        extend([start])
    return found


def basic_five_cycles(g: WeightedGraph) -> list[Cycle]:
    """Induced 5-cycles without two adjacent vertices of degree >= 3."""
    return [c for c in induced_five_cycles(g) if is_basic(g, c)]


def classify_pc(g: WeightedGraph) -> PCWitness | NotPC:
    """Decide membership in class PC, returning a witness or the failure."""
    pendant = pendant_edges(g)
    cycles = basic_five_cycles(g)
    p_set = {v for e in pendant for v in e}
    c_set = {v for c in cycles for v in c}

    overlap = p_set & c_set
    if overlap:
        return NotPC(NotPCReason.OVERLAP, tuple(g.order(overlap)))

    uncovered = set(g.vertices) - p_set - c_set
    if uncovered:
        return NotPC(NotPCReason.UNCOVERED, tuple(g.order(uncovered)))

    seen: set[str] = set()
    shared: set[str] = set()
    for e in pendant:
        shared.update(v for v in e if v in seen)
        seen.update(e)
    if shared:
        return NotPC(NotPCReason.MATCHING, tuple(g.order(shared)))

    counts = Counter(v for c in cycles for v in c)
    crowded = {v for v, count in counts.items() if count > 1}
    if crowded:
        return NotPC(NotPCReason.OVERLAPPING_CYCLES, tuple(g.order(crowded)))

    return PCWitness(
        pendant_vertices=tuple(g.order(p_set)),
        cycle_vertices=tuple(g.order(c_set)),
        pendant_matching=tuple(pendant),
        basic_cycles=tuple(cycles),
    )


def is_cm_graph(g: WeightedGraph) -> bool:
    """Every component is a single vertex or in class PC."""
    return all(
        len(part) == 1 or isinstance(classify_pc(part), PCWitness)
        for part in components(g)
    )


def _check_bound(g: WeightedGraph, bound: int) -> None:
    if len(g) > bound:
        raise SizeBoundError(
            f"{len(g)} vertices exceed the exhaustive bound of {bound}"
        )


def _maximal_independent_sets(graph: nx.Graph) -> list[frozenset[str]]:
    if graph.number_of_nodes() == 0:
        return [frozenset()]
    return [frozenset(c) for c in nx.find_cliques(nx.complement(graph))]


def maximal_independent_sets(
    g: WeightedGraph, bound: int = DEFAULT_MIS_BOUND
) -> list[tuple[str, ...]]:
    """All maximal independent sets (Bron-Kerbosch on the complement)."""
    _check_bound(g, bound)
    found = [tuple(g.order(s)) for s in _maximal_independent_sets(g.graph)]
    return sorted(found, key=lambda s: [g.index(v) for v in s])


def minimal_vertex_covers(
    g: WeightedGraph, bound: int = DEFAULT_MIS_BOUND
) -> list[tuple[str, ...]]:
    """Complements of the maximal independent sets."""
    covers = [
        tuple(v for v in g.vertices if v not in s)
        for s in maximal_independent_sets(g, bound)
    ]
    return sorted(covers, key=lambda s: (len(s), [g.index(v) for v in s]))


def independence_number(g: WeightedGraph, bound: int = DEFAULT_MIS_BOUND) -> int:
    return max(len(s) for s in maximal_independent_sets(g, bound))


def is_well_covered(g: WeightedGraph, bound: int = DEFAULT_MIS_BOUND) -> WellCovered:
    """All maximal independent sets share one size, alpha(G)."""
    sizes = {len(s) for s in maximal_independent_sets(g, bound)}
    return WellCovered(well_covered=len(sizes) == 1, independence_number=max(sizes))


class _Decomposer:
    """Memoized vertex decomposability over induced subgraphs of one graph."""

    def __init__(self, g: WeightedGraph) -> None:
        self._g = g
        self._graph = g.graph
        self._memo: dict[frozenset[str], str | None | bool] = {}

    def shedding(self, alive: frozenset[str], v: str) -> bool:
        neighbors = set(self._graph[v]) & alive
        if not neighbors:
            return False
        rest = alive - neighbors - {v}
        for independent in _maximal_independent_sets(self._graph.subgraph(rest)):
            # some neighbour of v must extend the independent set
            if not any(
                not (set(self._graph[u]) & independent) for u in neighbors
            ):
                return False
        return True

    def decomposable(self, alive: frozenset[str]) -> bool:
        if alive in self._memo:
            return self._memo[alive] is not False
        if self._graph.subgraph(alive).number_of_edges() == 0:
            self._memo[alive] = None
            return True
        for v in self._g.order(alive):
            if not self.shedding(alive, v):
                continue
            closed = (set(self._graph[v]) & alive) | {v}
            if self.decomposable(alive - {v}) and self.decomposable(alive - closed):
                self._memo[alive] = v
                return True
        self._memo[alive] = False
        return False

    def trace(self, alive: frozenset[str]) -> list[tuple[tuple[str, ...], str]]:
        v = self._memo.get(alive)
        if not isinstance(v, str):
            return []
        closed = (set(self._graph[v]) & alive) | {v}
        return (
            [(tuple(self._g.order(alive)), v)]
            + self.trace(alive - {v})
            + self.trace(alive - closed)
        )


def is_shedding_vertex(g: WeightedGraph, v: str) -> bool:
    """Every independent set of G_v extends by a neighbour of v in G minus v."""
    g.index(v)
    return _Decomposer(g).shedding(frozenset(g.vertices), v)


def is_vertex_decomposable(
    g: WeightedGraph, bound: int = DEFAULT_VD_BOUND, trace: bool = False
) -> VertexDecomposition:
    """Recursive shedding-vertex test, memoized on induced vertex sets."""
    _check_bound(g, bound)
    decomposer = _Decomposer(g)
    everything = frozenset(g.vertices)
    verdict = decomposer.decomposable(everything)
    _LOGGER.debug("Vertex decomposability explored %d subgraphs", len(decomposer._memo))
    if not (verdict and trace):
        return VertexDecomposition(decomposable=verdict)
    return VertexDecomposition(
        decomposable=True, shedding=tuple(decomposer.trace(everything))
    )
