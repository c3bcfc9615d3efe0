"""Seeded random instances: class PC graphs and girth >= 5 graphs."""
from __future__ import annotations

import logging
import random

import networkx as nx

from .constants import GENERATOR_RETRIES, MIN_GIRTH, Force, GeneratorKind, Verdict, Condition
from .exceptions import GeneratorError, WeightedCMError
from .graph import Edge, WeightedGraph, edge_key
from .structure import PCWitness, classify_pc, girth
from .weights import classify_cm

_LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = 4


def class_pc_sizes(limit: int) -> list[int]:
    """Vertex counts from 2 to ``limit`` reachable as 5a + 2b."""
    return [n for n in range(2, limit + 1) if n != 3]


def _layout(n: int, rng: random.Random) -> tuple[WeightedGraph, list[str]]:
    """Disjoint 5-cycles and pendant pairs, plus the vertices edges may join."""
    splits = [a for a in range(n // 5 + 1) if (n - 5 * a) % 2 == 0]
    cycles = rng.choice(splits)
    labels = [f"v{i}" for i in range(n)]
    weights: dict[Edge, int] = {}
    joinable: list[str] = []

    cursor = 0
    for _ in range(cycles):
        ring = labels[cursor : cursor + 5]
        for i in range(5):
            weights[edge_key(ring[i], ring[(i + 1) % 5])] = 1
        joinable.extend(ring)
        cursor += 5
    while cursor < n:
        head, leaf = labels[cursor], labels[cursor + 1]
        weights[edge_key(head, leaf)] = 1
        joinable.append(head)
        cursor += 2

    return WeightedGraph(labels, weights), joinable


def _same_pc(g: WeightedGraph, expected: PCWitness) -> bool:
    if girth(g) < MIN_GIRTH:
        return False
    found = classify_pc(g)
    return (
        isinstance(found, PCWitness)
        and set(found.basic_cycles) == set(expected.basic_cycles)
        and set(found.pendant_matching) == set(expected.pendant_matching)
    )


def random_class_pc_structure(n: int, rng: random.Random) -> tuple[WeightedGraph, PCWitness]:
    """A class PC graph on ``n`` vertices, weights all 1."""
    if n < 2 or n == 3:
        raise GeneratorError(f"No class PC graph has {n} vertices")

    g, joinable = _layout(n, rng)
    witness = classify_pc(g)
    if not isinstance(witness, PCWitness):
        raise GeneratorError("Seed layout is not in class PC")

    attempts = rng.randint(0, n) if len(joinable) > 1 else 0
    for _ in range(attempts):
        u, v = rng.sample(joinable, 2)
        if g.has_edge(u, v):
            continue
        weights = g.weights
        weights[edge_key(u, v)] = 1
        candidate = WeightedGraph(g.vertices, weights)
        if _same_pc(candidate, witness):
            g = candidate

    return g, witness


def _random_weights(g: WeightedGraph, rng: random.Random, max_weight: int) -> dict[Edge, int]:
    return {e: rng.randint(1, max_weight) for e in g.edges}


def _cycle_edges(cycle: tuple[str, ...]) -> set[Edge]:
    return {edge_key(cycle[i], cycle[(i + 1) % 5]) for i in range(5)}


def _lower_at_cycles(g: WeightedGraph, pc: PCWitness, weights: dict[Edge, int]) -> None:
    for cycle in pc.basic_cycles:
        on_cycle = _cycle_edges(cycle)
        for i, x in enumerate(cycle):
            if g.degree(x) < 3:
                continue
            floor = min(
                weights[edge_key(x, cycle[i - 1])], weights[edge_key(x, cycle[(i + 1) % 5])]
            )
            for t in g.neighbors(x):
                key = edge_key(x, t)
                if key not in on_cycle:
                    weights[key] = min(weights[key], floor)


def _raise_pendants(g: WeightedGraph, pc: PCWitness, weights: dict[Edge, int]) -> None:
    for s, t in pc.pendant_matching:
        key = edge_key(s, t)
        weights[key] = max(weights[key], _heaviest_adjacent(g, weights, s, t))


def _satisfy(
    g: WeightedGraph, pc: PCWitness, rng: random.Random, max_weight: int
) -> dict[Edge, int]:
    weights = _random_weights(g, rng, max_weight)
    for cycle in pc.basic_cycles:
        starts = [
            i
            for i in range(5)
            if g.degree(cycle[i - 1]) == 2 and g.degree(cycle[(i + 1) % 5]) == 2
        ]
        i = rng.choice(starts)
        x, y, z, u, v = (cycle[(i + k) % 5] for k in range(5))
        m = rng.randint(1, max_weight)
        p = rng.randint(m, max_weight)
        q = rng.randint(1, p)
        r = rng.randint(max(q, m), max_weight)
        for (a, b), w in zip(((x, y), (y, z), (z, u), (u, v), (v, x)), (m, p, q, r, m)):
            weights[edge_key(a, b)] = w
    _lower_at_cycles(g, pc, weights)
    _raise_pendants(g, pc, weights)
    return weights


def _heaviest_adjacent(g: WeightedGraph, weights: dict[Edge, int], s: str, t: str) -> int:
    key = edge_key(s, t)
    return max(
        (
            weights[edge_key(end, other)]
            for end in (s, t)
            for other in g.neighbors(end)
            if edge_key(end, other) != key
        ),
        default=0,
    )


def _violate_a(
    g: WeightedGraph, pc: PCWitness, weights: dict[Edge, int], rng: random.Random, max_weight: int
) -> bool:
    targets = [(s, t) for s, t in pc.pendant_matching if _heaviest_adjacent(g, weights, s, t) >= 2]
    if not targets:
        return False
    s, t = rng.choice(targets)
    weights[edge_key(s, t)] = _heaviest_adjacent(g, weights, s, t) - 1
    return True


def _violate_b(
    g: WeightedGraph, pc: PCWitness, weights: dict[Edge, int], rng: random.Random, max_weight: int
) -> bool:
    if not pc.basic_cycles:
        return False
    cycle = rng.choice(pc.basic_cycles)
    for i, w in enumerate((2, 1, 1, 1, 2)):
        weights[edge_key(cycle[i], cycle[(i + 1) % 5])] = w
    on_cycle = _cycle_edges(cycle)
    for x in cycle:
        if g.degree(x) >= 3:
            for t in g.neighbors(x):
                if edge_key(x, t) not in on_cycle:
                    weights[edge_key(x, t)] = 1
    return True


def _violate_c(
    g: WeightedGraph, pc: PCWitness, weights: dict[Edge, int], rng: random.Random, max_weight: int
) -> bool:
    spots = [
        (cycle, i, t)
        for cycle in pc.basic_cycles
        for i, x in enumerate(cycle)
        if g.degree(x) >= 3
        for t in g.neighbors(x)
        if t not in (cycle[i - 1], cycle[(i + 1) % 5])
        and min(weights[edge_key(x, cycle[i - 1])], weights[edge_key(x, cycle[(i + 1) % 5])]) < max_weight
    ]
    if not spots:
        return False
    cycle, i, t = rng.choice(spots)
    x = cycle[i]
    floor = min(weights[edge_key(x, cycle[i - 1])], weights[edge_key(x, cycle[(i + 1) % 5])])
    weights[edge_key(x, t)] = floor + 1
    _raise_pendants(g, pc, weights)
    return True


_VIOLATIONS = {
    Force.VIOLATE_A: (_violate_a, Condition.A),
    Force.VIOLATE_B: (_violate_b, Condition.B),
    Force.VIOLATE_C: (_violate_c, Condition.C),
}


def _meets(g: WeightedGraph, force: Force) -> bool:
    certificate = classify_cm(g)
    if force is Force.SATISFY:
        return certificate.verdict is Verdict.COHEN_MACAULAY
    expected = _VIOLATIONS[force][1]
    return bool(certificate.violations) and all(
        v.condition is expected for v in certificate.violations
    )


def random_class_pc(
    n: int,
    rng: random.Random,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    force: Force | str = Force.RANDOM,
) -> WeightedGraph:
    """Weighted class PC graph, optionally shaped to pass or fail one clause."""
    force = Force(force)
    if max_weight < 1 or (force in _VIOLATIONS and max_weight < 2):
        raise GeneratorError(f"Maximum weight {max_weight} is too small for {force.value}")

    for attempt in range(GENERATOR_RETRIES):
        structure, pc = random_class_pc_structure(n, rng)
        if force is Force.RANDOM:
            return WeightedGraph(structure.vertices, _random_weights(structure, rng, max_weight))

        weights = _satisfy(structure, pc, rng, max_weight)
        if force in _VIOLATIONS and not _VIOLATIONS[force][0](structure, pc, weights, rng, max_weight):
            _LOGGER.debug("Layout %d cannot host %s, retrying", attempt, force.value)
            continue
        g = WeightedGraph(structure.vertices, weights)
        if _meets(g, force):
            return g
        _LOGGER.debug("Attempt %d missed %s, retrying", attempt, force.value)

    raise GeneratorError(f"No class PC graph on {n} vertices for {force.value}")


def random_girth5(n: int, rng: random.Random, max_weight: int = DEFAULT_MAX_WEIGHT) -> WeightedGraph:
    """G(n, p) sample rejected until its girth is at least 5."""
    if n < 1:
        raise GeneratorError("A graph needs at least one vertex")
    for _ in range(GENERATOR_RETRIES):
        graph = nx.gnp_random_graph(n, rng.uniform(0.5, 2.5) / n, seed=rng)
        if nx.girth(graph) >= MIN_GIRTH:
            g = WeightedGraph(
                [f"v{i}" for i in range(n)],
                {edge_key(f"v{u}", f"v{v}"): 1 for u, v in graph.edges},
            )
            return WeightedGraph(g.vertices, _random_weights(g, rng, max_weight))
    raise GeneratorError(f"No girth >= {MIN_GIRTH} sample on {n} vertices")


def random_shared_pentagons(
    n: int, rng: random.Random, max_weight: int = DEFAULT_MAX_WEIGHT
) -> WeightedGraph:
    """Girth >= 5 graph built from 5-cycles glued at a vertex or a 2-path.

    A new pentagon either reuses one vertex (four fresh ones) or a path
    a-b-c (two fresh ones closing c-d-e-a); in both cases every new cycle has
    length at least 5. Leftover vertices hang off as leaves.
    """
    if n < 7:
        raise GeneratorError(f"Two pentagons sharing vertices need 7 vertices, not {n}")

    graph = nx.cycle_graph(5)
    while len(graph) + 2 <= n:
        fresh = len(graph)
        hubs = [v for v in graph if graph.degree(v) >= 2]
        if len(graph) + 4 <= n and rng.random() < 1 / 3:
            nx.add_cycle(graph, [rng.choice(hubs)] + list(range(fresh, fresh + 4)))
            continue
        middle = rng.choice(hubs)
        a, c = rng.sample(sorted(graph.neighbors(middle)), 2)
        nx.add_path(graph, [c, fresh, fresh + 1, a])
    while len(graph) < n:
        graph.add_edge(rng.choice(sorted(graph)), len(graph))

    labels = [f"v{i}" for i in range(n)]
    g = WeightedGraph(labels, {edge_key(f"v{u}", f"v{v}"): 1 for u, v in graph.edges})
    return WeightedGraph(g.vertices, _random_weights(g, rng, max_weight))


def generate(
    kind: GeneratorKind | str,
    n: int,
    seed: int | None = None,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    force: Force | str = Force.RANDOM,
) -> WeightedGraph:
    """One seeded instance of the requested family."""
    kind, force = GeneratorKind(kind), Force(force)
    rng = random.Random(seed)
    if kind is GeneratorKind.CLASS_PC:
        return random_class_pc(n, rng, max_weight, force)
    if force is not Force.RANDOM:
        raise WeightedCMError("Weight forcing only applies to class-pc graphs")
    if kind is GeneratorKind.SHARED_PENTAGONS:
        return random_shared_pentagons(n, rng, max_weight)
    return random_girth5(n, rng, max_weight)


def random_instance(rng: random.Random, max_vertices: int, max_weight: int) -> WeightedGraph:
    """Girth >= 5 instance: class PC, glued pentagons or plain rejection samples."""
    draw = rng.random()
    if draw < 1 / 6 and max_vertices >= 7:
        return random_shared_pentagons(rng.randint(7, max_vertices), rng, max_weight)
    if draw < 2 / 3 and max_vertices >= 2:
        n = rng.choice(class_pc_sizes(max_vertices))
        force = rng.choice(list(Force))
        try:
            return random_class_pc(n, rng, max_weight, force)
        except GeneratorError:
            return random_class_pc(n, rng, max_weight, Force.RANDOM)
    return random_girth5(rng.randint(1, max_vertices), rng, max_weight)
