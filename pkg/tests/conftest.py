"""Shared graphs."""
from __future__ import annotations

import pytest

from pyweightedcm.graph import WeightedGraph, edge_key

CYCLE = ("x", "y", "z", "u", "v")


def make_graph(edges, vertices=None) -> WeightedGraph:
    """Build from (u, v, weight) triples; vertices default to first appearance."""
    if vertices is None:
        vertices = []
        for u, v, _ in edges:
            vertices.extend(x for x in (u, v) if x not in vertices)
    return WeightedGraph(vertices, {edge_key(u, v): w for u, v, w in edges})


def five_cycle(weights, labels=CYCLE) -> WeightedGraph:
    """C5 with weights read along labels[0] -> labels[1] -> ... -> labels[0]."""
    return make_graph(
        [(labels[i], labels[(i + 1) % 5], weights[i]) for i in range(5)], list(labels)
    )


@pytest.fixture
def c5():
    return five_cycle((1, 2, 1, 2, 1))


@pytest.fixture
def c5_trivial():
    return five_cycle((1, 1, 1, 1, 1))


@pytest.fixture
def p3():
    return make_graph([("x", "y", 2), ("y", "z", 1)])


@pytest.fixture
def p4():
    return make_graph([("a", "b", 1), ("b", "c", 2), ("c", "d", 1)])


@pytest.fixture
def k2():
    return make_graph([("a", "b", 2)])


@pytest.fixture
def star():
    return make_graph([("c", "l1", 1), ("c", "l2", 1), ("c", "l3", 1)])


@pytest.fixture
def c7():
    labels = [f"x{i}" for i in range(7)]
    return make_graph([(labels[i], labels[(i + 1) % 7], 1) for i in range(7)], labels)


@pytest.fixture
def triangle():
    return make_graph([("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])


@pytest.fixture
def c5_pendant():
    """C5 of weight 2 with a pendant pair w - w2 hung at x by an edge of weight 3."""
    return make_graph(
        [
            ("x", "y", 2),
            ("y", "z", 2),
            ("z", "u", 2),
            ("u", "v", 2),
            ("v", "x", 2),
            ("x", "w", 3),
            ("w", "w2", 3),
        ]
    )


@pytest.fixture
def two_cycles():
    """Two basic 5-cycles joined through pendant pairs; z and c are balanced."""
    return make_graph(
        [
            ("x", "y", 2),
            ("y", "z", 1),
            ("z", "u", 1),
            ("u", "v", 2),
            ("v", "x", 1),
            ("a", "b", 2),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "e", 2),
            ("e", "a", 1),
            ("x", "f", 1),
            ("f", "g", 2),
            ("f", "a", 1),
            ("z", "h", 1),
            ("h", "i", 3),
            ("c", "j", 1),
            ("j", "k", 1),
        ]
    )


@pytest.fixture
def shared_path_pentagons():
    """Two pentagons through the path v0 - v6 - v3."""
    pairs = [("v0", "v1"), ("v0", "v5"), ("v0", "v6"), ("v1", "v2"),
             ("v2", "v3"), ("v3", "v4"), ("v3", "v6"), ("v4", "v5")]
    return make_graph([(u, v, 1) for u, v in pairs], [f"v{i}" for i in range(7)])


@pytest.fixture
def shared_vertex_pentagons():
    """Two pentagons meeting only at v0."""
    labels = [f"v{i}" for i in range(9)]
    first, second = labels[0:5], [labels[0]] + labels[5:9]
    return make_graph(
        [(ring[i], ring[(i + 1) % 5], 1) for ring in (first, second) for i in range(5)], labels
    )
