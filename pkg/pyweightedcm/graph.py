"""Edge-weighted simple graphs."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import cached_property
import json
import logging
from typing import Any

import networkx as nx

from .constants import MAX_WEIGHT, DeleteMode
from .exceptions import (
    DanglingEndpointError,
    DuplicateEdgeError,
    GraphDocumentError,
    InvalidWeightError,
    LoopError,
    UnknownVertexError,
)

_LOGGER = logging.getLogger(__name__)

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    """Canonical (min-label, max-label) key of an undirected edge."""
    return (u, v) if u <= v else (v, u)


def _check_weight(weight: Any, where: str) -> int:
    # bool is an int subclass; reject it explicitly.
    if isinstance(weight, bool) or not isinstance(weight, int):
        raise InvalidWeightError(f"Weight of {where} is not an integer: {weight!r}")
    if weight < 1:
        raise InvalidWeightError(f"Weight of {where} is below 1: {weight}")
    if weight > MAX_WEIGHT:
        raise InvalidWeightError(f"Weight of {where} exceeds {MAX_WEIGHT}: {weight}")
    return weight


class WeightedGraph:
    """Simple undirected graph with positive integer edge weights.

    Vertex order is the document order and every query that returns
    vertices returns them in that order. Instances are never mutated.
    """

    def __init__(
        self, vertices: Iterable[str], weights: Mapping[Edge, int] | None = None
    ) -> None:
        """Validate and freeze the graph."""
        self._vertices: tuple[str, ...] = tuple(vertices)
        self._index: dict[str, int] = {}
        for _position, _vertex in enumerate(self._vertices):
            if not isinstance(_vertex, str):
                raise GraphDocumentError(f"Vertex label is not a string: {_vertex!r}")
            if _vertex in self._index:
                raise GraphDocumentError(f"Vertex declared twice: {_vertex}")
            self._index[_vertex] = _position

        self._weights: dict[Edge, int] = {}
        self._adjacency: dict[str, set[str]] = {v: set() for v in self._vertices}
        for (u, v), weight in (weights or {}).items():
            if u == v:
                raise LoopError(f"loop at {u}")
            for _endpoint in (u, v):
                if _endpoint not in self._index:
                    raise DanglingEndpointError(
                        f"Edge {u}-{v} uses undeclared vertex {_endpoint}"
                    )
            key = edge_key(u, v)
            if key in self._weights:
                raise DuplicateEdgeError(f"Edge {u}-{v} listed twice")
            self._weights[key] = _check_weight(weight, f"{u}-{v}")
            self._adjacency[u].add(v)
            self._adjacency[v].add(u)

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertices in document order."""
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Canonical edge keys, sorted."""
        return tuple(sorted(self._weights))

    @property
    def weights(self) -> dict[Edge, int]:
        """Copy of the weight map keyed by canonical edges."""
        return dict(self._weights)

    def index(self, vertex: str) -> int:
        """Document position of a vertex."""
        self._require(vertex)
        return self._index[vertex]

    def order(self, vertices: Iterable[str]) -> list[str]:
        """Sort vertices by document order."""
        return sorted(vertices, key=self.index)

    def weight(self, u: str, v: str) -> int:
        """Weight of the edge uv."""
        try:
            return self._weights[edge_key(u, v)]
        except KeyError as err:
            raise UnknownVertexError(f"No edge {u}-{v}") from err

    def has_edge(self, u: str, v: str) -> bool:
        """Whether u and v are adjacent."""
        return edge_key(u, v) in self._weights

    def neighbors(self, vertex: str) -> list[str]:
        """Open neighbourhood in document order."""
        self._require(vertex)
        return self.order(self._adjacency[vertex])

    def degree(self, vertex: str) -> int:
        """Number of neighbors of ``vertex``."""
        self._require(vertex)
        return len(self._adjacency[vertex])

    def incident_weights(self, vertex: str) -> list[int]:
        """Distinct weights of edges at a vertex, ascending."""
        self._require(vertex)
        return sorted({self.weight(vertex, w) for w in self._adjacency[vertex]})

    @cached_property
    def graph(self) -> nx.Graph:
        """networkx view with a ``weight`` edge attribute."""
        _graph = nx.Graph()
        _graph.add_nodes_from(self._vertices)
        for (u, v), weight in self._weights.items():
            _graph.add_edge(u, v, weight=weight)
        return _graph

    def _require(self, vertex: str) -> None:
        if vertex not in self._index:
            raise UnknownVertexError(f"Unknown vertex: {vertex}")

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices and self._weights == other._weights
        )

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._weights.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(vertices={len(self)}, edges={len(self._weights)})"


def parse_graph(text: str | Mapping[str, Any]) -> WeightedGraph:
    """Build a graph from a graph document (JSON text or decoded mapping).

    ``vertices`` may be omitted, in which case edge endpoints are taken in
    order of first appearance. An edge without ``w`` has weight 1.
    """

    if isinstance(text, str):
        try:
            _document = json.loads(text)
        except ValueError as err:
            raise GraphDocumentError(f"Impossible to decode graph document: {err}") from err
    else:
        _document = text

    if not isinstance(_document, Mapping):
        raise GraphDocumentError("Graph document must be an object")

    _edges = _document.get("edges", [])
    if not isinstance(_edges, list):
        raise GraphDocumentError("'edges' must be a list")

    _declared = _document.get("vertices")
    if _declared is not None and not isinstance(_declared, list):
        raise GraphDocumentError("'vertices' must be a list")
    vertices: list[str] = list(_declared) if _declared is not None else []
    weights: dict[Edge, int] = {}

    for position, item in enumerate(_edges):
        if not isinstance(item, Mapping) or "u" not in item or "v" not in item:
            raise GraphDocumentError(f"Edge #{position} needs 'u' and 'v'")
        u, v = item["u"], item["v"]
        if u == v:
            raise LoopError(f"loop at {u}")
        weight = _check_weight(item.get("w", 1), f"{u}-{v}")
        if _declared is None:
            vertices.extend(x for x in (u, v) if x not in vertices)
        elif u not in vertices or v not in vertices:
            missing = u if u not in vertices else v
            raise DanglingEndpointError(f"Edge {u}-{v} uses undeclared vertex {missing}")
        key = edge_key(u, v)
        if key in weights:
            raise DuplicateEdgeError(f"Edge {u}-{v} listed twice")
        weights[key] = weight

    return WeightedGraph(vertices, weights)


def serialize_graph(g: WeightedGraph) -> dict[str, Any]:
    """Canonical graph document; edges sorted by canonical key."""
    return {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "w": g.weight(u, v)} for u, v in g.edges],
    }


def dump_graph(g: WeightedGraph) -> str:
    """Canonical JSON text of ``g``."""
    return json.dumps(serialize_graph(g), sort_keys=True)


def load_graph(path: str) -> WeightedGraph:
    """Read a graph document from disk."""
    with open(path, "r", encoding="UTF-8") as _file:
        return parse_graph(_file.read())


def neighborhood(g: WeightedGraph, v: str, closed: bool = False) -> list[str]:
    """N_G(v), or N_G[v] when ``closed``."""
    _open = set(g.neighbors(v))
    if closed:
        _open.add(v)
    return g.order(_open)


def degree(g: WeightedGraph, v: str) -> int:
    """Degree of ``v`` in ``g``."""
    return g.degree(v)


def induced_subgraph(g: WeightedGraph, vertices: Iterable[str]) -> WeightedGraph:
    """G[X] with inherited weights, vertices kept in document order."""
    keep = set(vertices)
    for vertex in keep:
        if vertex not in g:
            raise UnknownVertexError(f"Unknown vertex: {vertex}")
    return WeightedGraph(
        [v for v in g.vertices if v in keep],
        {e: w for e, w in g.weights.items() if e[0] in keep and e[1] in keep},
    )


def delete(
    g: WeightedGraph, v: str, mode: DeleteMode | str = DeleteMode.VERTEX
) -> WeightedGraph:
    """G minus v, or G minus N[v] (written G_v)."""
    mode = DeleteMode(mode)
    if mode is DeleteMode.CLOSED_NEIGHBORHOOD:
        removed = set(neighborhood(g, v, closed=True))
    else:
        g.index(v)
        removed = {v}
    return induced_subgraph(g, [x for x in g.vertices if x not in removed])


def delete_vertices(g: WeightedGraph, removed: Iterable[str]) -> WeightedGraph:
    """G minus X."""
    _removed = set(removed)
    for vertex in _removed:
        if vertex not in g:
            raise UnknownVertexError(f"Unknown vertex: {vertex}")
    return induced_subgraph(g, [x for x in g.vertices if x not in _removed])


def components(g: WeightedGraph) -> list[WeightedGraph]:
    """Connected components, ordered by their least vertex in document order."""
    parts = [g.order(c) for c in nx.connected_components(g.graph)]
    parts.sort(key=lambda part: g.index(part[0]))
    return [induced_subgraph(g, part) for part in parts]


def with_edges(
    g: WeightedGraph,
    add: Mapping[Edge, int] | None = None,
    remove: Iterable[Edge] = (),
    new_vertices: Iterable[str] = (),
) -> WeightedGraph:
    """Edge surgery: drop ``remove``, append ``new_vertices``, add ``add``."""
    weights = g.weights
    for u, v in remove:
        if weights.pop(edge_key(u, v), None) is None:
            raise UnknownVertexError(f"No edge {u}-{v}")
    vertices = list(g.vertices) + [v for v in new_vertices if v not in g]
    for (u, v), weight in (add or {}).items():
        key = edge_key(u, v)
        if key in weights:
            raise DuplicateEdgeError(f"Edge {u}-{v} already present")
        weights[key] = weight
    return WeightedGraph(vertices, weights)


def scaled(g: WeightedGraph, factor: int) -> WeightedGraph:
    """Every weight multiplied by ``factor``."""
    return WeightedGraph(g.vertices, {e: w * factor for e, w in g.weights.items()})


def trivially_weighted(g: WeightedGraph, weight: int = 1) -> WeightedGraph:
    """Same underlying graph, constant weight."""
    return WeightedGraph(g.vertices, {e: weight for e in g.edges})


def is_trivially_weighted(g: WeightedGraph) -> bool:
    return len(set(g.weights.values())) <= 1


def fresh_label(g: WeightedGraph, stem: str) -> str:
    """A vertex label based on ``stem`` not used in ``g``."""
    label, counter = stem, 0
    while label in g:
        counter += 1
        label = f"{stem}{counter}"
    return label
