"""Exact Cohen-Macaulay test for monomial ideals at desk scale.

The weighted edge ideal is polarized to a squarefree ideal I and Reisner's
criterion is evaluated on its Stanley-Reisner complex K: K is CM over a
field F iff H~_i(K; F) = 0 for i < dim K and every vertex link is CM.

Homology of K is read off the nerve N of its Alexander dual. The facets of
the dual are the complements of the minimal nonfaces S of K, so N has one
vertex per generator and a face for each set of generators whose union is
not the whole vertex set. With n vertices and height h, dim K = n - h - 1
and H~_i(K) = H~^(n-i-3)(N), hence K satisfies the vanishing condition iff
H~_j(N; F) = 0 for every j >= h - 1.

Vertex links are colon ideals I : x_v. Twin variables (same generators)
give isomorphic links, so one per class is checked, and every verdict is
memoized exactly and up to isomorphism of the generator incidence graph.
"""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
import itertools
import logging
from typing import Any

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .constants import DEFAULT_FACE_BUDGET, resolve_budget
from .exceptions import (
    BudgetExceededError,
    NotSquarefreeError,
    UnknownVertexError,
    WeightedCMError,
)
from .graph import WeightedGraph
from .ideals import MonomialIdeal, polarize, transversal_number, weighted_edge_ideal

_LOGGER = logging.getLogger(__name__)

Support = frozenset[str]
_KIND = categorical_node_match("kind", None)


def _minimal(family: Iterable[frozenset]) -> list[frozenset]:
    """Inclusion-minimal members, smallest first."""
    kept: list[frozenset] = []
    for candidate in sorted(set(family), key=lambda s: (len(s), sorted(s))):
        if not any(k <= candidate for k in kept):
            kept.append(candidate)
    return kept


def minimal_transversals(family: Iterable[Support]) -> list[Support]:
    """Minimal sets meeting every member of ``family`` (Berge's algorithm)."""
    found: list[Support] = [frozenset()]
    for member in family:
        grown: set[Support] = set()
        for t in found:
            if t & member:
                grown.add(t)
            else:
                grown.update(t | {x} for x in member)
        found = _minimal(grown)
    return found


class _FaceBudget:
    def __init__(self, limit: int | None) -> None:
        self.limit = resolve_budget(DEFAULT_FACE_BUDGET, limit)
        self.spent = 0

    def spend(self, count: int = 1) -> None:
        self.spent += count
        if self.spent > self.limit:
            raise BudgetExceededError(f"More than {self.limit} faces enumerated")


class SimplicialComplex:
    """Complex on a vertex set, given by its facets.

    A vertex of the set lying in no facet is a ghost: {v} is a nonface.
    A complex with no facet listed is {∅}.
    """

    def __init__(self, vertices: Iterable[str], facets: Iterable[Iterable[str]] = ()) -> None:
        """Keep the inclusion-maximal facets."""
        self._vertices = tuple(dict.fromkeys(vertices))
        _known = set(self._vertices)
        _facets = {frozenset(f) for f in facets}
        for facet in _facets:
            if not facet <= _known:
                raise UnknownVertexError(f"Facet uses unknown vertices: {sorted(facet - _known)}")
        maximal = [f for f in _facets if not any(f < other for other in _facets)]
        self._facets: tuple[frozenset[str], ...] = tuple(
            sorted(maximal, key=lambda f: (-len(f), sorted(f)))
        ) or (frozenset(),)

    @classmethod
    def from_nonfaces(
        cls, vertices: Iterable[str], nonfaces: Iterable[Iterable[str]]
    ) -> SimplicialComplex:
        """Faces are the subsets of ``vertices`` containing no listed nonface."""
        _vertices = tuple(vertices)
        _nonfaces = [frozenset(s) for s in nonfaces]
        if any(not s for s in _nonfaces):
            raise WeightedCMError("The empty set cannot be a nonface")
        everything = frozenset(_vertices)
        facets = [everything - t for t in minimal_transversals(_nonfaces)]
        return cls(_vertices, facets)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def facets(self) -> tuple[frozenset[str], ...]:
        return self._facets

    @property
    def dimension(self) -> int:
        return len(self._facets[0]) - 1

    @cached_property
    def minimal_nonfaces(self) -> tuple[Support, ...]:
        """Minimal sets lying in no facet; ghost vertices appear as singletons."""
        everything = frozenset(self._vertices)
        return tuple(minimal_transversals(everything - f for f in self._facets))

    def faces(self, budget: int | None = None) -> dict[int, list[tuple[str, ...]]]:
        """Every face by dimension, the empty face at -1, vertices in order."""
        _budget = _FaceBudget(budget)
        position = {v: i for i, v in enumerate(self._vertices)}
        seen: set[tuple[str, ...]] = set()
        for facet in self._facets:
            ordered = sorted(facet, key=position.__getitem__)
            for size in range(len(ordered) + 1):
                for face in itertools.combinations(ordered, size):
                    if face not in seen:
                        _budget.spend()
                        seen.add(face)
        by_dimension: dict[int, list[tuple[str, ...]]] = defaultdict(list)
        for face in seen:
            by_dimension[len(face) - 1].append(face)
        return {
            d: sorted(found, key=lambda f: [position[v] for v in f])
            for d, found in sorted(by_dimension.items())
        }

    def f_vector(self, budget: int | None = None) -> list[int]:
        """(f_-1, f_0, ..., f_dim)."""
        return [len(found) for found in self.faces(budget).values()]

    def reduced_euler_characteristic(self, budget: int | None = None) -> int:
        return sum((-1) ** d * len(found) for d, found in self.faces(budget).items())

    def link(self, face: Iterable[str]) -> SimplicialComplex:
        _face = frozenset(face)
        containing = [f - _face for f in self._facets if _face <= f]
        if not containing:
            raise WeightedCMError(f"{sorted(_face)} is not a face")
        kept = set().union(*containing)
        return SimplicialComplex([v for v in self._vertices if v in kept], containing)

    def cone(self, apex: str) -> SimplicialComplex:
        if apex in self._vertices:
            raise WeightedCMError(f"Apex {apex} is already a vertex")
        return SimplicialComplex(self._vertices + (apex,), [f | {apex} for f in self._facets])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and set(self._facets) == set(
            other._facets
        )

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), frozenset(self._facets)))

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self._vertices)}, facets={len(self._facets)})"


@dataclass(frozen=True)
class HomologyGroup:
    """H~_d over the integers: free rank plus torsion coefficients."""

    dimension: int
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def has_torsion(self) -> bool:
        return bool(self.torsion)

    def to_document(self) -> dict[str, Any]:
        return {"dimension": self.dimension, "rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class OracleReport:
    cohen_macaulay: bool
    torsion_warning: bool
    links_checked: int
    polarized_variables: int
    characteristic: int = 0

    def to_document(self) -> dict[str, Any]:
        return {
            "cohen_macaulay": self.cohen_macaulay,
            "torsion_warning": self.torsion_warning,
            "links_checked": self.links_checked,
            "polarized_variables": self.polarized_variables,
            "characteristic": self.characteristic,
        }


def _check_characteristic(characteristic: int) -> int:
    if characteristic != 0 and not (characteristic > 1 and isprime(characteristic)):
        raise WeightedCMError(f"Characteristic must be 0 or a prime, not {characteristic}")
    return characteristic


def _invariant_factors(rows: Mapping[int, Mapping[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix.

    Unit pivots are eliminated first; whatever is left goes through the
    integer Smith normal form.
    """

    matrix = {r: dict(entries) for r, entries in rows.items() if entries}
    columns: dict[int, set[int]] = defaultdict(set)
    for r, entries in matrix.items():
        for c in entries:
            columns[c].add(r)

    units = 0
    while True:
        pivots = [
            (len(entries) * len(columns[c]), r, c)
            for r, entries in matrix.items()
            for c, value in entries.items()
            if abs(value) == 1
        ]
        if not pivots:
            break
        _, r, c = min(pivots)
        pivot_row = matrix.pop(r)
        sign = pivot_row[c]
        for col in pivot_row:
            columns[col].discard(r)
        for other in list(columns[c]):
            row = matrix[other]
            factor = row[c] * sign
            for col, value in pivot_row.items():
                updated = row.get(col, 0) - factor * value
                if updated:
                    row[col] = updated
                    columns[col].add(other)
                else:
                    row.pop(col, None)
                    columns[col].discard(other)
            if not row:
                del matrix[other]
        del columns[c]
        units += 1

    if not matrix:
        return [1] * units

    kept_columns = sorted({c for entries in matrix.values() for c in entries})
    where = {c: i for i, c in enumerate(kept_columns)}
    dense = [[ZZ(0)] * len(kept_columns) for _ in matrix]
    for i, entries in enumerate(matrix.values()):
        for c, value in entries.items():
            dense[i][where[c]] = ZZ(value)
    _matrix = DomainMatrix(dense, (len(dense), len(kept_columns)), ZZ)
    rest = [abs(int(f)) for f in invariant_factors(_matrix) if f]
    return [1] * units + rest


def _chain_homology(faces: Mapping[int, Sequence[tuple]]) -> list[HomologyGroup]:
    """Reduced integral homology of an augmented chain complex.

    ``faces`` maps dimension to sorted tuples and must contain the empty face.
    """

    top = max(faces)
    index = {d: {face: i for i, face in enumerate(found)} for d, found in faces.items()}
    rank: dict[int, int] = defaultdict(int)
    torsion: dict[int, tuple[int, ...]] = defaultdict(tuple)

    for d in range(0, top + 1):
        below = index.get(d - 1, {})
        rows: dict[int, dict[int, int]] = defaultdict(dict)
        for col, face in enumerate(faces.get(d, ())):
            for i in range(len(face)):
                rows[below[face[:i] + face[i + 1 :]]][col] = -1 if i % 2 else 1
        factors = _invariant_factors(rows)
        rank[d] = len(factors)
        torsion[d - 1] = tuple(sorted(f for f in factors if f > 1))

    return [
        HomologyGroup(d, len(faces.get(d, ())) - rank[d] - rank[d + 1], torsion[d])
        for d in range(-1, top + 1)
    ]


def field_betti_numbers(groups: Sequence[HomologyGroup], characteristic: int = 0) -> dict[int, int]:
    """dim H~_d over Q or F_p, by universal coefficients."""
    _check_characteristic(characteristic)
    by_dimension = {g.dimension: g for g in groups}
    result = {}
    for g in groups:
        value = g.rank
        if characteristic:
            below = by_dimension.get(g.dimension - 1)
            value += sum(1 for t in g.torsion if t % characteristic == 0)
            if below is not None:
                value += sum(1 for t in below.torsion if t % characteristic == 0)
        result[g.dimension] = value
    return result


def reduced_homology_ranks(
    complex_: SimplicialComplex, budget: int | None = None
) -> list[HomologyGroup]:
    """H~_d(K; Z) for d = -1 .. dim K via boundary matrices and SNF."""
    return _chain_homology(complex_.faces(budget))


def stanley_reisner_complex(ideal: MonomialIdeal, ambient: Iterable[str] = ()) -> SimplicialComplex:
    """Complex whose minimal nonfaces are the generator supports."""
    if not ideal.is_squarefree:
        raise NotSquarefreeError(f"{ideal!r} is not squarefree")
    if ideal.is_unit:
        raise WeightedCMError("The unit ideal has no Stanley-Reisner complex")
    _ambient = list(dict.fromkeys(ambient))
    stray = ideal.variables - set(_ambient)
    if _ambient and stray:
        raise UnknownVertexError(f"Variables outside the ring: {sorted(stray)}")
    if not _ambient:
        _ambient = sorted(ideal.variables)
    return SimplicialComplex.from_nonfaces(_ambient, (g.support for g in ideal.generators))


def _normalize(supports: Iterable[Support]) -> frozenset[Support]:
    """Drop ghost vertices and non-minimal supports; cone points vanish too."""
    family = set(supports)
    ghosts = {x for s in family if len(s) == 1 for x in s}
    return frozenset(_minimal(s for s in family if not s & ghosts))


def _incidence_graph(key: frozenset[Support]) -> nx.Graph:
    graph = nx.Graph()
    for i, support in enumerate(sorted(key, key=sorted)):
        graph.add_node(("g", i), kind="generator")
        for x in support:
            graph.add_node(("x", x), kind="variable")
            graph.add_edge(("g", i), ("x", x))
    return graph


class _ReisnerSearch:
    """Recursive Reisner check over normalized squarefree supports."""

    def __init__(self, characteristic: int, budget: int | None) -> None:
        self.characteristic = _check_characteristic(characteristic)
        self.budget = _FaceBudget(budget)
        self.links_checked = 0
        self.torsion_warning = False
        self._memo: dict[frozenset[Support], bool] = {}
        self._buckets: dict[str, list[tuple[nx.Graph, bool]]] = defaultdict(list)

    def is_cm(self, supports: Iterable[Support]) -> bool:
        key = _normalize(supports)
        if not key:
            return True
        if key in self._memo:
            return self._memo[key]

        graph = _incidence_graph(key)
        digest = nx.weisfeiler_lehman_graph_hash(graph, node_attr="kind")
        for other, verdict in self._buckets[digest]:
            if nx.is_isomorphic(graph, other, node_match=_KIND):
                self._memo[key] = verdict
                return verdict

        verdict = self._vanishes(key) and all(
            self.is_cm(self._link(key, x)) for x in self._twin_representatives(key)
        )
        self._memo[key] = verdict
        self._buckets[digest].append((graph, verdict))
        return verdict

    def _nerve(self, generators: list[Support], everything: Support) -> dict[int, list[tuple[int, ...]]]:
        faces: dict[int, list[tuple[int, ...]]] = defaultdict(list)
        faces[-1].append(())
        stack: list[tuple[tuple[int, ...], Support]] = [((), frozenset())]
        while stack:
            face, union = stack.pop()
            for i in range(face[-1] + 1 if face else 0, len(generators)):
                grown = union | generators[i]
                if len(grown) < len(everything):
                    self.budget.spend()
                    child = face + (i,)
                    faces[len(face)].append(child)
                    stack.append((child, grown))
        return {d: sorted(found) for d, found in sorted(faces.items())}

    def _vanishes(self, key: frozenset[Support]) -> bool:
        """H~_i(K; F) = 0 below dim K, through the dual nerve."""
        self.links_checked += 1
        generators = sorted(key, key=sorted)
        everything = frozenset().union(*generators)
        height = transversal_number(key)
        groups = _chain_homology(self._nerve(generators, everything))
        if not self.characteristic and any(
            g.has_torsion for g in groups if g.dimension >= height - 2
        ):
            if not self.torsion_warning:
                _LOGGER.warning("Torsion in link homology; the verdict may depend on the field")
            self.torsion_warning = True
        betti = field_betti_numbers(groups, self.characteristic)
        return all(value == 0 for d, value in betti.items() if d >= height - 1)

    @staticmethod
    def _twin_representatives(key: frozenset[Support]) -> list[str]:
        incidence: dict[str, set[int]] = defaultdict(set)
        for i, support in enumerate(sorted(key, key=sorted)):
            for x in support:
                incidence[x].add(i)
        classes: dict[frozenset[int], str] = {}
        for x in sorted(incidence):
            classes.setdefault(frozenset(incidence[x]), x)
        return list(classes.values())

    @staticmethod
    def _link(key: frozenset[Support], x: str) -> list[Support]:
        return [s - {x} for s in key]


def reisner_is_cm(
    complex_: SimplicialComplex, characteristic: int = 0, budget: int | None = None
) -> bool:
    """Every link, K included, has vanishing reduced homology below its dimension."""
    return _ReisnerSearch(characteristic, budget).is_cm(complex_.minimal_nonfaces)


def _report(
    ideal: MonomialIdeal, ambient: Iterable[str], characteristic: int, budget: int | None
) -> OracleReport:
    if ideal.is_unit:
        raise WeightedCMError("The unit ideal has no Stanley-Reisner complex")
    polarization = polarize(ideal, ambient)
    search = _ReisnerSearch(characteristic, budget)
    verdict = search.is_cm(g.support for g in polarization.ideal.generators)
    _LOGGER.debug(
        "Oracle checked %d links over %d faces", search.links_checked, search.budget.spent
    )
    return OracleReport(
        cohen_macaulay=verdict,
        torsion_warning=search.torsion_warning,
        links_checked=search.links_checked,
        polarized_variables=len(polarization.ambient),
        characteristic=characteristic,
    )


def is_cm_ideal(
    ideal: MonomialIdeal,
    ambient: Iterable[str] = (),
    characteristic: int = 0,
    budget: int | None = None,
) -> bool:
    """Is K[ambient] / I Cohen-Macaulay, for any monomial ideal I."""
    return _report(ideal, ambient, characteristic, budget).cohen_macaulay


def oracle_report(
    g: WeightedGraph, characteristic: int = 0, budget: int | None = None
) -> OracleReport:
    return _report(weighted_edge_ideal(g), g.vertices, characteristic, budget)


def is_cm_oracle(g: WeightedGraph, characteristic: int = 0, budget: int | None = None) -> bool:
    """Polarize I(G_w), then Reisner's criterion on its Stanley-Reisner complex."""
    return oracle_report(g, characteristic, budget).cohen_macaulay
