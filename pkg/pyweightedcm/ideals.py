"""Monomial ideal arithmetic over named variables."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
import logging
import re
from typing import Any

from sympy.polys.monomials import (
    monomial_deg,
    monomial_div,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)

from .exceptions import UnknownVertexError, WeightedCMError
from .graph import WeightedGraph, delete_vertices, fresh_label, with_edges

_LOGGER = logging.getLogger(__name__)

_FACTOR = re.compile(r"^([^\^\s]+)(?:\^(\d+))?$")


class Monomial:
    """x^a with a finitely supported exponent map; zero exponents dropped.

    Arithmetic aligns both operands on a common variable tuple and runs the
    exponent-tuple helpers of ``sympy.polys.monomials``.
    """

    __slots__ = ("_items", "_exponents", "_hash")

    def __init__(self, exponents: Mapping[str, int] | None = None) -> None:
        """Freeze the exponent map."""
        items = []
        for var, exp in (exponents or {}).items():
            if isinstance(exp, bool) or not isinstance(exp, int) or exp < 0:
                raise WeightedCMError(f"Bad exponent for {var}: {exp!r}")
            if exp:
                items.append((var, exp))
        self._items: tuple[tuple[str, int], ...] = tuple(sorted(items))
        self._exponents: dict[str, int] = dict(self._items)
        self._hash = hash(self._items)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """Read ``"x^2*y^2"`` (``"1"`` is the unit monomial)."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        exponents: dict[str, int] = {}
        for factor in text.split("*"):
            match = _FACTOR.match(factor.strip())
            if not match:
                raise WeightedCMError(f"Cannot read monomial factor {factor!r}")
            var, exp = match.group(1), int(match.group(2) or 1)
            exponents[var] = exponents.get(var, 0) + exp
        return cls(exponents)

    @classmethod
    def from_tuple(cls, variables: Sequence[str], exponents: Sequence[int]) -> Monomial:
        return cls(dict(zip(variables, exponents)))

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._items)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._exponents)

    @property
    def degree(self) -> int:
        return monomial_deg(self.as_tuple(self._exponents))

    @property
    def is_squarefree(self) -> bool:
        return all(exp == 1 for _, exp in self._items)

    def exponent(self, var: str) -> int:
        return self._exponents.get(var, 0)

    def as_tuple(self, variables: Iterable[str]) -> tuple[int, ...]:
        """Exponent vector over ``variables``."""
        return tuple(self._exponents.get(var, 0) for var in variables)

    def _aligned(self, other: Monomial) -> tuple[tuple[str, ...], tuple[int, ...], tuple[int, ...]]:
        variables = tuple(sorted(self._exponents.keys() | other._exponents.keys()))
        return variables, self.as_tuple(variables), other.as_tuple(variables)

    def divides(self, other: Monomial) -> bool:
        if not self._exponents.keys() <= other._exponents.keys():
            return False
        variables = tuple(self._exponents)
        return monomial_divides(self.as_tuple(variables), other.as_tuple(variables))

    def __mul__(self, other: Monomial) -> Monomial:
        variables, mine, theirs = self._aligned(other)
        return Monomial.from_tuple(variables, monomial_mul(mine, theirs))

    def lcm(self, other: Monomial) -> Monomial:
        variables, mine, theirs = self._aligned(other)
        return Monomial.from_tuple(variables, monomial_lcm(mine, theirs))

    def gcd(self, other: Monomial) -> Monomial:
        variables, mine, theirs = self._aligned(other)
        return Monomial.from_tuple(variables, monomial_gcd(mine, theirs))

    def without(self, other: Monomial) -> Monomial:
        """self / gcd(self, other)."""
        variables, mine, theirs = self._aligned(other)
        return Monomial.from_tuple(variables, monomial_div(mine, monomial_gcd(mine, theirs)))

    def radical(self) -> Monomial:
        return Monomial({var: 1 for var, _ in self._items})

    def sort_key(self) -> tuple[int, tuple[tuple[str, int], ...]]:
        return (self.degree, self._items)

    def to_document(self) -> dict[str, int]:
        return dict(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(var if exp == 1 else f"{var}^{exp}" for var, exp in self._items)


def minimalize(generators: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another one."""
    kept: list[Monomial] = []
    for candidate in sorted(set(generators), key=Monomial.sort_key):
        if not any(g.divides(candidate) for g in kept):
            kept.append(candidate)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal held by its unique minimal generating set."""

    __slots__ = ("_generators",)

    def __init__(self, generators: Iterable[Monomial] = ()) -> None:
        """Minimalize the given generators."""
        self._generators = minimalize(generators)

    @classmethod
    def parse(cls, *monomials: str) -> MonomialIdeal:
        return cls(Monomial.parse(m) for m in monomials)

    @property
    def generators(self) -> tuple[Monomial, ...]:
        """Minimal generators, by degree then exponents."""
        return self._generators

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(var for g in self._generators for var in g.support)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self._generators)

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self._generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self._generators)

    def colon(self, f: Monomial) -> MonomialIdeal:
        """I : f, generated by g / gcd(g, f)."""
        return MonomialIdeal(g.without(f) for g in self._generators)

    def add(self, f: Monomial) -> MonomialIdeal:
        """I + (f)."""
        return MonomialIdeal(self._generators + (f,))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self._generators + other._generators)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """I ∩ J, generated by pairwise lcms."""
        return MonomialIdeal(g.lcm(h) for g in self._generators for h in other._generators)

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal(g.radical() for g in self._generators)

    def height(self) -> int:
        """Least size of a variable set meeting every generator support."""
        if self.is_unit:
            raise WeightedCMError("The unit ideal has no height")
        return transversal_number(frozenset(g.support for g in self._generators))

    def dimension(self, ambient: Iterable[str]) -> int:
        """Krull dimension of K[ambient] / I."""
        _ambient = set(ambient)
        if not self.variables <= _ambient:
            raise UnknownVertexError(
                f"Variables outside the ring: {sorted(self.variables - _ambient)}"
            )
        return len(_ambient) - self.height()

    def to_document(self) -> list[dict[str, int]]:
        return [g.to_document() for g in self._generators]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._generators == other._generators

    def __hash__(self) -> int:
        return hash(self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def __repr__(self) -> str:
        return "(" + ", ".join(repr(g) for g in self._generators) + ")"


@lru_cache(maxsize=4096)
def transversal_number(supports: frozenset[frozenset[str]]) -> int:
    """Least size of a set meeting every support."""
    if not supports:
        return 0
    smallest = min(supports, key=lambda s: (len(s), sorted(s)))
    return 1 + min(
        transversal_number(frozenset(s for s in supports if var not in s))
        for var in smallest
    )


def colon(ideal: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    return ideal.colon(f)


def add(ideal: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    return ideal.add(f)


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection of one or more ideals."""
    if not ideals:
        raise WeightedCMError("Nothing to intersect")
    result = ideals[0]
    for other in ideals[1:]:
        result = result.intersect(other)
    return result


def add_ideals(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    return left + right


def product_generators(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """I * J, generated by pairwise products."""
    return MonomialIdeal(g * h for g in left.generators for h in right.generators)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return ideal.radical()


def equals(left: MonomialIdeal, right: MonomialIdeal) -> bool:
    return left == right


def power(var: str, exponent: int) -> Monomial:
    return Monomial({var: exponent})


def weighted_edge_ideal(g: WeightedGraph) -> MonomialIdeal:
    """I(G_w) = ((x_i x_j)^w(x_i x_j))."""
    return MonomialIdeal(Monomial({u: w, v: w}) for (u, v), w in g.weights.items())


def edge_ideal(g: WeightedGraph) -> MonomialIdeal:
    """I(G), the trivially weighted edge ideal."""
    return MonomialIdeal(Monomial({u: 1, v: 1}) for u, v in g.edges)


@dataclass(frozen=True)
class Polarization:
    """Squarefree ideal plus the map variable -> its indexed copies."""

    ideal: MonomialIdeal
    expansion: dict[str, tuple[str, ...]]
    ambient: tuple[str, ...]


def polarize(ideal: MonomialIdeal, ambient: Iterable[str] = ()) -> Polarization:
    """x^e -> x_1 * ... * x_e in every generator, over fresh indexed copies.

    Copies are named ``<var><sep><index>``; the separator grows until no
    copy collides with a label of the ring.
    """

    labels = set(ambient) | ideal.variables
    reach: dict[str, int] = {var: 0 for var in labels}
    for g in ideal.generators:
        for var, exp in g.exponents.items():
            reach[var] = max(reach[var], exp)

    separator = "_"
    while any(f"{var}{separator}{i}" in labels for var, top in reach.items() for i in range(1, top + 1)):
        separator += "_"

    expansion = {
        var: tuple(f"{var}{separator}{i}" for i in range(1, reach[var] + 1))
        for var in sorted(labels)
    }
    polarized = MonomialIdeal(
        Monomial({copy: 1 for var, exp in g.exponents.items() for copy in expansion[var][:exp]})
        for g in ideal.generators
    )
    _ambient = tuple(copy for var in sorted(labels) for copy in expansion[var])
    return Polarization(ideal=polarized, expansion=expansion, ambient=_ambient)


def ideal_to_document(ideal: MonomialIdeal) -> list[dict[str, int]]:
    return ideal.to_document()


@dataclass(frozen=True)
class Identity:
    """Two ideals that must coincide."""

    name: str
    left: MonomialIdeal
    right: MonomialIdeal

    @property
    def holds(self) -> bool:
        return self.left == self.right

    def to_document(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "holds": self.holds,
            "left": self.left.to_document(),
            "right": self.right.to_document(),
        }


def reduction_identities(g: WeightedGraph, x: str, y: str, v: str) -> list[Identity]:
    """Colon and sum identities at a balanced vertex x with cycle neighbours y, v.

    With m = w(xy) and the other neighbours y_i of x (weights m_i):

    - I : x^m = (y^m, v^m) + (y_i^m_i) + I(G minus {x, y, v})
    - I + (x^m) = (x^m, x^m_i y_i^m_i) + I(G minus x)
    - I(H) : w^m = I + (x^m), H = G - xy - xv + xw with w(xw) = m
    - I(H') : x^m = (w^m, y_i^m_i) + I(G minus {x, y, v}), H' = G minus {y, v} + xw
    """

    m = g.weight(x, y)
    others = [t for t in g.neighbors(x) if t not in (y, v)]
    ideal = weighted_edge_ideal(g)
    outer = weighted_edge_ideal(delete_vertices(g, (x, y, v)))
    leaf = fresh_label(g, "w")

    colon_right = outer + MonomialIdeal(
        [power(y, m), power(v, m)] + [power(t, g.weight(x, t)) for t in others]
    )
    sum_right = weighted_edge_ideal(delete_vertices(g, (x,))) + MonomialIdeal(
        [power(x, m)] + [Monomial({x: g.weight(x, t), t: g.weight(x, t)}) for t in others]
    )
    h = with_edges(g, add={(x, leaf): m}, remove=[(x, y), (x, v)], new_vertices=[leaf])
    h_prime = with_edges(
        delete_vertices(g, (y, v)), add={(x, leaf): m}, new_vertices=[leaf]
    )
    prime_right = outer + MonomialIdeal(
        [power(leaf, m)] + [power(t, g.weight(x, t)) for t in others]
    )

    return [
        Identity("colon", ideal.colon(power(x, m)), colon_right),
        Identity("sum", ideal.add(power(x, m)), sum_right),
        Identity("leaf-colon", weighted_edge_ideal(h).colon(power(leaf, m)), ideal.add(power(x, m))),
        Identity("leaf-colon-prime", weighted_edge_ideal(h_prime).colon(power(x, m)), prime_right),
    ]
