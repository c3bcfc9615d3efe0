"""Balanced vertices and the weight conditions deciding Cohen-Macaulayness.

For G of girth at least 5, G_w is Cohen-Macaulay exactly when G is in
class PC and

  (a) every pendant edge weighs at least as much as each edge adjacent to it,
  (b) every basic 5-cycle has a balanced vertex whose two cycle neighbours
      have degree 2,
  (c) a cycle vertex x of degree >= 3 with cycle neighbours y, v has
      min(w(xy), w(xv)) >= w(xt) for every other neighbour t.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
import math
from typing import Any

from .constants import MIN_GIRTH, Condition, Verdict
from .exceptions import NotAFiveCycleError, PCWitnessError
from .graph import Edge, WeightedGraph, components
from .structure import (
    Cycle,
    NotPC,
    PCWitness,
    classify_pc,
    girth,
    is_basic,
    is_induced_five_cycle,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalancedVertexWitness:
    """Cycle read as (x, y, z, u, v) from the balanced vertex x.

    m = w(xy), p = w(yz), q = w(zu), r = w(uv), n = w(vx) with m = n and
    m <= p >= q <= r >= n.
    """

    cycle: Cycle
    vertex: str
    m: int
    p: int
    q: int
    r: int
    n: int

    def to_document(self) -> dict[str, Any]:
        return {
            "cycle": list(self.cycle),
            "vertex": self.vertex,
            "weights": {"m": self.m, "p": self.p, "q": self.q, "r": self.r, "n": self.n},
        }


@dataclass(frozen=True)
class Violation:
    """One failed clause, where it failed and the weights involved."""

    condition: Condition
    location: tuple[str, ...]
    weights: dict[str, int] = field(default_factory=dict)
    reason: str | None = None

    def to_document(self) -> dict[str, Any]:
        _document: dict[str, Any] = {
            "condition": self.condition.value,
            "location": list(self.location),
            "weights": dict(sorted(self.weights.items())),
        }
        if self.reason is not None:
            _document["reason"] = self.reason
        return _document


@dataclass
class ConditionReport:
    """Violations of (a), (b), (c) plus the balanced witnesses per cycle."""

    a: list[Violation] = field(default_factory=list)
    b: list[Violation] = field(default_factory=list)
    c: list[Violation] = field(default_factory=list)
    candidates: dict[Cycle, list[BalancedVertexWitness]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not (self.a or self.b or self.c)

    @property
    def violations(self) -> list[Violation]:
        return self.a + self.b + self.c

    @property
    def selected(self) -> dict[Cycle, BalancedVertexWitness]:
        """The admissible witness per cycle whose oriented cycle comes first in document order."""
        return {cycle: found[0] for cycle, found in self.candidates.items() if found}

    def to_document(self) -> dict[str, Any]:
        return {
            clause: {
                "pass": not violations,
                "violations": [v.to_document() for v in violations],
            }
            for clause, violations in (("a", self.a), ("b", self.b), ("c", self.c))
        }


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[str, ...]
    verdict: Verdict
    pc: PCWitness | NotPC | None
    report: ConditionReport | None


@dataclass
class CMCertificate:
    """Verdict with the PC witness, balanced witnesses and violations."""

    verdict: Verdict
    girth: int | float
    pc_witness: PCWitness | None = None
    not_pc: NotPC | None = None
    balanced: dict[Cycle, BalancedVertexWitness] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    components: list[ComponentResult] = field(default_factory=list)
    isolated_vertices: tuple[str, ...] = ()

    @property
    def componentwise(self) -> bool:
        return len(self.components) > 1

    @property
    def is_cohen_macaulay(self) -> bool:
        return self.verdict is Verdict.COHEN_MACAULAY

    def to_document(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "girth": None if self.girth == math.inf else self.girth,
            "componentwise": self.componentwise,
            "components": len(self.components),
            "isolated_vertices": list(self.isolated_vertices),
            "pc_witness": None if self.pc_witness is None else self.pc_witness.to_document(),
            "not_pc": None if self.not_pc is None else self.not_pc.to_document(),
            "balanced": [w.to_document() for w in self.balanced.values()],
            "violations": [v.to_document() for v in self.violations],
        }


def _label(u: str, v: str) -> str:
    return f"{u}-{v}"


def cycle_weight_profile(g: WeightedGraph, cycle: Sequence[str]) -> tuple[int, int, int, int, int]:
    """(m, p, q, r, n) read from cycle[0] along the given orientation."""
    x, y, z, u, v = cycle
    return (g.weight(x, y), g.weight(y, z), g.weight(z, u), g.weight(u, v), g.weight(v, x))


def _is_balanced(m: int, p: int, q: int, r: int, n: int) -> bool:
    return m == n and m <= p >= q <= r >= n


def balanced_vertices(g: WeightedGraph, cycle: Sequence[str]) -> list[BalancedVertexWitness]:
    """Every balanced vertex of an induced 5-cycle, in document order."""
    _cycle = tuple(cycle)
    if not is_induced_five_cycle(g, _cycle):
        raise NotAFiveCycleError(f"{list(_cycle)} is not an induced 5-cycle")

    found = []
    for start in range(5):
        forward = _cycle[start:] + _cycle[:start]
        backward = (forward[0],) + forward[:0:-1]
        for oriented in (forward, backward):
            profile = cycle_weight_profile(g, oriented)
            if _is_balanced(*profile):
                found.append(BalancedVertexWitness(oriented, oriented[0], *profile))
                break
    return sorted(found, key=lambda w: g.index(w.vertex))


def _validate_witness(g: WeightedGraph, pc: PCWitness) -> None:
    pendant, cyclic = set(pc.pendant_vertices), set(pc.cycle_vertices)
    if pendant & cyclic or pendant | cyclic != set(g.vertices):
        raise PCWitnessError("Witness does not partition the vertex set")
    for u, v in pc.pendant_matching:
        if u not in g or v not in g or not g.has_edge(u, v):
            raise PCWitnessError(f"{u}-{v} is not an edge")
        if min(g.degree(u), g.degree(v)) != 1:
            raise PCWitnessError(f"{u}-{v} is not a pendant edge")
    for cycle in pc.basic_cycles:
        if not is_basic(g, cycle):
            raise PCWitnessError(f"{list(cycle)} is not a basic 5-cycle")
    if sum(len(c) for c in pc.basic_cycles) != len({v for c in pc.basic_cycles for v in c}):
        raise PCWitnessError("Basic 5-cycles of the witness share vertices")


def _condition_a(g: WeightedGraph, pc: PCWitness) -> list[Violation]:
    violations = []
    for s, t in pc.pendant_matching:
        heavy = g.weight(s, t)
        for end, other in ((s, t), (t, s)):
            for w in g.neighbors(end):
                if w != other and g.weight(end, w) > heavy:
                    violations.append(
                        Violation(
                            Condition.A,
                            (s, t, end, w),
                            {_label(s, t): heavy, _label(end, w): g.weight(end, w)},
                        )
                    )
    return violations


def _condition_b(
    g: WeightedGraph, pc: PCWitness
) -> tuple[list[Violation], dict[Cycle, list[BalancedVertexWitness]]]:
    violations = []
    candidates: dict[Cycle, list[BalancedVertexWitness]] = {}
    for cycle in pc.basic_cycles:
        admissible = sorted(
            (
                w
                for w in balanced_vertices(g, cycle)
                if g.degree(w.cycle[1]) == 2 and g.degree(w.cycle[4]) == 2
            ),
            key=lambda w: tuple(g.index(v) for v in w.cycle),
        )
        candidates[cycle] = admissible
        if not admissible:
            violations.append(
                Violation(
                    Condition.B,
                    cycle,
                    {_label(cycle[i], cycle[(i + 1) % 5]): g.weight(cycle[i], cycle[(i + 1) % 5]) for i in range(5)},
                )
            )
    return violations, candidates


def _condition_c(g: WeightedGraph, pc: PCWitness) -> list[Violation]:
    violations = []
    for cycle in pc.basic_cycles:
        for i, x in enumerate(cycle):
            if g.degree(x) < 3:
                continue
            y, v = cycle[(i + 1) % 5], cycle[(i - 1) % 5]
            floor = min(g.weight(x, y), g.weight(x, v))
            for w in g.neighbors(x):
                if w not in (y, v) and g.weight(x, w) > floor:
                    violations.append(
                        Violation(
                            Condition.C,
                            (x, w),
                            {
                                _label(x, y): g.weight(x, y),
                                _label(x, v): g.weight(x, v),
                                _label(x, w): g.weight(x, w),
                            },
                        )
                    )
    return violations


def check_weight_conditions(g: WeightedGraph, pc: PCWitness) -> ConditionReport:
    """Evaluate (a), (b), (c) against a PC witness of ``g``."""
    _validate_witness(g, pc)
    b, candidates = _condition_b(g, pc)
    return ConditionReport(a=_condition_a(g, pc), b=b, c=_condition_c(g, pc), candidates=candidates)


def _merge(g: WeightedGraph, parts: list[PCWitness]) -> PCWitness:
    pendant = [v for part in parts for v in part.pendant_vertices]
    cyclic = [v for part in parts for v in part.cycle_vertices]
    matching: list[Edge] = sorted(e for part in parts for e in part.pendant_matching)
    cycles = [c for part in parts for c in part.basic_cycles]
    return PCWitness(
        pendant_vertices=tuple(g.order(pendant)),
        cycle_vertices=tuple(g.order(cyclic)),
        pendant_matching=tuple(matching),
        basic_cycles=tuple(sorted(cycles, key=lambda c: g.index(c[0]))),
    )


def _classify_component(part: WeightedGraph) -> ComponentResult:
    if len(part) == 1:
        return ComponentResult(part.vertices, Verdict.COHEN_MACAULAY, None, None)
    pc = classify_pc(part)
    if isinstance(pc, NotPC):
        return ComponentResult(part.vertices, Verdict.NOT_COHEN_MACAULAY, pc, None)
    report = check_weight_conditions(part, pc)
    verdict = Verdict.COHEN_MACAULAY if report.passed else Verdict.NOT_COHEN_MACAULAY
    return ComponentResult(part.vertices, verdict, pc, report)


def classify_cm(g: WeightedGraph) -> CMCertificate:
    """Decide Cohen-Macaulayness of G_w for girth >= 5, componentwise."""
    value = girth(g)
    if value < MIN_GIRTH:
        _LOGGER.debug("Girth %s is below %d, out of scope", value, MIN_GIRTH)
        return CMCertificate(verdict=Verdict.OUT_OF_SCOPE, girth=value)

    results = [_classify_component(part) for part in components(g)]
    certificate = CMCertificate(
        verdict=Verdict.COHEN_MACAULAY,
        girth=value,
        components=results,
        isolated_vertices=tuple(r.vertices[0] for r in results if len(r.vertices) == 1),
    )

    witnesses: list[PCWitness] = []
    for result in results:
        if result.verdict is not Verdict.COHEN_MACAULAY:
            certificate.verdict = Verdict.NOT_COHEN_MACAULAY
        if isinstance(result.pc, NotPC):
            if certificate.not_pc is None:
                certificate.not_pc = result.pc
            certificate.violations.append(
                Violation(Condition.PC, result.pc.vertices, reason=result.pc.reason.value)
            )
        elif isinstance(result.pc, PCWitness):
            witnesses.append(result.pc)
        if result.report is not None:
            certificate.violations.extend(result.report.violations)
            certificate.balanced.update(result.report.selected)

    if certificate.not_pc is None:
        certificate.pc_witness = _merge(g, witnesses)
    return certificate
