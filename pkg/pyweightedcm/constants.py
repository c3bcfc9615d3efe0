"""Weighted CM constants."""
from __future__ import annotations

from enum import Enum
import logging
import os

_LOGGER = logging.getLogger(__name__)

DEFAULT_MIS_BOUND = 20  # Exhaustive independent set enumeration.
DEFAULT_VD_BOUND = 14  # Vertex decomposability recursion.
DEFAULT_SEARCH_BUDGET = 10**8  # Raw weighted cover candidates.
DEFAULT_FACE_BUDGET = 2 * 10**6  # Faces enumerated by the homology oracle.
MAX_WEIGHT = 10**6
MIN_GIRTH = 5
BUDGET_ENV = "CMW_BUDGET"
GENERATOR_RETRIES = 200


class Verdict(Enum):
    """Outcome of the combinatorial classification."""

    COHEN_MACAULAY = "cohen-macaulay"
    NOT_COHEN_MACAULAY = "not-cohen-macaulay"
    OUT_OF_SCOPE = "out-of-scope"


class Condition(Enum):
    """Clauses of the weight characterization."""

    PC = "pc"
    A = "a"
    B = "b"
    C = "c"


class NotPCReason(Enum):
    """First violated clause of the class PC definition."""

    OVERLAP = "overlap"
    UNCOVERED = "uncovered"
    MATCHING = "matching"
    OVERLAPPING_CYCLES = "overlapping-cycles"


class DeleteMode(Enum):
    """Vertex deletion flavours, G minus v and G minus N[v]."""

    VERTEX = "vertex"
    CLOSED_NEIGHBORHOOD = "closed-neighborhood"


class CrossValidationMode(Enum):
    """Which equivalence the crossvalidate command exercises."""

    THEOREM_VS_UNMIXED = "theorem-vs-unmixed"
    THEOREM_VS_ORACLE = "theorem-vs-oracle"


class GeneratorKind(Enum):
    """Random instance families."""

    CLASS_PC = "class-pc"
    ANY_GIRTH5 = "any-girth5"
    SHARED_PENTAGONS = "shared-pentagons"


class Force(Enum):
    """Weight shaping applied to generated class PC graphs."""

    RANDOM = "random"
    SATISFY = "satisfy"
    VIOLATE_A = "violate-a"
    VIOLATE_B = "violate-b"
    VIOLATE_C = "violate-c"


def resolve_budget(default: int, override: int | None = None) -> int:
    """Return the explicit budget, else CMW_BUDGET, else the default."""

    if override is not None:
        return override

    _raw = os.environ.get(BUDGET_ENV)
    if _raw:
        try:
            _value = int(_raw)
        except ValueError:
            _LOGGER.warning("Ignoring non-integer %s=%s", BUDGET_ENV, _raw)
            return default
        if _value > 0:
            return _value
        _LOGGER.warning("Ignoring non-positive %s=%s", BUDGET_ENV, _raw)

    return default
