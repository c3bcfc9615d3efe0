"""Seeded instance generation."""
import itertools
import random

import pytest

from pyweightedcm.constants import Condition, Force, GeneratorKind, MIN_GIRTH, NotPCReason, Verdict
from pyweightedcm.exceptions import GeneratorError, WeightedCMError
from pyweightedcm.generator import (
    class_pc_sizes,
    generate,
    random_class_pc,
    random_class_pc_structure,
    random_girth5,
    random_instance,
    random_shared_pentagons,
)
from pyweightedcm.graph import is_trivially_weighted
from pyweightedcm.oracle import is_cm_oracle
from pyweightedcm.structure import NotPC, PCWitness, classify_pc, girth, induced_five_cycles
from pyweightedcm.weights import classify_cm


def test_class_pc_sizes():
    assert class_pc_sizes(8) == [2, 4, 5, 6, 7, 8]


@pytest.mark.parametrize("n", [2, 4, 5, 7, 10, 13])
def test_structure_is_class_pc(n):
    g, witness = random_class_pc_structure(n, random.Random(n))
    assert len(g) == n
    assert girth(g) >= MIN_GIRTH
    assert is_trivially_weighted(g)
    found = classify_pc(g)
    assert isinstance(found, PCWitness)
    assert set(found.basic_cycles) == set(witness.basic_cycles)


@pytest.mark.parametrize("n", [0, 1, 3])
def test_impossible_sizes(n):
    with pytest.raises(GeneratorError):
        random_class_pc_structure(n, random.Random(0))


@pytest.mark.parametrize("seed", range(10))
def test_satisfy(seed):
    g = generate(GeneratorKind.CLASS_PC, 12, seed, force=Force.SATISFY)
    assert classify_cm(g).verdict is Verdict.COHEN_MACAULAY
    assert max(g.weights.values()) <= 4


@pytest.mark.parametrize(
    "force, condition",
    [
        (Force.VIOLATE_A, Condition.A),
        (Force.VIOLATE_B, Condition.B),
        (Force.VIOLATE_C, Condition.C),
    ],
)
def test_violations(force, condition):
    for seed in range(4):
        g = generate(GeneratorKind.CLASS_PC, 12, seed, max_weight=3, force=force)
        certificate = classify_cm(g)
        assert certificate.verdict is Verdict.NOT_COHEN_MACAULAY
        assert {v.condition for v in certificate.violations} == {condition}
        assert max(g.weights.values()) <= 3


def test_violation_needs_room_for_weights():
    with pytest.raises(GeneratorError):
        random_class_pc(7, random.Random(0), max_weight=1, force=Force.VIOLATE_A)


def test_violate_b_needs_a_cycle():
    with pytest.raises(GeneratorError):
        random_class_pc(4, random.Random(0), force=Force.VIOLATE_B)


def test_random_weights_stay_in_range():
    g = random_class_pc(10, random.Random(3), max_weight=2)
    assert set(g.weights.values()) <= {1, 2}
    assert isinstance(classify_pc(g), PCWitness)


@pytest.mark.parametrize("n", [1, 6, 11])
def test_girth5(n):
    g = random_girth5(n, random.Random(n))
    assert len(g) == n
    assert girth(g) >= MIN_GIRTH
    with pytest.raises(GeneratorError):
        random_girth5(0, random.Random(0))


def test_deterministic():
    for kind in GeneratorKind:
        assert generate(kind, 10, 42) == generate(kind, 10, 42)
    assert generate(GeneratorKind.CLASS_PC, 10, 42, force=Force.SATISFY) == generate(
        "class-pc", 10, 42, force="satisfy"
    )


def test_forcing_girth5_is_rejected():
    with pytest.raises(WeightedCMError):
        generate(GeneratorKind.ANY_GIRTH5, 6, 0, force=Force.SATISFY)


def test_random_instances():
    rng = random.Random(11)
    for _ in range(30):
        g = random_instance(rng, 9, 3)
        assert 1 <= len(g) <= 9
        assert girth(g) >= MIN_GIRTH
        assert max(g.weights.values(), default=1) <= 3


@pytest.mark.parametrize("n", [7, 8, 11, 14])
def test_shared_pentagons(n):
    g = random_shared_pentagons(n, random.Random(n))
    assert len(g) == n
    assert girth(g) >= MIN_GIRTH
    cycles = [set(c) for c in induced_five_cycles(g)]
    assert any(a & b for a, b in itertools.combinations(cycles, 2))
    with pytest.raises(GeneratorError):
        random_shared_pentagons(6, random.Random(0))


@pytest.mark.parametrize("seed", range(6))
def test_shared_pentagons_classification_matches_oracle(seed):
    g = generate(GeneratorKind.SHARED_PENTAGONS, 7 + seed % 2, seed, max_weight=2)
    assert classify_cm(g).is_cohen_macaulay == is_cm_oracle(g)


def test_random_instances_include_shared_pentagons():
    rng = random.Random(5)
    found = [random_instance(rng, 7, 2) for _ in range(60)]
    assert any(
        isinstance(classify_pc(g), NotPC) and classify_pc(g).reason is NotPCReason.OVERLAPPING_CYCLES
        for g in found
    )
