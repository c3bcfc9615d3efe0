"""Stanley-Reisner complexes, homology and the Reisner oracle."""
from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from pyweightedcm.constants import GeneratorKind
from pyweightedcm.covers import is_unmixed
from pyweightedcm.exceptions import (
    BudgetExceededError,
    NotSquarefreeError,
    UnknownVertexError,
    WeightedCMError,
)
from pyweightedcm.generator import generate
from pyweightedcm.graph import trivially_weighted
from pyweightedcm.ideals import Monomial, MonomialIdeal, edge_ideal
from pyweightedcm.oracle import (
    HomologyGroup,
    SimplicialComplex,
    field_betti_numbers,
    is_cm_ideal,
    is_cm_oracle,
    minimal_transversals,
    oracle_report,
    reduced_homology_ranks,
    reisner_is_cm,
    stanley_reisner_complex,
)
from pyweightedcm.structure import is_cm_graph

from .conftest import five_cycle

PROJECTIVE_PLANE = [
    "123", "134", "145", "156", "126", "235", "245", "246", "346", "356",
]
SIX = tuple("abcdef")


def rp2():
    return SimplicialComplex("123456", PROJECTIVE_PLANE)


@st.composite
def complexes(draw):
    facets = draw(
        st.lists(st.frozensets(st.sampled_from(SIX), min_size=1), min_size=1, max_size=6)
    )
    return SimplicialComplex(SIX, facets)


def ranks(groups):
    return {g.dimension: g.rank for g in groups}


def test_minimal_transversals():
    found = minimal_transversals([frozenset("ab"), frozenset("bc")])
    assert sorted(sorted(t) for t in found) == [["a", "c"], ["b"]]
    assert minimal_transversals([]) == [frozenset()]


def test_complex_keeps_maximal_facets():
    k = SimplicialComplex("abc", ["ab", "a", "bc"])
    assert k.facets == (frozenset("ab"), frozenset("bc"))
    assert k.dimension == 1
    assert k.minimal_nonfaces == (frozenset("ac"),)
    assert k.f_vector() == [1, 3, 2]
    with pytest.raises(UnknownVertexError):
        SimplicialComplex("ab", ["abc"])


def test_empty_complex():
    k = SimplicialComplex("ab")
    assert k.facets == (frozenset(),)
    assert k.dimension == -1
    assert ranks(reduced_homology_ranks(k)) == {-1: 1}


def test_ghost_vertex_is_a_nonface():
    k = SimplicialComplex("abc", ["ab"])
    assert frozenset("c") in k.minimal_nonfaces


def test_from_nonfaces_and_links():
    k = SimplicialComplex.from_nonfaces("xyz", ["xy", "yz"])
    assert set(k.facets) == {frozenset("xz"), frozenset("y")}
    assert k.link("x") == SimplicialComplex("z", ["z"])
    with pytest.raises(WeightedCMError):
        k.link("xy")
    with pytest.raises(WeightedCMError):
        SimplicialComplex.from_nonfaces("xy", [""])


def test_stanley_reisner_complex():
    k = stanley_reisner_complex(MonomialIdeal.parse("x*y", "y*z"))
    assert k.vertices == ("x", "y", "z")
    assert k.facets == (frozenset("xz"), frozenset("y"))
    wide = stanley_reisner_complex(MonomialIdeal.parse("x*y"), ambient=["x", "y", "w"])
    assert set(wide.facets) == {frozenset("xw"), frozenset("yw")}
    with pytest.raises(NotSquarefreeError):
        stanley_reisner_complex(MonomialIdeal.parse("x^2"))
    with pytest.raises(UnknownVertexError):
        stanley_reisner_complex(MonomialIdeal.parse("x*y"), ambient=["x"])
    with pytest.raises(WeightedCMError):
        stanley_reisner_complex(MonomialIdeal.parse("1"))


def test_homology_of_small_complexes():
    boundary = SimplicialComplex("abc", ["ab", "bc", "ac"])
    assert ranks(reduced_homology_ranks(boundary)) == {-1: 0, 0: 0, 1: 1}
    assert boundary.reduced_euler_characteristic() == -1
    simplex = SimplicialComplex("abc", ["abc"])
    assert all(g.rank == 0 and not g.torsion for g in reduced_homology_ranks(simplex))
    two_points = SimplicialComplex("ab", ["a", "b"])
    assert ranks(reduced_homology_ranks(two_points)) == {-1: 0, 0: 1}


def test_independence_complex_of_pentagon(c5_trivial):
    k = stanley_reisner_complex(edge_ideal(c5_trivial), ambient=c5_trivial.vertices)
    assert ranks(reduced_homology_ranks(k)) == {-1: 0, 0: 0, 1: 1}
    assert reisner_is_cm(k)


def test_projective_plane_torsion():
    groups = reduced_homology_ranks(rp2())
    assert groups[2] == HomologyGroup(1, 0, (2,))
    assert all(g.rank == 0 for g in groups)
    assert field_betti_numbers(groups, 2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert field_betti_numbers(groups, 3) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reisner_is_cm(rp2())
    assert not reisner_is_cm(rp2(), characteristic=2)
    assert reisner_is_cm(rp2(), characteristic=3)


@pytest.mark.parametrize("characteristic", [1, 4, -3])
def test_characteristic_must_be_prime(k2, characteristic):
    with pytest.raises(WeightedCMError):
        is_cm_oracle(k2, characteristic)


def test_face_budget(c5):
    with pytest.raises(BudgetExceededError):
        is_cm_oracle(c5, budget=1)
    with pytest.raises(BudgetExceededError):
        rp2().faces(budget=10)


@pytest.mark.parametrize(
    "fixture, expected",
    [
        ("p3", False),
        ("k2", True),
        ("c5", True),
        ("p4", False),
        ("c5_trivial", True),
        ("shared_path_pentagons", False),
        ("shared_vertex_pentagons", False),
    ],
)
def test_graph_oracle(request, fixture, expected):
    assert is_cm_oracle(request.getfixturevalue(fixture)) is expected


def test_cycle_without_balanced_vertex():
    assert not is_cm_oracle(five_cycle((2, 1, 1, 1, 2)))


def test_oracle_report(c5):
    report = oracle_report(c5)
    assert report.cohen_macaulay
    assert report.polarized_variables == 9
    assert report.links_checked >= 1
    assert not report.torsion_warning
    assert report.to_document()["characteristic"] == 0


def test_cm_ideals():
    assert is_cm_ideal(MonomialIdeal.parse("x^2"))
    assert is_cm_ideal(MonomialIdeal())
    assert not is_cm_ideal(MonomialIdeal.parse("x*y", "y*z"))
    assert is_cm_ideal(MonomialIdeal.parse("x*y", "y*z"), ambient=["x", "y", "z"], characteristic=5) is False
    assert is_cm_ideal(MonomialIdeal.parse("x^2", "x*y"), ambient=["x", "y"]) is False
    with pytest.raises(WeightedCMError):
        is_cm_ideal(MonomialIdeal.parse("1"))


@pytest.mark.property_based
@settings(max_examples=50, deadline=None)
@given(complexes())
def test_euler_characteristic_matches_homology(k):
    groups = reduced_homology_ranks(k)
    assert k.reduced_euler_characteristic() == sum((-1) ** g.dimension * g.rank for g in groups)


@pytest.mark.property_based
@settings(max_examples=50, deadline=None)
@given(complexes())
def test_cones_are_acyclic(k):
    cone = k.cone("apex")
    assert all(g.rank == 0 and not g.torsion for g in reduced_homology_ranks(cone))
    assert cone.reduced_euler_characteristic() == 0
    assert reisner_is_cm(cone) == reisner_is_cm(k)


@pytest.mark.property_based
@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_trivial_weights_match_class_pc(seed, n):
    g = trivially_weighted(generate(GeneratorKind.ANY_GIRTH5, n, seed))
    assert is_cm_oracle(g) == is_cm_graph(g)


@pytest.mark.property_based
@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 7))
def test_cohen_macaulay_implies_unmixed(seed, n):
    g = generate(GeneratorKind.ANY_GIRTH5, n, seed, max_weight=3)
    if is_cm_oracle(g):
        assert is_unmixed(g).unmixed


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.dictionaries(st.sampled_from(("x", "y", "z")), st.integers(0, 2), max_size=3).map(Monomial),
        min_size=1,
        max_size=4,
    ).map(MonomialIdeal),
    st.dictionaries(st.sampled_from(("x", "y", "z")), st.integers(0, 2), max_size=3).map(Monomial),
)
def test_colon_keeps_cohen_macaulay(ideal, f):
    ring = ("x", "y", "z")
    if ideal.contains(f) or not is_cm_ideal(ideal, ambient=ring):
        return
    assert is_cm_ideal(ideal.colon(f), ambient=ring)
