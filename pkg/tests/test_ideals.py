"""Monomial ideal arithmetic and polarization."""
from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from pyweightedcm.constants import Force, GeneratorKind
from pyweightedcm.exceptions import UnknownVertexError, WeightedCMError
from pyweightedcm.generator import generate
from pyweightedcm.graph import delete
from pyweightedcm.ideals import (
    Monomial,
    MonomialIdeal,
    add,
    add_ideals,
    colon,
    edge_ideal,
    equals,
    intersect,
    minimalize,
    polarize,
    power,
    product_generators,
    radical,
    reduction_identities,
    weighted_edge_ideal,
)
from pyweightedcm.structure import is_shedding_vertex, is_well_covered
from pyweightedcm.weights import classify_cm

VARIABLES = ("x", "y", "z", "u")

monomials = st.dictionaries(st.sampled_from(VARIABLES), st.integers(0, 3), max_size=4).map(Monomial)
ideals = st.lists(monomials, min_size=1, max_size=5).map(MonomialIdeal)


def test_parse_and_print():
    m = Monomial.parse("x^2*y^2")
    assert m.exponents == {"x": 2, "y": 2}
    assert repr(m) == "x^2*y^2"
    assert m.degree == 4
    assert Monomial.parse("1") == Monomial()
    assert Monomial.parse("x*x") == power("x", 2)
    assert repr(Monomial()) == "1"


@pytest.mark.parametrize("text", ["x^a", "x^", "x y"])
def test_bad_monomial(text):
    with pytest.raises(WeightedCMError):
        Monomial.parse(text)


def test_bad_exponent():
    with pytest.raises(WeightedCMError):
        Monomial({"x": -1})


def test_monomial_operations():
    f, g = Monomial.parse("x^2*y"), Monomial.parse("x*y^3*z")
    assert Monomial.parse("x*y").divides(f)
    assert not f.divides(g)
    assert f.lcm(g) == Monomial.parse("x^2*y^3*z")
    assert f.gcd(g) == Monomial.parse("x*y")
    assert f.without(g) == Monomial.parse("x")
    assert g.radical() == Monomial.parse("x*y*z")
    assert not f.is_squarefree
    assert f.as_tuple(("x", "y", "z")) == (2, 1, 0)
    assert Monomial.from_tuple(("x", "y", "z"), (2, 1, 0)) == f


def test_minimal_generators():
    ideal = MonomialIdeal.parse("x^3*y^2", "z", "x^2*y", "x^2*y")
    assert ideal.generators == (Monomial.parse("z"), Monomial.parse("x^2*y"))
    assert minimalize([Monomial.parse("x"), Monomial.parse("x*y")]) == (Monomial.parse("x"),)
    assert ideal.contains(Monomial.parse("x^5*y"))
    assert not ideal.contains(Monomial.parse("x*y^4"))


def test_colon_sum_and_intersection():
    ideal = MonomialIdeal.parse("x^2*y^2", "y*z")
    assert ideal.colon(Monomial.parse("y")) == MonomialIdeal.parse("x^2*y", "z")
    assert ideal.add(Monomial.parse("y")) == MonomialIdeal.parse("y")
    assert ideal + MonomialIdeal.parse("z") == MonomialIdeal.parse("x^2*y^2", "z")
    left = intersect(
        MonomialIdeal.parse("y"), MonomialIdeal.parse("x^2", "z"), MonomialIdeal.parse("y^2", "z")
    )
    assert left == ideal
    with pytest.raises(WeightedCMError):
        intersect()


def test_height_and_dimension():
    ideal = MonomialIdeal.parse("x*y", "y*z")
    assert ideal.height() == 1
    assert ideal.dimension(["x", "y", "z"]) == 2
    assert MonomialIdeal.parse("x^2", "y^3").height() == 2
    assert MonomialIdeal().height() == 0
    with pytest.raises(UnknownVertexError):
        ideal.dimension(["x", "y"])
    with pytest.raises(WeightedCMError):
        MonomialIdeal.parse("1").height()


def test_edge_ideals(p3, c5):
    assert weighted_edge_ideal(p3) == MonomialIdeal.parse("x^2*y^2", "y*z")
    assert edge_ideal(p3) == MonomialIdeal.parse("x*y", "y*z")
    assert weighted_edge_ideal(p3).to_document() == [{"y": 1, "z": 1}, {"x": 2, "y": 2}]
    assert len(weighted_edge_ideal(c5)) == 5


def test_polarize():
    found = polarize(MonomialIdeal.parse("x^2*y^2", "y*z"))
    assert found.ideal == MonomialIdeal.parse("x_1*x_2*y_1*y_2", "y_1*z_1")
    assert found.expansion == {"x": ("x_1", "x_2"), "y": ("y_1", "y_2"), "z": ("z_1",)}
    assert found.ambient == ("x_1", "x_2", "y_1", "y_2", "z_1")
    assert found.ideal.is_squarefree


def test_polarize_avoids_label_collisions():
    found = polarize(MonomialIdeal.parse("x^2", "x_1*y"))
    assert found.expansion["x"] == ("x__1", "x__2")
    assert found.expansion["x_1"] == ("x_1__1",)
    assert len(set(found.ambient)) == len(found.ambient)


def test_polarize_keeps_unused_ring_variables_out():
    found = polarize(MonomialIdeal.parse("x*y"), ambient=["x", "y", "w"])
    assert found.expansion["w"] == ()
    assert found.ambient == ("x_1", "y_1")


def test_identities_on_cycle(c5):
    identities = reduction_identities(c5, "x", "y", "v")
    assert [i.name for i in identities] == ["colon", "sum", "leaf-colon", "leaf-colon-prime"]
    assert all(i.holds for i in identities)
    assert identities[0].left == MonomialIdeal.parse("y", "v", "z*u")
    assert identities[0].to_document()["holds"] is True


@pytest.mark.property_based
@settings(max_examples=80, deadline=None)
@given(ideals, monomials, monomials)
def test_colon_composes(ideal, f, g):
    assert ideal.colon(f).colon(g) == ideal.colon(f * g)


@pytest.mark.property_based
@settings(max_examples=80, deadline=None)
@given(ideals, ideals)
def test_intersection_and_radical(left, right):
    both = left.intersect(right)
    for g in both.generators:
        assert left.contains(g) and right.contains(g)
    assert radical(radical(left)) == radical(left)
    for g in left.generators:
        assert not any(h != g and h.divides(g) for h in left.generators)


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12))
def test_radical_of_weighted_edge_ideal(seed, n):
    g = generate(GeneratorKind.ANY_GIRTH5, n, seed)
    assert radical(weighted_edge_ideal(g)) == edge_ideal(g)


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([5, 7, 10, 12, 14]))
def test_identities_at_balanced_vertices(seed, n):
    g = generate(GeneratorKind.CLASS_PC, n, seed, force=Force.SATISFY)
    for witness in classify_cm(g).balanced.values():
        x, y, v = witness.cycle[0], witness.cycle[1], witness.cycle[4]
        for identity in reduction_identities(g, x, y, v):
            assert identity.holds, identity.name


def test_module_level_operations():
    ideal = MonomialIdeal.parse("x^2*y^2", "y*z")
    y = Monomial.parse("y")
    assert colon(ideal, y) == ideal.colon(y)
    assert add(ideal, y) == MonomialIdeal.parse("y")
    assert equals(add_ideals(ideal, MonomialIdeal.parse("z")), MonomialIdeal.parse("z", "x^2*y^2"))
    assert product_generators(MonomialIdeal.parse("x", "y"), MonomialIdeal.parse("x", "z")) == (
        MonomialIdeal.parse("x^2", "x*y", "x*z", "y*z")
    )


def test_shedding_vertex_keeps_dimension(c5_trivial):
    ring = c5_trivial.vertices
    ideal = edge_ideal(c5_trivial)
    x = Monomial.parse("x")
    deleted = edge_ideal(delete(c5_trivial, "x")).add(x)
    assert ideal.dimension(ring) == deleted.dimension(ring) == ideal.colon(x).dimension(ring) == 2


@pytest.mark.property_based
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 10))
def test_shedding_vertices_keep_dimension(seed, n):
    g = generate(GeneratorKind.ANY_GIRTH5, n, seed, max_weight=1)
    if not is_well_covered(g).well_covered:
        return
    ideal = edge_ideal(g)
    expected = ideal.dimension(g.vertices)
    for v in g.vertices:
        if is_shedding_vertex(g, v):
            deleted = edge_ideal(delete(g, v)).add(power(v, 1))
            assert deleted.dimension(g.vertices) == expected
            assert ideal.colon(power(v, 1)).dimension(g.vertices) == expected
