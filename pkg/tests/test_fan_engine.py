import pytest

from gfankit.cones import Cone
from gfankit.errors import (
    DegreeError,
    DomainError,
    RegionError,
)
from gfankit.fan_engine import (
    affine_fan_from_homogenization,
    cone_of_basis,
    dehomogenized_ideal,
    format_bases,
    groebner_cone,
    groebner_fan,
    state_polytope,
    union_of_chart_fans,
    verify_normal_fan_equals_projection,
)
from gfankit.groebner import Ideal, reduced_groebner_basis
from gfankit.ordering import grevlex, lex
from gfankit.poly import PolyRing, parse_polynomial

from golden import GOLD_BASES, GOLD_HALFSPACES, basis_term_set, term_set


def p(ring, s):
    return parse_polynomial(ring, s)


def test_cone_of_basis(ring3, example1_ideal):
    gb = reduced_groebner_basis(example1_ideal, lex().with_weights([(8, 5, 4)]))
    cone = cone_of_basis(gb)
    assert cone == Cone.from_halfspaces(3, GOLD_HALFSPACES[0])
    assert cone.lineality == ((1, 1, 1),)
    assert cone.contains((8, 5, 4))


def test_groebner_cone_interior(ring3, example1_ideal):
    gc = groebner_cone(example1_ideal, (8, 5, 4))
    assert gc.cone == Cone.from_halfspaces(3, GOLD_HALFSPACES[0])
    assert basis_term_set(gc.basis) == term_set(ring3, GOLD_BASES[0])
    gc3 = groebner_cone(example1_ideal, (2, 5, 1))
    assert gc3.cone == Cone.from_halfspaces(3, GOLD_HALFSPACES[2])
    assert basis_term_set(gc3.basis) == term_set(ring3, GOLD_BASES[2])
    assert gc3.initial_exponents == gc3.basis.leading_exponents()


def test_groebner_cone_zero_weight(example1_ideal):
    gc = groebner_cone(example1_ideal, (0, 0, 0))
    assert gc.cone.contains((0, 0, 0))


def test_groebner_cone_region_error(ring3):
    inhom = Ideal(ring3, (p(ring3, "x^2 - y"),))
    with pytest.raises(RegionError):
        groebner_cone(inhom, (-1, 1, 1))


def test_principal_monomial_ideal():
    ring = PolyRing(("x", "y"))
    gf = groebner_fan(Ideal(ring, (p(ring, "x"),)))
    assert gf.homogeneous
    assert len(gf.cones) == 1
    cone = gf.cones[0].cone
    assert cone.dim == 2 and cone.lineality_dim == 2
    assert gf.fan.is_complete()


def test_binomial_two_cones():
    ring = PolyRing(("x", "y"))
    gf = groebner_fan(Ideal(ring, (p(ring, "x - y"),)))
    assert len(gf.cones) == 2
    assert gf.fan.is_complete()
    assert gf.fan.f_vector() == (1, 2)
    assert gf.fan.lineality == ((1, 1),)
    sets = [basis_term_set(gc.basis) for gc in gf.cones]
    assert term_set(ring, ["x - y"]) in sets


def test_affine_single_variable():
    ring = PolyRing(("u",))
    gf = groebner_fan(Ideal(ring, (p(ring, "u - 1"),)))
    assert not gf.homogeneous
    assert len(gf.cones) == 1
    assert gf.cones[0].cone.rays == ((1,),)
    assert basis_term_set(gf.cones[0].basis) == term_set(ring, ["u - 1"])


def test_affine_parabola_two_cones():
    ring = PolyRing(("x", "y"))
    ideal = Ideal(ring, (p(ring, "x^2 - y"),))
    gf = groebner_fan(ideal)
    assert not gf.homogeneous
    assert len(gf.cones) == 2
    # the marked regions are the two halfplanes on either side of 2a = b
    for gc in gf.cones:
        assert gc.cone.lineality == ((1, 2),)
    rays = {r for gc in gf.cones for r in gc.cone.rays}
    assert rays == {(0, 1), (0, -1)}
    # together they tile the quadrant (and the whole plane)
    for w in [(1, 1), (1, 3), (5, 0), (0, 5)]:
        assert any(gc.cone.contains(w) for gc in gf.cones)
    sigs = {gc.basis.signature() for gc in gf.cones}
    assert sigs == {((2, 0),), ((0, 1),)}


def test_affine_hom_position_is_immaterial():
    ring = PolyRing(("x", "y"))
    ideal = Ideal(ring, (p(ring, "x^2 - y"),))
    first = affine_fan_from_homogenization(ideal, hom_index=0)
    last = affine_fan_from_homogenization(ideal, hom_index=None)
    assert first.fan == last.fan
    assert [gc.basis.elements for gc in first.cones] == [gc.basis.elements for gc in last.cones]


def test_dehomogenized_ideal(example2_ideal):
    affine = dehomogenized_ideal(example2_ideal, 3)
    assert affine.ring.names == ("x", "y", "z")
    got = term_set(affine.ring, [str(g) for g in affine.generators])
    assert got == term_set(affine.ring, ["x^5 - 1", "x^2 - y", "x^3 - z"])
    ring = PolyRing(("x", "y"))
    with pytest.raises(DomainError):
        dehomogenized_ideal(Ideal(ring, (p(ring, "x - 1"),)), 0)


def test_groebner_fan_thread_count_invariance(monkeypatch):
    ring = PolyRing(("x", "y", "z"))
    ideal = Ideal(ring, (p(ring, "x*y - z^2"), p(ring, "x^2 - y*z")))
    monkeypatch.setenv("GFK_THREADS", "1")
    serial = groebner_fan(ideal)
    monkeypatch.setenv("GFK_THREADS", "4")
    parallel = groebner_fan(ideal)
    assert serial.fan == parallel.fan
    assert [gc.basis.elements for gc in serial.cones] == [
        gc.basis.elements for gc in parallel.cones
    ]
    monkeypatch.setenv("GFK_THREADS", "0")
    with pytest.raises(DomainError):
        groebner_fan(ideal)
    monkeypatch.setenv("GFK_THREADS", "many")
    with pytest.raises(DomainError):
        groebner_fan(ideal)


def test_state_polytope_point():
    ring = PolyRing(("x", "y"))
    gf = groebner_fan(Ideal(ring, (p(ring, "x"),)))
    poly, used = state_polytope(gf)
    assert len(poly.vertices) == 1
    assert used == 1
    ok, d = verify_normal_fan_equals_projection(Ideal(ring, (p(ring, "x"),)))
    assert ok and d == 1


def test_state_polytope_segment():
    ring = PolyRing(("x", "y"))
    ideal = Ideal(ring, (p(ring, "x - y"),))
    gf = groebner_fan(ideal)
    poly, used = state_polytope(gf)
    assert used == 1
    assert poly.vertices == ((0,), (1,))
    with pytest.raises(DegreeError):
        state_polytope(gf, degree=0)
    poly3, used3 = state_polytope(gf, degree=3)
    assert used3 == 3 and len(poly3.vertices) == 2
    ok, d = verify_normal_fan_equals_projection(ideal)
    assert ok and d == 1
    ok3, d3 = verify_normal_fan_equals_projection(ideal, degree=3)
    assert ok3 and d3 == 3


def test_state_polytope_needs_homogeneous():
    ring = PolyRing(("x", "y"))
    gf = groebner_fan(Ideal(ring, (p(ring, "x^2 - y"),)))
    with pytest.raises(DomainError):
        state_polytope(gf)
    with pytest.raises(DomainError):
        verify_normal_fan_equals_projection(Ideal(ring, (p(ring, "x^2 - y"),)))


def test_union_of_chart_fans_trivial():
    ring = PolyRing(("x", "y"))
    union = union_of_chart_fans(Ideal(ring, (p(ring, "x - y"),)))
    assert union.ambient_dim == 1
    assert len(union.maximal_cones) == 2
    assert union.is_complete()
    with pytest.raises(DomainError):
        union_of_chart_fans(Ideal(ring, (p(ring, "x^2 - y"),)))


def test_format_bases_lists_every_cone():
    ring = PolyRing(("x", "y"))
    gf = groebner_fan(Ideal(ring, (p(ring, "x - y"),)))
    text = format_bases(gf)
    assert text.startswith("ring: x,y\n")
    assert "cone 0:" in text and "cone 1:" in text
    assert "cone 2:" not in text
