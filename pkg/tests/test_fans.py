from fractions import Fraction

import pytest

from gfankit.cones import Cone, nonneg_orthant
from gfankit.errors import (
    DomainError,
    IntegrityError,
    ParseError,
    ProjectionError,
)
from gfankit.fans import (
    Fan,
    Polytope,
    convex_hull,
    format_fan,
    normal_fan,
    parse_fan,
    project_fan,
)
from gfankit.lattices import Lattice


def quadrant(sx, sy):
    return Cone.from_rays(2, [(sx, 0), (0, sy)])


def four_quadrants():
    return [quadrant(1, 1), quadrant(-1, 1), quadrant(1, -1), quadrant(-1, -1)]


def test_build_four_quadrants():
    fan = Fan.build(four_quadrants())
    assert fan.ambient_dim == 2
    assert len(fan.maximal_cones) == 4
    assert fan.f_vector() == (4, 4)
    assert fan.is_complete()
    assert fan.simplicial_count() == 4
    assert fan.smooth_count() == 4


def test_build_dedup_and_prune():
    cones = four_quadrants() + [quadrant(1, 1), Cone.from_rays(2, [(1, 0)])]
    fan = Fan.build(cones)
    assert len(fan.maximal_cones) == 4
    assert fan == Fan.build(four_quadrants())


def test_build_rejects_overlap():
    a = quadrant(1, 1)
    b = Cone.from_rays(2, [(1, 1), (-1, 1)])
    with pytest.raises(IntegrityError):
        Fan.build([a, b])


def test_build_rejects_empty():
    with pytest.raises(DomainError):
        Fan.build([])


def test_incomplete_fan():
    fan = Fan.build([quadrant(1, 1), quadrant(-1, 1)])
    assert not fan.is_complete()
    assert fan.f_vector() == (3, 2)
    half = Fan.build([Cone.from_rays(1, [(1,)])])
    assert not half.is_complete()
    assert Fan.build([Cone.from_rays(1, [(1,)]), Cone.from_rays(1, [(-1,)])]).is_complete()


def test_smooth_count_uses_fan_lattice():
    fifth = Lattice([(Fraction(1, 5), Fraction(3, 5)), (0, 1)])
    fan = Fan.build(four_quadrants(), fifth)
    assert fan.simplicial_count() == 4
    assert fan.smooth_count() == 0


def test_project_fan():
    # fan with lineality: two halfplanes split by the x-axis, kernel = y-axis
    up = Cone.from_halfspaces(2, [(0, 1)])
    down = Cone.from_halfspaces(2, [(0, -1)])
    fan = Fan.build([up, down])
    img = project_fan(fan, [(0, 1)])
    assert img.ambient_dim == 1
    assert len(img.maximal_cones) == 2
    assert img.is_complete()
    with pytest.raises(ProjectionError):
        project_fan(Fan.build(four_quadrants()), [(1, 0)])


def test_convex_hull_drops_non_vertices():
    p = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1), (2, 0)])
    # (1, 1) is the edge midpoint
    assert p.vertices == ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(2)), (Fraction(2), Fraction(0)))
    point = convex_hull([(3, 4)])
    assert point.vertices == ((Fraction(3), Fraction(4)),)
    with pytest.raises(DomainError):
        convex_hull([])


def test_normal_fan_square():
    square = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    fan = normal_fan(square)
    assert fan.is_complete()
    assert len(fan.maximal_cones) == 4
    assert Fan.build(four_quadrants()) == fan


def test_normal_fan_segment():
    seg = convex_hull([(0, 0), (1, 0)])
    fan = normal_fan(seg)
    # two halfplanes sharing the vertical lineality line
    assert len(fan.maximal_cones) == 2
    assert fan.lineality == ((0, 1),)
    assert fan.is_complete()


def test_format_parse_round_trip():
    for fan in [
        Fan.build(four_quadrants()),
        Fan.build(four_quadrants(), Lattice([(Fraction(1, 5), Fraction(3, 5)), (0, 1)])),
        Fan.build([Cone.from_halfspaces(2, [(0, 1)]), Cone.from_halfspaces(2, [(0, -1)])]),
        normal_fan(convex_hull([(0, 0), (1, 0), (0, 1)])),
    ]:
        text = format_fan(fan)
        back = parse_fan(text)
        assert back == fan
        assert format_fan(back) == text


def test_rayless_cone_sentinel():
    # the full plane is a single maximal cone with no rays at all
    fan = Fan.build([Cone.from_halfspaces(2, [])])
    text = format_fan(fan)
    assert "\n-\n" in text
    assert parse_fan(text) == fan


def test_parse_fan_errors():
    good = format_fan(Fan.build(four_quadrants()))
    with pytest.raises(ParseError):
        parse_fan("")
    with pytest.raises(ParseError):
        parse_fan(good.replace("ambient_dim: 2", "ambient_dim: two"))
    with pytest.raises(ParseError):
        parse_fan(good.replace("lattice:", "lattices:"))
    with pytest.raises(ParseError):
        parse_fan(good + "extra\n")
    with pytest.raises(ParseError):
        parse_fan(good.replace("fvector: 4 4", "fvector: 4 5"))
    bad_index = (
        "ambient_dim: 2\nlattice:\n1 0\n0 1\nlineality:\nrays:\n1 0\n0 1\n"
        "maximal_cones:\n0 5\nfvector: 2 1\n"
    )
    with pytest.raises(ParseError):
        parse_fan(bad_index)


def test_fvector_counts_all_faces(example1_fan):
    fan = example1_fan.fan
    # the common lineality line is the single one-dimensional face
    assert fan.f_vector() == (1, 11, 11)
    assert fan.is_complete()
    assert len(fan.maximal_cones) == 11
    assert fan.lineality == ((1, 1, 1),)
