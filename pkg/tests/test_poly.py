import random
from fractions import Fraction

import pytest

from gfankit.errors import DimensionError, DomainError, ParseError
from gfankit.poly import (
    PolyRing,
    Polynomial,
    dehomogenize,
    format_polynomial,
    homogenize,
    initial_form,
    parse_polynomial,
)


@pytest.fixture
def ring():
    return PolyRing(("x", "y", "z"))


def test_ring_validation():
    with pytest.raises(DomainError):
        PolyRing(())
    with pytest.raises(DomainError):
        PolyRing(("x", "x"))
    with pytest.raises(ParseError):
        PolyRing(("x", "2y"))


def test_ring_drop_insert(ring):
    assert ring.drop(1).names == ("x", "z")
    assert ring.insert(0, "h").names == ("h", "x", "y", "z")
    assert ring.insert(3, "h").names == ("x", "y", "z", "h")
    with pytest.raises(DomainError):
        ring.insert(0, "y")
    with pytest.raises(DimensionError):
        ring.drop(3)


def test_parse_basic(ring):
    f = parse_polynomial(ring, "x^3 - y*z^2")
    assert f.terms == {(3, 0, 0): 1, (0, 1, 2): -1}
    g = parse_polynomial(ring, "2*x*y + 1/2*z - 3")
    assert g.terms == {(1, 1, 0): 2, (0, 0, 1): Fraction(1, 2), (0, 0, 0): -3}


def test_parse_implicit_products(ring):
    # identifier runs factor by longest name match; digits act as exponents
    assert parse_polynomial(ring, "yz^2").terms == {(0, 1, 2): 1}
    assert parse_polynomial(ring, "x2y").terms == {(2, 1, 0): 1}
    assert parse_polynomial(ring, "x2y3z").terms == {(2, 3, 1): 1}
    # a trailing ^e binds to the last variable of the run
    assert parse_polynomial(ring, "xy^3").terms == {(1, 3, 0): 1}


def test_parse_run_prefers_exact_name():
    ring = PolyRing(("x", "x2", "y"))
    # "x2" is a ring variable, so the whole run is that variable
    assert parse_polynomial(ring, "x2").terms == {(0, 1, 0): 1}
    # in a longer run the longest match at each position wins
    assert parse_polynomial(ring, "x2y").terms == {(0, 1, 1): 1}


def test_parse_signs_and_cancellation(ring):
    assert parse_polynomial(ring, "-x + x").is_zero
    assert parse_polynomial(ring, "+x - 2*x").terms == {(1, 0, 0): -1}


def test_parse_errors(ring):
    for bad in ["", "x +", "x @ y", "x^", "x^y", "1/0", "q", "* x"]:
        with pytest.raises(ParseError):
            parse_polynomial(ring, bad)
    # adjacent factors multiply, even across whitespace
    assert parse_polynomial(ring, "x 2").terms == {(1, 0, 0): 2}


def test_format_round_trip_random(ring):
    rng = random.Random(7101)
    for _ in range(120):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            mono = tuple(rng.randint(0, 5) for _ in range(3))
            num = rng.randint(-9, 9)
            den = rng.randint(1, 9)
            if num:
                terms[mono] = Fraction(num, den)
        f = Polynomial(ring, terms)
        assert parse_polynomial(ring, format_polynomial(f)) == f


def test_format_fixed_strings(ring):
    f = parse_polynomial(ring, "x^3 - y*z^2")
    assert format_polynomial(f) == "x^3 - y*z^2"
    assert format_polynomial(Polynomial.zero(ring)) == "0"
    assert format_polynomial(Polynomial.constant(ring, Fraction(-3, 4))) == "-3/4"


def test_arithmetic(ring):
    x = Polynomial.variable(ring, 0)
    y = Polynomial.variable(ring, 1)
    assert ((x + y) * (x - y)).terms == {(2, 0, 0): 1, (0, 2, 0): -1}
    assert (x - x).is_zero
    assert ((x + y) ** 2).terms == {(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}
    assert (3 * x).terms == {(1, 0, 0): 3}
    assert x.mul_term((0, 0, 2), -2).terms == {(1, 0, 2): -2}


def test_degree_and_homogeneity(ring):
    f = parse_polynomial(ring, "x^3 - y*z^2")
    assert f.total_degree() == 3
    assert f.is_homogeneous()
    assert not parse_polynomial(ring, "x^2 - y").is_homogeneous()
    with pytest.raises(DomainError):
        Polynomial.zero(ring).total_degree()


def test_initial_form(ring):
    f = parse_polynomial(ring, "x^2 - y^2 + z")
    assert initial_form(f, (1, 1, 0)).terms == {(2, 0, 0): 1, (0, 2, 0): -1}
    assert initial_form(f, (0, 0, 1)).terms == {(0, 0, 1): 1}
    assert initial_form(f, (0, 0, 0)) == f


def test_homogenize_dehomogenize(ring):
    f = parse_polynomial(ring, "x^2 - y")
    h = homogenize(f, 3, "t")
    assert h.ring.names == ("x", "y", "z", "t")
    assert h.is_homogeneous()
    assert h.terms == {(2, 0, 0, 0): 1, (0, 1, 0, 1): -1}
    assert dehomogenize(h, 3) == f
    # insertion position is respected
    h0 = homogenize(f, 0, "t")
    assert h0.ring.names == ("t", "x", "y", "z")
    assert dehomogenize(h0, 0) == f


def test_dehomogenize_merges_terms(ring):
    # x^2*z and x^2 collapse onto the same monomial once z is set to 1
    f = Polynomial(ring, {(2, 0, 1): 1, (2, 0, 0): -1})
    assert dehomogenize(f, 2).is_zero


def test_random_homogenize_round_trip(ring):
    rng = random.Random(7102)
    for _ in range(60):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            terms[tuple(rng.randint(0, 4) for _ in range(3))] = rng.randint(1, 5)
        f = Polynomial(ring, terms)
        h = homogenize(f, 1, "t")
        assert h.is_homogeneous()
        assert dehomogenize(h, 1) == f
