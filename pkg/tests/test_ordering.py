import random

import pytest

from gfankit.errors import DimensionError, DomainError
from gfankit.ordering import TermOrder, grevlex, leading_term, lex
from gfankit.poly import PolyRing, Polynomial, parse_polynomial


def test_lex_basics():
    o = lex()
    assert o.greater((1, 0, 0), (0, 5, 5))
    assert o.greater((1, 1, 0), (1, 0, 9))
    assert o.compare((2, 1, 0), (2, 1, 0)) == 0


def test_grevlex_basics():
    o = grevlex()
    # degree first
    assert o.greater((0, 0, 3), (2, 0, 0))
    # among equal degrees the smaller last exponent wins
    assert o.greater((1, 1, 0), (0, 2, 0))
    assert o.greater((2, 0, 0), (1, 1, 0))


def test_weight_rows_take_priority():
    o = lex().with_weights([(0, 0, 1)])
    assert o.greater((0, 0, 2), (5, 5, 1))
    # ties fall through to the fallback
    assert o.greater((1, 0, 1), (0, 4, 1))


def test_with_weights_prepends():
    o = lex().with_weights([(1, 1, 1)]).with_weights([(0, 1, 0)])
    assert o.weight_rows[0] == (0, 1, 0)
    assert o.weight_rows[1] == (1, 1, 1)


def test_weight_rows_are_scaled_primitive():
    o = TermOrder(((2, 4, 6),))
    assert o.weight_rows == ((1, 2, 3),)


def test_invalid_orders():
    with pytest.raises(DomainError):
        TermOrder((), "degrevlex")
    with pytest.raises(DomainError):
        TermOrder(((0, 0, 0),))
    with pytest.raises(DimensionError):
        TermOrder(((1, 0), (1, 0, 0)))


def test_is_global():
    assert lex().is_global(3)
    assert grevlex().is_global(3)
    assert lex().with_weights([(1, 2, 3)]).is_global(3)
    assert not lex().with_weights([(1, -1, 0)]).is_global(3)
    # a negative entry hidden behind a positive earlier row is still global
    assert lex().with_weights([(1, 1, 1), (0, -1, 1)]).is_global(3)
    assert not lex().with_weights([(1, 0, 0), (0, -1, 1)]).is_global(3)


def test_order_axioms_random():
    rng = random.Random(7201)
    orders = [lex(), grevlex(), lex().with_weights([(3, 1, 2)]), grevlex().with_weights([(1, 1, 1), (2, 0, 1)])]
    monos = [tuple(rng.randint(0, 6) for _ in range(3)) for _ in range(40)]
    for o in orders:
        for a in monos:
            assert o.compare(a, a) == 0
            for b in monos:
                assert o.compare(a, b) == -o.compare(b, a)
                # multiplicative: scaling by a monomial preserves comparisons
                c = (1, 2, 0)
                ac = tuple(p + q for p, q in zip(a, c))
                bc = tuple(p + q for p, q in zip(b, c))
                assert o.compare(ac, bc) == o.compare(a, b)
        if o.is_global(3):
            one = (0, 0, 0)
            for a in monos:
                if a != one:
                    assert o.greater(a, one)


def test_leading_term():
    ring = PolyRing(("x", "y", "z"))
    f = parse_polynomial(ring, "x^2*y - 2*z^5")
    assert leading_term(f, lex()) == ((2, 1, 0), 1)
    assert leading_term(f, grevlex()) == ((0, 0, 5), -2)
    w = lex().with_weights([(0, 0, 1)])
    assert leading_term(f, w) == ((0, 0, 5), -2)
    with pytest.raises(DomainError):
        leading_term(Polynomial.zero(ring), lex())
