import time

import pytest

from gfankit.fan_engine import (
    affine_fan_from_homogenization,
    dehomogenized_ideal,
    groebner_fan,
)
from gfankit.groebner import Ideal
from gfankit.orbit import DiagonalGroup
from gfankit.poly import PolyRing, parse_polynomial

from golden import EXAMPLE1_GENS, EXAMPLE2_GENS


@pytest.fixture(scope="session")
def ring3():
    return PolyRing(("x", "y", "z"))


@pytest.fixture(scope="session")
def ring4():
    return PolyRing(("x", "y", "z", "w"))


@pytest.fixture(scope="session")
def example1_ideal(ring3):
    return Ideal(ring3, tuple(parse_polynomial(ring3, s) for s in EXAMPLE1_GENS))


@pytest.fixture(scope="session")
def example2_ideal(ring4):
    return Ideal(ring4, tuple(parse_polynomial(ring4, s) for s in EXAMPLE2_GENS))


@pytest.fixture(scope="session")
def group_531():
    return DiagonalGroup(((5, (1, 3, 0)),))


@pytest.fixture(scope="session")
def group_5123():
    return DiagonalGroup(((5, (1, 2, 3, 0)),))


@pytest.fixture(scope="session")
def example1_fan_timed(example1_ideal):
    t0 = time.perf_counter()
    gfan = groebner_fan(example1_ideal)
    return gfan, time.perf_counter() - t0


@pytest.fixture(scope="session")
def example1_fan(example1_fan_timed):
    return example1_fan_timed[0]


@pytest.fixture(scope="session")
def example2_affine_fan_timed(example2_ideal):
    # restrict to the chart where w = 1, then fan the affine ideal
    affine = dehomogenized_ideal(example2_ideal, 3)
    t0 = time.perf_counter()
    gfan = affine_fan_from_homogenization(affine, hom_index=3)
    return gfan, time.perf_counter() - t0


@pytest.fixture(scope="session")
def example2_affine_fan(example2_affine_fan_timed):
    return example2_affine_fan_timed[0]
