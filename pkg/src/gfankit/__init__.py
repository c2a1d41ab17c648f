"""gfankit: Groebner fans, orbit ideals of finite diagonal groups, and the
projected toric fans that classify their limit schemes."""

from .cones import Cone, nonneg_orthant
from .errors import (
    CapabilityError,
    DegreeError,
    DimensionError,
    DomainError,
    FreenessError,
    GfanError,
    IntegrityError,
    ParseError,
    ProjectionError,
    RegionError,
)
from .fan_engine import (
    GroebnerCone,
    GroebnerFan,
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
from .fans import (
    Fan,
    Polytope,
    convex_hull,
    format_fan,
    normal_fan,
    parse_fan,
    project_fan,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    count_points,
    format_ideal,
    parse_ideal,
    reduced_groebner_basis,
)
from .lattices import Lattice, chart_projection
from .orbit import (
    DiagonalGroup,
    lattice_ideal,
    orbit_lattice,
    parse_group,
    quotient_lattice,
)
from .ordering import TermOrder, grevlex, lex
from .poly import (
    Polynomial,
    PolyRing,
    dehomogenize,
    format_polynomial,
    homogenize,
    parse_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "Cone",
    "DegreeError",
    "DiagonalGroup",
    "DimensionError",
    "DomainError",
    "Fan",
    "FreenessError",
    "GfanError",
    "GroebnerBasis",
    "GroebnerCone",
    "GroebnerFan",
    "Ideal",
    "IntegrityError",
    "Lattice",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "Polytope",
    "ProjectionError",
    "RegionError",
    "TermOrder",
    "affine_fan_from_homogenization",
    "buchberger",
    "chart_projection",
    "cone_of_basis",
    "convex_hull",
    "count_points",
    "dehomogenize",
    "dehomogenized_ideal",
    "format_bases",
    "format_fan",
    "format_ideal",
    "format_polynomial",
    "grevlex",
    "groebner_cone",
    "groebner_fan",
    "homogenize",
    "lattice_ideal",
    "lex",
    "nonneg_orthant",
    "normal_fan",
    "orbit_lattice",
    "parse_fan",
    "parse_group",
    "parse_ideal",
    "parse_polynomial",
    "project_fan",
    "quotient_lattice",
    "reduced_groebner_basis",
    "state_polytope",
    "union_of_chart_fans",
    "verify_normal_fan_equals_projection",
]
