"""Exception hierarchy.

Every failure the library can signal deliberately derives from GfanError so
callers (and the CLI) can distinguish domain failures from plain bugs.
"""


class GfanError(Exception):
    """Base class for all deliberate failures raised by this package."""


class ParseError(GfanError):
    """Malformed textual input: polynomials, ideal files, fan files, group specs."""


class DimensionError(GfanError):
    """Arity or ambient-dimension mismatch, or a positive-dimensional variety
    where a finite one is required."""


class DomainError(GfanError):
    """Argument outside the mathematical domain of an operation
    (zero polynomial, empty generator list, non-positive modulus, ...)."""


class RegionError(GfanError):
    """Weight vector or term order invalid for the ideal at hand, e.g. a
    non-global order applied to a non-homogeneous ideal."""


class FreenessError(GfanError):
    """Group action does not act freely away from the torus fixed points:
    some nontrivial element fixes a coordinate subspace pointwise."""


class CapabilityError(GfanError):
    """Input is valid but outside the supported envelope (ambient dimension
    cap for cone duality, non-planar render requests)."""


class ProjectionError(GfanError):
    """Linear projection would collapse a cone improperly (kernel not inside
    the lineality space)."""


class IntegrityError(GfanError):
    """Internal cross-check failed: cones that should form a fan do not, or
    two constructions that must agree disagree."""


class DegreeError(GfanError):
    """Requested truncation degree is below the minimum admissible one."""
