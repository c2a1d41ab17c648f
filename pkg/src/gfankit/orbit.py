"""Finite abelian diagonal group actions on projective space.

A group is a product of cyclic factors, each acting by a diagonal matrix of
roots of unity; a factor of order m with exponents (a_1, ..., a_r) scales
coordinate i by a primitive m-th root raised to a_i. Construction eagerly
rejects groups where some nonidentity element repeats a character on two
coordinates, naming an offending element.

From a valid group the module derives the sublattice of exponent vectors
fixed by all characters, the associated binomial ideal of the closed orbit of
the all-ones point, and the refined lattice in which the projected fan of
that ideal must be measured.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError, FreenessError, IntegrityError, ParseError
from .groebner import Ideal, saturate
from .lattices import Lattice, chart_projection, det, hnf_rows, kernel_int, mat_inverse
from .poly import Polynomial, PolyRing

DEFAULT_NAMES = ("x", "y", "z", "w")


def default_ring(arity: int) -> PolyRing:
    if arity <= len(DEFAULT_NAMES):
        return PolyRing(DEFAULT_NAMES[:arity])
    return PolyRing(tuple("x%d" % (i + 1) for i in range(arity)))


@dataclass(frozen=True)
class DiagonalGroup:
    """factors: one (modulus, exponent vector) pair per cyclic factor.

    Exponents are stored reduced modulo their factor's modulus. All factors
    must agree on the number of coordinates, and at least two coordinates are
    required.
    """

    factors: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        if not self.factors:
            raise DomainError("group needs at least one cyclic factor")
        arity = len(self.factors[0][1])
        if arity < 2:
            raise DimensionError("group actions need at least two coordinates")
        cleaned = []
        for m, a in self.factors:
            m = int(m)
            if m < 1:
                raise DomainError("factor modulus must be a positive integer")
            if len(a) != arity:
                raise DimensionError("all factors must list the same number of exponents")
            cleaned.append((m, tuple(int(x) % m for x in a)))
        object.__setattr__(self, "factors", tuple(cleaned))
        self._check_free()

    @property
    def arity(self) -> int:
        return len(self.factors[0][1])

    @property
    def order(self) -> int:
        n = 1
        for m, _ in self.factors:
            n *= m
        return n

    @property
    def exponent(self) -> int:
        n = 1
        for m, _ in self.factors:
            n = n * m // math.gcd(n, m)
        return n

    def elements(self):
        """All elements as exponent tuples over the factors, identity first."""
        return itertools.product(*(range(m) for m, _ in self.factors))

    def character(self, element) -> tuple[int, ...]:
        """Per-coordinate weights of the element, modulo the group exponent."""
        big = self.exponent
        out = []
        for i in range(self.arity):
            acc = 0
            for t, (m, a) in zip(element, self.factors):
                acc += t * a[i] * (big // m)
            out.append(acc % big)
        return tuple(out)

    def _check_free(self):
        for element in self.elements():
            if not any(element):
                continue
            w = self.character(element)
            for i in range(len(w)):
                for j in range(i + 1, len(w)):
                    if w[i] == w[j]:
                        raise FreenessError(
                            "group element %s repeats character %d on coordinates %d and %d"
                            % (",".join(map(str, element)), w[i], i + 1, j + 1)
                        )

    def __str__(self):
        return ";".join("%d:%s" % (m, ",".join(map(str, a))) for m, a in self.factors)


def parse_group(text: str) -> DiagonalGroup:
    """Parse 'm:a1,...,ar' factors separated by ';', e.g. '5:1,3,0'."""
    factors = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            raise ParseError("empty group factor")
        head, sep, tail = part.partition(":")
        if not sep:
            raise ParseError("group factor %r is not of the form 'm:a1,...,ar'" % (part,))
        try:
            m = int(head.strip())
        except ValueError:
            raise ParseError("group factor modulus %r is not an integer" % (head.strip(),))
        try:
            a = tuple(int(x.strip()) for x in tail.split(","))
        except ValueError:
            raise ParseError("group factor exponents %r are not integers" % (tail.strip(),))
        factors.append((m, a))
    return DiagonalGroup(tuple(factors))


def orbit_lattice(group: DiagonalGroup) -> list[tuple[int, ...]]:
    """HNF basis of {u in Z^r : sum(u) = 0 and a.u = 0 mod m for all factors}.

    This is the lattice of monomial exponent differences invariant under the
    group; its rank is r - 1.
    """
    r = group.arity
    s = len(group.factors)
    rows = [tuple([1] * r + [0] * s)]
    for j, (m, a) in enumerate(group.factors):
        row = list(a) + [0] * s
        row[r + j] = -m
        rows.append(tuple(row))
    kernel = kernel_int(rows, r + s)
    basis = hnf_rows([v[:r] for v in kernel])
    if len(basis) != r - 1:
        raise IntegrityError("orbit lattice rank %d, expected %d" % (len(basis), r - 1))
    for u in basis:
        if sum(u):
            raise IntegrityError("orbit lattice vector with nonzero coordinate sum")
        for m, a in group.factors:
            if sum(x * y for x, y in zip(a, u)) % m:
                raise IntegrityError("orbit lattice vector violating a congruence")
    return basis


def lattice_ideal(group: DiagonalGroup, ring: PolyRing | None = None) -> Ideal:
    """Binomial ideal of the closed orbit of (1 : ... : 1), canonically generated.

    Generators are the reduced degree-compatible basis of the saturation of
    the span of x^(u+) - x^(u-) over the orbit lattice basis. Every generator
    is checked to be a homogeneous difference of two monomials.
    """
    if ring is None:
        ring = default_ring(group.arity)
    if ring.arity != group.arity:
        raise DimensionError("ring arity %d, group arity %d" % (ring.arity, group.arity))
    gens = []
    for u in orbit_lattice(group):
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        gens.append(Polynomial(ring, {plus: Fraction(1), minus: Fraction(-1)}))
    out = saturate(Ideal(ring, tuple(gens)))
    for g in out.generators:
        if len(g.terms) != 2 or sorted(g.terms.values()) != [Fraction(-1), Fraction(1)]:
            raise IntegrityError("orbit ideal generator is not a monomial difference")
        if not g.is_homogeneous():
            raise IntegrityError("orbit ideal generator is not homogeneous")
    return out


def quotient_lattice(
    group: DiagonalGroup, chart: int | None = None
) -> tuple[Lattice, list[tuple[int, ...]]]:
    """(refined lattice, projection rows) for the chart's difference coordinates.

    The projection n -> (n_j - n_chart) identifies R^r modulo the all-ones
    line with R^(r-1); exponent differences pair with it by the standard dot
    product after dropping the chart column. The returned lattice is the dual
    of the orbit lattice under that pairing and contains Z^(r-1) with index
    equal to the group order.
    """
    r = group.arity
    c = r - 1 if chart is None else chart
    if not 0 <= c < r:
        raise DimensionError("chart index %d out of range for arity %d" % (c, r))
    basis = orbit_lattice(group)
    reduced = [row[:c] + row[c + 1 :] for row in basis]
    if abs(det(reduced)) != group.order:
        raise IntegrityError("orbit lattice index does not match the group order")
    inverse = mat_inverse(reduced)
    dual_rows = [tuple(inverse[i][j] for i in range(r - 1)) for j in range(r - 1)]
    return Lattice.spanned_by(dual_rows, r - 1), chart_projection(r, c)
