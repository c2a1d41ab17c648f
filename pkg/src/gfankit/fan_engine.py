"""Groebner cones and fans, affine restriction, state polytopes, and the
normal-fan cross-checks.

The fan of a homogeneous ideal is enumerated by wall-crossing: starting from
the cone of the fallback order, every facet of every discovered cone is
crossed with a two-row matrix order (a relative interior point of the facet,
then the outward facet normal, then the fallback), which lands in the
neighboring reduced basis; cones are deduplicated by their sets of leading
exponents. Non-homogeneous input is routed through homogenization: the
homogeneous fan upstairs is projected along the extra coordinate and exactly
the image cones whose relative interior meets the nonnegative orthant
survive, each cross-checked against a directly computed basis at an interior
weight vector.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone, nonneg_orthant
from .errors import (
    DegreeError,
    DimensionError,
    DomainError,
    IntegrityError,
    RegionError,
)
from .fans import Fan, Polytope, _cone_key, convex_hull, normal_fan, project_fan
from .groebner import GroebnerBasis, Ideal, reduced_groebner_basis
from .lattices import Lattice, chart_projection, vec_sub
from .orbit import DiagonalGroup, quotient_lattice
from .ordering import TermOrder, leading_term, lex
from .poly import Polynomial, dehomogenize, format_polynomial, homogenize


@dataclass(frozen=True)
class GroebnerCone:
    basis: GroebnerBasis
    cone: Cone

    @property
    def initial_exponents(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.leading_exponents()


@dataclass(frozen=True)
class GroebnerFan:
    ideal: Ideal
    fallback: TermOrder
    cones: tuple[GroebnerCone, ...]
    fan: Fan
    homogeneous: bool

    def __post_init__(self):
        if len(self.cones) != len(self.fan.maximal_cones):
            raise IntegrityError("fan lost or merged maximal cones")
        for gc, c in zip(self.cones, self.fan.maximal_cones):
            if gc.cone != c:
                raise IntegrityError("basis list out of step with the fan")


def cone_of_basis(gb: GroebnerBasis) -> Cone:
    """Closed cone of weights whose initial forms agree with the basis
    markings: one halfspace lead - trailing per term."""
    halfspaces = []
    for g in gb.elements:
        lead, _ = leading_term(g, gb.order)
        for mono in g.terms:
            if mono != lead:
                halfspaces.append(vec_sub(lead, mono))
    return Cone.from_halfspaces(gb.ring.arity, halfspaces)


def groebner_cone(ideal: Ideal, w, fallback: TermOrder | None = None) -> GroebnerCone:
    """Cone and reduced basis at the weight vector w (order [w]+fallback)."""
    fb = fallback if fallback is not None else lex()
    weights = tuple(Fraction(x) for x in w)
    if len(weights) != ideal.arity:
        raise DimensionError("weight length %d, arity %d" % (len(weights), ideal.arity))
    if not ideal.is_homogeneous() and any(x < 0 for x in weights):
        raise RegionError("negative weights outside the region of a non-homogeneous ideal")
    order = fb if not any(weights) else fb.with_weights([weights])
    gb = reduced_groebner_basis(ideal, order)
    cone = cone_of_basis(gb)
    if not cone.contains(weights):
        raise IntegrityError("weight vector escaped its own cone")
    return GroebnerCone(gb, cone)


def _worker_count() -> int:
    raw = os.environ.get("GFK_THREADS")
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError("GFK_THREADS must be a positive integer")
    if n < 1:
        raise DomainError("GFK_THREADS must be a positive integer")
    return n


def groebner_fan(ideal: Ideal, fallback: TermOrder | None = None, strategy: str = "normal") -> GroebnerFan:
    """All maximal Groebner cones of the ideal.

    Homogeneous ideals get the complete fan of R^r; anything else is
    delegated to the homogenize-project-restrict construction, whose cones
    cover the nonnegative orthant.
    """
    fb = fallback if fallback is not None else lex()
    if not ideal.is_homogeneous():
        return affine_fan_from_homogenization(ideal, None, fb, strategy)
    start = reduced_groebner_basis(ideal, fb, strategy)
    first = GroebnerCone(start, cone_of_basis(start))
    seen: dict = {start.signature(): first}
    frontier = [first]
    workers = _worker_count()
    while frontier:
        tasks = []
        for gc in frontier:
            for h, facet in gc.cone.facets():
                p = facet.relative_interior_point()
                rows = [r for r in (p, tuple(-x for x in h)) if any(r)]
                tasks.append(tuple(rows))
        # crossing the same wall twice is harmless; identical tasks are not
        uniq = list(dict.fromkeys(tasks))

        def cross(rows):
            return reduced_groebner_basis(ideal, fb.with_weights(rows), strategy)

        if workers > 1 and len(uniq) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(cross, uniq))
        else:
            results = [cross(rows) for rows in uniq]
        frontier = []
        for gb in results:
            sig = gb.signature()
            if sig not in seen:
                gc = GroebnerCone(gb, cone_of_basis(gb))
                seen[sig] = gc
                frontier.append(gc)
    cones = sorted(seen.values(), key=lambda gc: _cone_key(gc.cone))
    fan = Fan.build([gc.cone for gc in cones])
    return GroebnerFan(ideal, fb, tuple(cones), fan, True)


def affine_fan_from_homogenization(
    ideal: Ideal,
    hom_index: int | None = None,
    fallback: TermOrder | None = None,
    strategy: str = "normal",
) -> GroebnerFan:
    """Fan of an ideal over the nonnegative orthant, via homogenization.

    Homogenizes the generators as given, computes the complete fan of that
    homogeneous ideal, projects each maximal cone along the extra
    coordinate, and keeps exactly the image cones whose relative interior
    meets the nonnegative orthant. The kept images tile the orthant; each
    carries the reduced basis of the original ideal computed at an interior
    weight of its orthant part. Two cautions follow from the construction.
    The result depends on the generating set through its homogenization:
    presentations differing by a saturation give different (compatible)
    subdivisions. And neighboring images can carry one and the same affine
    reduced basis, since upstairs walls may be invisible after setting the
    homogenizing variable to one; cones therefore subdivide the regions on
    which the affine initial ideal is constant, and every image is checked
    to stay inside the inequality region of its own basis.
    """
    fb = fallback if fallback is not None else lex()
    r = ideal.arity
    hom = r if hom_index is None else hom_index
    if not 0 <= hom <= r:
        raise DimensionError("homogenization index %d out of range" % (hom,))
    name = "h"
    n = 0
    while name in ideal.ring.names:
        name = "h%d" % n
        n += 1
    lifted = Ideal(
        ideal.ring.insert(hom, name),
        tuple(homogenize(g, hom, name) for g in ideal.generators),
    )
    upstairs = groebner_fan(lifted, fb, strategy)
    rows = chart_projection(r + 1, hom)
    orthant = nonneg_orthant(r)
    kept = []
    for gc in upstairs.cones:
        image = gc.cone.project(rows)
        cut = image.intersect(orthant)
        if cut.dim != r:
            continue
        w = cut.relative_interior_point()
        if any(x <= 0 for x in w):
            raise IntegrityError("interior point of an orthant cut is not positive")
        gb = reduced_groebner_basis(ideal, fb.with_weights([w]), strategy)
        if not cone_of_basis(gb).contains_cone(cut):
            raise IntegrityError("image cone escapes the region of its own basis")
        kept.append(GroebnerCone(gb, image))
    kept.sort(key=lambda gc: _cone_key(gc.cone))
    fan = Fan.build([gc.cone for gc in kept])
    _sample_check(ideal, kept, fb, strategy)
    return GroebnerFan(ideal, fb, tuple(kept), fan, False)


def _sample_check(ideal: Ideal, cones, fallback: TermOrder, strategy: str) -> None:
    """Spot-check an affine fan against direct computation: random positive
    weights must land in a kept cone whose stored basis is reproduced."""
    if not cones:
        raise IntegrityError("affine fan came out empty")
    rng = random.Random(20210 + ideal.arity)
    for _ in range(12):
        w = tuple(rng.randint(1, 40) for _ in range(ideal.arity))
        homes = [gc for gc in cones if gc.cone.contains(w)]
        if not homes:
            raise IntegrityError("sampled weight %r missed every cone" % (w,))
        gb = reduced_groebner_basis(ideal, fallback.with_weights([w]), strategy)
        if not any(gc.basis.signature() == gb.signature() for gc in homes):
            raise IntegrityError("sampled weight %r reproduced no stored basis" % (w,))


def dehomogenized_ideal(ideal: Ideal, index: int) -> Ideal:
    """Chart restriction: substitute 1 for the given variable and drop it."""
    gens = []
    for g in ideal.generators:
        d = dehomogenize(g, index)
        if not d.is_zero:
            gens.append(d)
    if not gens:
        raise DomainError("dehomogenization killed every generator")
    return Ideal(ideal.ring.drop(index), tuple(gens))


def union_of_chart_fans(ideal: Ideal, fallback: TermOrder | None = None) -> Fan:
    """Union of the per-chart affine fans, in the last chart's coordinates.

    Chart i contributes the affine fan of the dehomogenization at variable i,
    re-expressed in the difference coordinates of the last variable. The
    union must reproduce the projection of the full fan; that equality is
    asserted here, not assumed.
    """
    fb = fallback if fallback is not None else lex()
    if not ideal.is_homogeneous():
        raise DomainError("chart unions need a homogeneous ideal")
    r = ideal.arity
    if r < 2:
        raise DimensionError("chart unions need at least two variables")
    collected = []
    for i in range(r):
        affine = affine_fan_from_homogenization(dehomogenized_ideal(ideal, i), None, fb)
        source_vars = [j for j in range(r) if j != i]
        pos = {v: k for k, v in enumerate(source_vars)}
        rows = []
        for j in range(r):
            if j == r - 1:
                continue
            row = [0] * (r - 1)
            if j != i:
                row[pos[j]] += 1
            if r - 1 != i:
                row[pos[r - 1]] -= 1
            rows.append(tuple(row))
        collected.extend(c.project(rows) for c in affine.fan.maximal_cones)
    union = Fan.build(collected)
    projected = project_fan(groebner_fan(ideal, fb).fan, chart_projection(r, r - 1))
    if union != projected:
        raise IntegrityError("union of chart fans differs from the projected fan")
    return union


def _degree_monomials(arity: int, degree: int):
    mono = [0] * arity

    def rec(pos, rem):
        if pos == arity - 1:
            mono[pos] = rem
            yield tuple(mono)
            return
        for e in range(rem + 1):
            mono[pos] = e
            yield from rec(pos + 1, rem - e)

    yield from rec(0, degree)


def _polytope_at(gfan: GroebnerFan, degree: int) -> Polytope:
    # sum over every degree up to the top one: two distinct initial ideals
    # can share all exponent sums from some degree on while differing in a
    # narrow low-degree window, so single top degrees are not enough
    r = gfan.ideal.arity
    points = []
    for gc in gfan.cones:
        leads = gc.initial_exponents
        total = [0] * r
        for d in range(1, degree + 1):
            for mono in _degree_monomials(r, d):
                if any(all(a >= b for a, b in zip(mono, l)) for l in leads):
                    for k in range(r):
                        total[k] += mono[k]
        points.append(tuple(total))
    origin = min(points)
    shifted = [tuple(p[k] - origin[k] for k in range(r - 1)) for p in points]
    return convex_hull(shifted)


def state_polytope(gfan: GroebnerFan, degree: int | None = None) -> tuple[Polytope, int]:
    """State polytope of the fan's ideal and the degree it was computed at.

    Each maximal cone contributes the summed exponent vectors of all
    monomials of its initial ideal of degree at most d; points are
    translated by the lexicographically smallest of them and the last
    coordinate (constant across points after translation, as all coordinate
    sums agree) is dropped. Without an explicit degree, it starts at the
    largest total degree over all reduced bases and grows until the vertex
    count agrees on two consecutive degrees.
    """
    if not gfan.homogeneous:
        raise DomainError("state polytopes need a homogeneous ideal")
    bound = max(gc.basis.max_degree() for gc in gfan.cones)
    if degree is not None:
        if degree < bound:
            raise DegreeError(
                "degree %d is below the reduced-basis bound %d" % (degree, bound)
            )
        return _polytope_at(gfan, degree), degree
    d = bound
    current = _polytope_at(gfan, d)
    while True:
        nxt = _polytope_at(gfan, d + 1)
        if len(current.vertices) == len(nxt.vertices):
            return current, d
        current = nxt
        d += 1
        if d > bound + 64:
            raise DegreeError("state polytope vertex count failed to stabilize")


def verify_normal_fan_equals_projection(
    ideal: Ideal,
    degree: int | None = None,
    group: DiagonalGroup | None = None,
    fallback: TermOrder | None = None,
) -> tuple[bool, int]:
    """Whether the state polytope's normal fan equals the projected fan,
    plus the degree used. The lattice defaults to the standard one; a group
    supplies its refined quotient lattice instead (the verdict itself is
    lattice-independent)."""
    fb = fallback if fallback is not None else lex()
    r = ideal.arity
    gfan = groebner_fan(ideal, fb)
    if not gfan.homogeneous:
        raise DomainError("the normal-fan comparison needs a homogeneous ideal")
    if group is not None:
        if group.arity != r:
            raise DimensionError("group arity %d, ideal arity %d" % (group.arity, r))
        lattice, rows = quotient_lattice(group)
    else:
        lattice, rows = Lattice.standard(r - 1), chart_projection(r, r - 1)
    projected = project_fan(gfan.fan, rows, lattice)
    polytope, used = state_polytope(gfan, degree)
    return normal_fan(polytope, lattice) == projected, used


def format_bases(gfan: GroebnerFan) -> str:
    """Sidecar text: the reduced basis of each maximal cone, in fan order."""
    blocks = ["ring: " + ",".join(gfan.ideal.ring.names)]
    for i, gc in enumerate(gfan.cones):
        lines = ["cone %d:" % i]
        key = gc.basis.order.key
        lines.extend(format_polynomial(g, key) for g in gc.basis.elements)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
