"""Exact rational polyhedral cones via double description.

A cone is stored in both representations at once: extreme rays plus lineality
space, and facet halfspaces plus span equations. Both halves are canonical
(primitive integer vectors, rays reduced modulo the lineality space, sorted;
integer Hermite bases for the two subspaces), so cones compare and hash by
value. The incremental double description step keeps, for every intermediate
cone, exactly the extreme rays modulo the current lineality space; adjacency
of rays is decided combinatorially from the zero sets of the constraints
processed so far.

Ambient dimension is capped: the ray counts in double description can grow
exponentially with dimension, and every consumer in this package lives in
dimension at most eight.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CapabilityError, DimensionError, IntegrityError
from .lattices import (
    dot,
    mat_vec,
    rref,
    saturated_basis,
    snf_divisors,
    vec_primitive,
    vec_sub,
)

AMBIENT_CAP = 8


def _check_dim(d: int):
    if d < 1:
        raise DimensionError("cones need ambient dimension at least 1")
    if d > AMBIENT_CAP:
        raise CapabilityError(
            "ambient dimension %d exceeds the supported cap of %d" % (d, AMBIENT_CAP)
        )


def _reduce_mod(v, lin_rows, pivots):
    """Canonical residue of v modulo the span of RREF rows: pivot coordinates
    are zeroed out."""
    out = [Fraction(x) for x in v]
    for row, p in zip(lin_rows, pivots):
        c = out[p]
        if c:
            out = [a - c * b for a, b in zip(out, row)]
    return tuple(out)


def _dd(d, halfspaces, equations):
    """Intersect R^d with the given constraints.

    Returns (lin_rows, pivots, rays): an RREF basis of the lineality space
    and the primitive extreme rays reduced modulo it.
    """
    _check_dim(d)
    todo = []
    for e in equations:
        e = vec_primitive(e)
        if len(e) != d:
            raise DimensionError("equation of wrong length")
        if any(e):
            todo.append(e)
            todo.append(tuple(-x for x in e))
    for h in halfspaces:
        h = vec_primitive(h)
        if len(h) != d:
            raise DimensionError("halfspace of wrong length")
        if any(h):
            todo.append(h)
    lin = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    pivots = list(range(d))
    rays: list[tuple[int, ...]] = []
    processed: list[tuple[int, ...]] = []
    for h in todo:
        star = next((i for i in range(len(lin)) if dot(h, lin[i]) != 0), None)
        if star is not None:
            # the constraint cuts the lineality space: split off the normal
            # direction, keep it as a new extreme ray on the correct side
            axis = lin[star]
            ha = dot(h, axis)
            new_lin = []
            for i, l in enumerate(lin):
                if i == star:
                    continue
                c = dot(h, l)
                new_lin.append(tuple(a - (c / ha) * b for a, b in zip(l, axis)))
            lin, pivots = rref(new_lin)
            new_rays = []
            for r in rays:
                hr = dot(h, r)
                if hr:
                    moved = tuple(Fraction(a) - (Fraction(hr) / ha) * b for a, b in zip(r, axis))
                else:
                    moved = r
                new_rays.append(vec_primitive(_reduce_mod(moved, lin, pivots)))
            apex = axis if ha > 0 else tuple(-x for x in axis)
            new_rays.append(vec_primitive(_reduce_mod(apex, lin, pivots)))
            rays = new_rays
            if len(set(rays)) != len(rays) or any(not any(r) for r in rays):
                raise IntegrityError("degenerate ray set after a lineality cut")
        else:
            vals = [dot(h, r) for r in rays]
            if any(v < 0 for v in vals):
                zsets = [
                    frozenset(k for k, c in enumerate(processed) if dot(c, r) == 0)
                    for r in rays
                ]
                keep = [rays[i] for i, v in enumerate(vals) if v >= 0]
                pos = [i for i, v in enumerate(vals) if v > 0]
                neg = [i for i, v in enumerate(vals) if v < 0]
                for p in pos:
                    zp = zsets[p]
                    for n in neg:
                        common = zp & zsets[n]
                        adjacent = True
                        for k in range(len(rays)):
                            if k != p and k != n and common <= zsets[k]:
                                adjacent = False
                                break
                        if not adjacent:
                            continue
                        combo = vec_sub(
                            tuple(vals[p] * x for x in rays[n]),
                            tuple(vals[n] * x for x in rays[p]),
                        )
                        combo = vec_primitive(_reduce_mod(combo, lin, pivots))
                        if not any(combo):
                            raise IntegrityError("adjacent rays collapsed in a cut")
                        keep.append(combo)
                if len(set(keep)) != len(keep):
                    raise IntegrityError("duplicate extreme rays after a cut")
                rays = keep
        processed.append(h)
    return lin, pivots, rays


class Cone:
    """Closed convex rational polyhedral cone with canonical double
    representation. Compare and hash by (ambient_dim, rays, lineality)."""

    __slots__ = ("ambient_dim", "rays", "lineality", "halfspaces", "equations", "_hash")

    def __init__(self, ambient_dim, rays, lineality, halfspaces, equations):
        self.ambient_dim = ambient_dim
        self.rays = rays
        self.lineality = lineality
        self.halfspaces = halfspaces
        self.equations = equations
        self._hash = hash((ambient_dim, rays, lineality))

    @classmethod
    def _build(cls, d, lin, pivots, rays):
        lineality = tuple(saturated_basis(lin, d))
        primal_rays = tuple(sorted(rays))
        dual_lin, dual_piv, dual_rays = _dd(d, primal_rays, lineality)
        halfspaces = tuple(sorted(dual_rays))
        equations = tuple(saturated_basis(dual_lin, d))
        return cls(d, primal_rays, lineality, halfspaces, equations)

    @classmethod
    def from_halfspaces(cls, d, halfspaces, equations=()) -> "Cone":
        lin, pivots, rays = _dd(d, halfspaces, equations)
        return cls._build(d, lin, pivots, rays)

    @classmethod
    def from_rays(cls, d, rays, lineality=()) -> "Cone":
        dual_lin, dual_piv, dual_rays = _dd(d, rays, lineality)
        equations = tuple(saturated_basis(dual_lin, d))
        halfspaces = tuple(sorted(dual_rays))
        lin, pivots, primal = _dd(d, halfspaces, equations)
        lineality_rows = tuple(saturated_basis(lin, d))
        return cls(d, tuple(sorted(primal)), lineality_rows, halfspaces, equations)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    def is_pointed(self) -> bool:
        return not self.lineality

    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim - self.lineality_dim

    def is_smooth(self, lattice=None) -> bool:
        """Simplicial, and the primitive ray generators in the given lattice
        extend a basis of the lattice points of the lineality space to a
        partial lattice basis."""
        if not self.is_simplicial():
            return False
        d = self.ambient_dim
        if lattice is None:
            ray_rows = [list(r) for r in self.rays]
            lin_rows = [list(l) for l in self.lineality]
        else:
            if lattice.dim != d:
                raise DimensionError("lattice dimension %d, ambient %d" % (lattice.dim, d))
            ray_rows = [list(vec_primitive(lattice.coords(r))) for r in self.rays]
            lin_rows = [list(lattice.coords(l)) for l in self.lineality]
        mat = ray_rows + [list(row) for row in saturated_basis(lin_rows, d)]
        if not mat:
            return True
        return all(x == 1 for x in snf_divisors(mat))

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("point of wrong length")
        return all(dot(e, v) == 0 for e in self.equations) and all(
            dot(h, v) >= 0 for h in self.halfspaces
        )

    def contains_cone(self, other: "Cone") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("cones in different ambient spaces")
        return all(self.contains(r) for r in other.rays) and all(
            self.contains(l) and self.contains(tuple(-x for x in l)) for l in other.lineality
        )

    def intersect(self, other: "Cone") -> "Cone":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("cones in different ambient spaces")
        return Cone.from_halfspaces(
            self.ambient_dim,
            self.halfspaces + other.halfspaces,
            self.equations + other.equations,
        )

    def relative_interior_point(self) -> tuple[int, ...]:
        """Integer point in the relative interior (the ray sum; 0 for a
        linear space)."""
        p = [0] * self.ambient_dim
        for r in self.rays:
            for i, x in enumerate(r):
                p[i] += x
        return tuple(p)

    def facets(self) -> list[tuple[tuple[int, ...], "Cone"]]:
        """(inward normal, facet) pairs, one per facet halfspace."""
        out = []
        for h in self.halfspaces:
            out.append(
                (h, Cone.from_halfspaces(self.ambient_dim, self.halfspaces, self.equations + (h,)))
            )
        return out

    def all_faces(self) -> list["Cone"]:
        """Every face, this cone and the minimal face included."""
        seen: dict = {}
        stack = [self]
        while stack:
            c = stack.pop()
            key = (c.rays, c.lineality)
            if key in seen:
                continue
            seen[key] = c
            for _, f in c.facets():
                stack.append(f)
        return list(seen.values())

    def is_face_of(self, other: "Cone") -> bool:
        """True iff this cone is a face of the other: it equals the smallest
        face of the other containing a relative interior point."""
        if not other.contains_cone(self):
            return False
        p = self.relative_interior_point()
        if not other.contains(p):
            return False
        active = tuple(h for h in other.halfspaces if dot(h, p) == 0)
        face = Cone.from_halfspaces(
            other.ambient_dim, other.halfspaces, other.equations + active
        )
        return face == self

    def project(self, rows) -> "Cone":
        """Image under the linear map with the given matrix rows."""
        for row in rows:
            if len(row) != self.ambient_dim:
                raise DimensionError("projection row of wrong length")
        new_d = len(rows)
        img_rays = [mat_vec(rows, r) for r in self.rays]
        img_lin = [mat_vec(rows, l) for l in self.lineality]
        return Cone.from_rays(new_d, img_rays, img_lin)

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.ambient_dim == other.ambient_dim
            and self.rays == other.rays
            and self.lineality == other.lineality
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Cone(dim=%d, rays=%d, lineality=%d, ambient=%d)" % (
            self.dim,
            len(self.rays),
            self.lineality_dim,
            self.ambient_dim,
        )


def nonneg_orthant(d: int) -> Cone:
    rows = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return Cone.from_halfspaces(d, rows)
