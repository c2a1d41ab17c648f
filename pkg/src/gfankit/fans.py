"""Fans of rational cones, polytopes and their normal fans, and the fan file
format.

A fan is a set of maximal cones in one ambient space such that every pairwise
intersection is a face of both; construction verifies this and fails loudly.
All maximal cones of a fan share one lineality space (pairwise intersections
being faces forces it), which is stored once. An ambient lattice rides along
for smoothness statistics; it never influences the cone set itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone
from .errors import (
    DimensionError,
    DomainError,
    IntegrityError,
    ParseError,
    ProjectionError,
)
from .lattices import Lattice, rational_kernel, vec_sub


def _cone_key(c: Cone):
    return (c.dim, c.rays, c.lineality)


class Fan:
    __slots__ = ("ambient_dim", "lattice", "maximal_cones", "lineality", "_hash")

    def __init__(self, ambient_dim, lattice, maximal_cones, lineality):
        self.ambient_dim = ambient_dim
        self.lattice = lattice
        self.maximal_cones = maximal_cones
        self.lineality = lineality
        self._hash = hash((ambient_dim, lattice, maximal_cones))

    @classmethod
    def build(cls, cones, lattice: Lattice | None = None) -> "Fan":
        """Canonical fan from the given cones: deduplicates, drops cones
        contained in others, checks the fan condition pairwise."""
        cones = list(cones)
        if not cones:
            raise DomainError("a fan needs at least one cone")
        d = cones[0].ambient_dim
        if any(c.ambient_dim != d for c in cones):
            raise DimensionError("fan cones live in different ambient spaces")
        if lattice is None:
            lattice = Lattice.standard(d)
        if lattice.dim != d:
            raise DimensionError("lattice dimension %d, ambient %d" % (lattice.dim, d))
        uniq: dict = {}
        for c in cones:
            uniq.setdefault((c.rays, c.lineality), c)
        cs = list(uniq.values())
        keep = [
            c
            for c in cs
            if not any(other is not c and other.contains_cone(c) for other in cs)
        ]
        for i in range(len(keep)):
            for j in range(i + 1, len(keep)):
                cut = keep[i].intersect(keep[j])
                if not (cut.is_face_of(keep[i]) and cut.is_face_of(keep[j])):
                    raise IntegrityError(
                        "fan condition violated: an intersection of maximal cones is "
                        "not a common face"
                    )
        lin = keep[0].lineality
        if any(c.lineality != lin for c in keep):
            raise IntegrityError("maximal cones disagree on the lineality space")
        keep.sort(key=_cone_key)
        return cls(d, lattice, tuple(keep), lin)

    def all_faces(self) -> list[Cone]:
        seen: dict = {}
        for c in self.maximal_cones:
            for f in c.all_faces():
                seen.setdefault((f.rays, f.lineality), f)
        return list(seen.values())

    def f_vector(self) -> tuple[int, ...]:
        """Counts of distinct faces of each dimension, 1 up to the maximum."""
        top = max(c.dim for c in self.maximal_cones)
        counts = [0] * (top + 1)
        for f in self.all_faces():
            counts[f.dim] += 1
        return tuple(counts[1:])

    def is_complete(self) -> bool:
        """True iff the maximal cones tile the whole space: all of them are
        full-dimensional and every facet separates exactly two of them."""
        d = self.ambient_dim
        if any(c.dim != d for c in self.maximal_cones):
            return False
        shared: dict = {}
        for c in self.maximal_cones:
            for _, f in c.facets():
                key = (f.rays, f.lineality)
                shared[key] = shared.get(key, 0) + 1
        return all(v == 2 for v in shared.values())

    def simplicial_count(self) -> int:
        return sum(1 for c in self.maximal_cones if c.is_simplicial())

    def smooth_count(self) -> int:
        return sum(1 for c in self.maximal_cones if c.is_smooth(self.lattice))

    def __eq__(self, other):
        return (
            isinstance(other, Fan)
            and self.ambient_dim == other.ambient_dim
            and self.lattice == other.lattice
            and self.maximal_cones == other.maximal_cones
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Fan(ambient=%d, maximal_cones=%d)" % (self.ambient_dim, len(self.maximal_cones))


def project_fan(fan: Fan, rows, lattice: Lattice | None = None) -> Fan:
    """Image fan under the linear map with the given rows.

    The kernel of the map must sit inside the lineality space of every
    maximal cone, otherwise images need not form a fan; violations raise
    ProjectionError. The images are still verified pairwise.
    """
    kernel = rational_kernel(rows, fan.ambient_dim)
    for k in kernel:
        neg = tuple(-x for x in k)
        for c in fan.maximal_cones:
            if not (c.contains(k) and c.contains(neg)):
                raise ProjectionError(
                    "projection kernel is not contained in the lineality of every cone"
                )
    images = [c.project(rows) for c in fan.maximal_cones]
    return Fan.build(images, lattice)


@dataclass(frozen=True)
class Polytope:
    """Vertex-irredundant rational polytope: no vertex is a convex
    combination of the others."""

    ambient_dim: int
    vertices: tuple[tuple[Fraction, ...], ...]


def convex_hull(points) -> Polytope:
    """Polytope on the extreme points of the given point set.

    A point is kept iff its normal cone (halfspaces p - q over the other
    points) is full-dimensional, which characterizes vertices even for
    lower-dimensional polytopes.
    """
    pts = []
    for p in points:
        t = tuple(Fraction(x) for x in p)
        if t not in pts:
            pts.append(t)
    if not pts:
        raise DomainError("convex hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise DimensionError("points of mixed dimensions")
    vertices = []
    for p in pts:
        normals = [vec_sub(p, q) for q in pts if q != p]
        if Cone.from_halfspaces(d, normals).dim == d:
            vertices.append(p)
    if not vertices:
        raise IntegrityError("no extreme points found in a nonempty point set")
    return Polytope(d, tuple(sorted(vertices)))


def normal_fan(polytope: Polytope, lattice: Lattice | None = None) -> Fan:
    """Complete fan of maximizer cones: the cone of a vertex v consists of
    the w with <w, v> maximal over the polytope."""
    d = polytope.ambient_dim
    cones = []
    for v in polytope.vertices:
        normals = [vec_sub(v, q) for q in polytope.vertices if q != v]
        cones.append(Cone.from_halfspaces(d, normals))
    return Fan.build(cones, lattice)


# fan file format


def _format_fraction_row(row) -> str:
    return " ".join(str(Fraction(x)) for x in row)


def format_fan(fan: Fan) -> str:
    rays: list[tuple[int, ...]] = sorted({r for c in fan.maximal_cones for r in c.rays})
    index = {r: i for i, r in enumerate(rays)}
    lines = ["ambient_dim: %d" % fan.ambient_dim, "lattice:"]
    for row in fan.lattice.basis:
        lines.append(_format_fraction_row(row))
    lines.append("lineality:")
    for row in fan.lineality:
        lines.append(" ".join(str(x) for x in row))
    lines.append("rays:")
    for r in rays:
        lines.append(" ".join(str(x) for x in r))
    lines.append("maximal_cones:")
    cone_lines = sorted(tuple(sorted(index[r] for r in c.rays)) for c in fan.maximal_cones)
    for idx in cone_lines:
        # a cone with no rays is the lineality span; mark it explicitly
        lines.append(" ".join(str(i) for i in idx) if idx else "-")
    lines.append("fvector: " + " ".join(str(x) for x in fan.f_vector()))
    return "\n".join(lines) + "\n"


def parse_fan(text: str) -> Fan:
    lines = [l.rstrip("\n") for l in text.splitlines()]
    pos = 0

    def take() -> str:
        nonlocal pos
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos >= len(lines):
            raise ParseError("unexpected end of fan file")
        out = lines[pos]
        pos += 1
        return out

    def peek() -> str | None:
        p = pos
        while p < len(lines) and not lines[p].strip():
            p += 1
        return lines[p] if p < len(lines) else None

    head = take().strip()
    if not head.startswith("ambient_dim:"):
        raise ParseError("fan file must start with 'ambient_dim:'")
    try:
        d = int(head[len("ambient_dim:") :].strip())
    except ValueError:
        raise ParseError("ambient_dim is not an integer")

    def block(name: str, parser):
        header = take().strip()
        if header != name + ":":
            raise ParseError("expected '%s:' block, found %r" % (name, header))
        rows = []
        while True:
            nxt = peek()
            if nxt is None or nxt.strip().endswith(":") and " " not in nxt.strip():
                break
            rows.append(parser(take().strip()))
        return rows

    def frac_row(s: str):
        try:
            return tuple(Fraction(tok) for tok in s.split())
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad rational row %r" % (s,))

    def int_row(s: str):
        try:
            return tuple(int(tok) for tok in s.split())
        except ValueError:
            raise ParseError("bad integer row %r" % (s,))

    lattice_rows = block("lattice", frac_row)
    lineality_rows = block("lineality", int_row)
    ray_rows = block("rays", int_row)
    header = take().strip()
    if header != "maximal_cones:":
        raise ParseError("expected 'maximal_cones:' block, found %r" % (header,))
    cone_rows = []
    while True:
        nxt = peek()
        if nxt is None or nxt.strip().startswith("fvector:"):
            break
        entry = take().strip()
        cone_rows.append(() if entry == "-" else int_row(entry))
    fline = take().strip()
    if not fline.startswith("fvector:"):
        raise ParseError("missing 'fvector:' line")
    stated = tuple(int(tok) for tok in fline[len("fvector:") :].split())
    if peek() is not None:
        raise ParseError("trailing content after the fvector line")

    if not lattice_rows:
        raise ParseError("empty lattice block")
    for row in lattice_rows + lineality_rows + ray_rows:
        if len(row) != d:
            raise ParseError("row of length %d in a %d-dimensional fan file" % (len(row), d))
    if not cone_rows:
        raise ParseError("fan file lists no maximal cones")
    lattice = Lattice(lattice_rows)
    cones = []
    for idx in cone_rows:
        if any(i < 0 or i >= len(ray_rows) for i in idx):
            raise ParseError("ray index out of range in maximal_cones block")
        cones.append(
            Cone.from_rays(d, [ray_rows[i] for i in idx], lineality_rows)
        )
    fan = Fan.build(cones, lattice)
    if fan.f_vector() != stated:
        raise ParseError(
            "fvector line %s does not match the parsed fan %s"
            % (stated, fan.f_vector())
        )
    return fan
