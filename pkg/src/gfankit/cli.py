"""Command-line driver.

Subcommands mirror the pipeline: orbit-ideal writes the binomial ideal of a
diagonal group orbit, fan computes a Groebner fan (optionally the affine
restriction at a chart), project pushes a fan into quotient coordinates,
stats and state-polytope report invariants, render draws 2-dimensional fans
as SVG. All tabular output is exact: integers and p/q rationals, never
decimals. Runs are deterministic; repeated invocations produce byte-equal
files.

Exit codes: 0 success, 1 usage or file-system problem, 2 mathematical domain
failure, 3 parse failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .errors import CapabilityError, DimensionError, GfanError, ParseError
from .fan_engine import (
    affine_fan_from_homogenization,
    dehomogenized_ideal,
    format_bases,
    groebner_fan,
    state_polytope,
)
from .fans import Fan, format_fan, normal_fan, parse_fan, project_fan
from .groebner import format_ideal, parse_ideal
from .lattices import Lattice, chart_projection
from .orbit import lattice_ideal, parse_group, quotient_lattice


class UsageError(Exception):
    """Bad flags or arguments; reported on stderr with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _deliver(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_orbit_ideal(args) -> None:
    group = parse_group(args.group)
    _deliver(args.output, format_ideal(lattice_ideal(group)))


def _chart_index(names: tuple[str, ...], chart: str | None) -> int:
    if chart is None:
        return len(names) - 1
    if chart not in names:
        raise UsageError(
            "--chart %r is not a ring variable (ring: %s)" % (chart, ",".join(names))
        )
    return names.index(chart)


def _cmd_fan(args) -> None:
    ideal = parse_ideal(_read_text(args.ideal))
    if args.chart is not None and not args.affine:
        raise UsageError("--chart is only meaningful together with --affine")
    if args.affine:
        index = _chart_index(ideal.ring.names, args.chart)
        gfan = affine_fan_from_homogenization(dehomogenized_ideal(ideal, index), index)
    else:
        gfan = groebner_fan(ideal)
    _deliver(args.output, format_fan(gfan.fan))
    if args.output is not None:
        _deliver(args.output + ".bases", format_bases(gfan))


def _cmd_project(args) -> None:
    fan = parse_fan(_read_text(args.fan))
    r = fan.ambient_dim
    if args.group is not None:
        group = parse_group(args.group)
        if group.arity != r:
            raise DimensionError(
                "group acts on %d coordinates, fan has ambient dimension %d"
                % (group.arity, r)
            )
        lattice, rows = quotient_lattice(group)
    else:
        lattice, rows = Lattice.standard(r - 1), chart_projection(r, r - 1)
    _deliver(args.output, format_fan(project_fan(fan, rows, lattice)))


def _cmd_stats(args) -> None:
    fan = parse_fan(_read_text(args.fan))
    n = len(fan.maximal_cones)
    sys.stdout.write("f-vector: %s\n" % " ".join(str(x) for x in fan.f_vector()))
    sys.stdout.write("simplicial: %d/%d\n" % (fan.simplicial_count(), n))
    sys.stdout.write("smooth: %d/%d\n" % (fan.smooth_count(), n))
    sys.stdout.write("complete: %s\n" % ("yes" if fan.is_complete() else "no"))


def _cmd_state_polytope(args) -> None:
    ideal = parse_ideal(_read_text(args.ideal))
    gfan = groebner_fan(ideal)
    polytope, degree = state_polytope(gfan, args.degree)
    r = ideal.arity
    lattice, rows = Lattice.standard(r - 1), chart_projection(r, r - 1)
    projected = project_fan(gfan.fan, rows, lattice)
    verdict = normal_fan(polytope, lattice) == projected
    sys.stdout.write("degree: %d\n" % degree)
    sys.stdout.write("vertices: %d\n" % len(polytope.vertices))
    for v in polytope.vertices:
        sys.stdout.write(" ".join(str(Fraction(x)) for x in v) + "\n")
    sys.stdout.write(
        "normal_fan_equals_projection: %s\n" % ("yes" if verdict else "no")
    )


# SVG rendering of planar fans

_FILLS = (
    "#c9e4f5",
    "#f9dcc4",
    "#d4edc9",
    "#eed5ee",
    "#faf0c0",
    "#d9d4f7",
    "#c8ece6",
    "#f6d3da",
)


def _unit(ray) -> tuple[float, float]:
    n = math.hypot(ray[0], ray[1])
    return (ray[0] / n, ray[1] / n)


def _wedge_path(r1, r2) -> str:
    """Circular wedge between the unit vectors of two rays of a strongly
    convex cone (angle strictly below pi, so the short arc is correct)."""
    a1, a2 = (math.atan2(r[1], r[0]) for r in (r1, r2))
    if (a2 - a1) % (2 * math.pi) > math.pi:
        r1, r2 = r2, r1
    u1, u2 = _unit(r1), _unit(r2)
    return "M 0 0 L %.5f %.5f A 1 1 0 0 1 %.5f %.5f Z" % (u1 + u2)


def _unit_box_points(lattice: Lattice):
    """Lattice points in the half-open unit square, smallest denominators
    that can occur given the basis."""
    den = 1
    for row in lattice.basis:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    pts = []
    for a in range(den):
        for b in range(den):
            v = (Fraction(a, den), Fraction(b, den))
            if lattice.contains(v):
                pts.append(v)
    return pts


def render_svg(fan: Fan) -> str:
    """Planar picture of a fan: unit ray segments, shaded maximal cones,
    dots on the lattice points of the fundamental square."""
    if fan.ambient_dim != 2:
        raise CapabilityError(
            "SVG rendering covers 2-dimensional fans only; ambient dimension is %d"
            % fan.ambient_dim
        )
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.3 -1.3 2.6 2.6" '
        'width="520" height="520">',
        '<g transform="scale(1,-1)">',
    ]
    for i, cone in enumerate(fan.maximal_cones):
        if len(cone.rays) == 2:
            lines.append(
                '<path d="%s" fill="%s" stroke="none"/>'
                % (_wedge_path(*cone.rays), _FILLS[i % len(_FILLS)])
            )
    rays = sorted({r for c in fan.maximal_cones for r in c.rays})
    for ray in rays:
        x, y = _unit(ray)
        lines.append(
            '<line x1="0" y1="0" x2="%.5f" y2="%.5f" stroke="#333333" '
            'stroke-width="0.015"/>' % (x, y)
        )
    for p in _unit_box_points(fan.lattice):
        lines.append(
            '<circle cx="%.5f" cy="%.5f" r="0.025" fill="#b3261e"/>'
            % (float(p[0]), float(p[1]))
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_render(args) -> None:
    fan = parse_fan(_read_text(args.fan))
    _deliver(args.output, render_svg(fan))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gfk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("orbit-ideal", help="write the orbit ideal of a diagonal group")
    p.add_argument("--group", required=True, help='group text, e.g. "5:1,3,0"')
    p.add_argument("-o", "--output", help="ideal file path (default: stdout)")
    p.set_defaults(func=_cmd_orbit_ideal)

    p = sub.add_parser("fan", help="compute the Groebner fan of an ideal file")
    p.add_argument("ideal", help="ideal file")
    p.add_argument("--affine", action="store_true", help="restrict to a chart")
    p.add_argument("--chart", help="chart variable name (default: last)")
    p.add_argument(
        "-o", "--output", help="fan file path; also writes <path>.bases (default: stdout)"
    )
    p.set_defaults(func=_cmd_fan)

    p = sub.add_parser("project", help="project a fan into quotient coordinates")
    p.add_argument("fan", help="fan file")
    p.add_argument("--group", help="group text; omitted means the standard lattice")
    p.add_argument("-o", "--output", help="fan file path (default: stdout)")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("stats", help="print counts and flags of a fan file")
    p.add_argument("fan", help="fan file")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("state-polytope", help="state polytope and normal-fan check")
    p.add_argument("ideal", help="ideal file (homogeneous)")
    p.add_argument("--degree", type=int, help="truncation degree (default: automatic)")
    p.set_defaults(func=_cmd_state_polytope)

    p = sub.add_parser("render", help="draw a 2-dimensional fan as SVG")
    p.add_argument("fan", help="fan file")
    p.add_argument("-o", "--output", help="SVG file path (default: stdout)")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except UsageError as e:
        sys.stderr.write("usage error: %s\n" % e)
        return 1
    except OSError as e:
        sys.stderr.write("file error: %s\n" % e)
        return 1
    except ParseError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return 3
    except GfanError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
