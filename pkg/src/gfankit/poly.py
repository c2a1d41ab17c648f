"""Sparse multivariate polynomials over Q with exact arithmetic.

Monomials are exponent tuples of fixed arity; a polynomial is a map from
monomial to nonzero rational coefficient. The text grammar (parse and print
round-trip exactly) is:

    poly   := [sign] term ((+|-) term)*
    term   := factor (*? factor)*
    factor := integer[/integer] | variable[^integer]

Printing emits terms in descending lexicographic order of exponents with
explicit '*' and '^'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError, ParseError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over Q, identified by its ordered variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise DomainError("a polynomial ring needs at least one variable")
        for n in self.names:
            if not _NAME_RE.match(n):
                raise ParseError("invalid variable name %r" % (n,))
        if len(set(self.names)) != len(self.names):
            raise DomainError("duplicate variable names: %r" % (self.names,))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError("unknown variable %r in ring %s" % (name, ",".join(self.names)))

    def drop(self, index: int) -> "PolyRing":
        if not 0 <= index < self.arity:
            raise DimensionError("variable index %d out of range" % index)
        return PolyRing(self.names[:index] + self.names[index + 1 :])

    def insert(self, index: int, name: str) -> "PolyRing":
        if not 0 <= index <= self.arity:
            raise DimensionError("variable index %d out of range" % index)
        if name in self.names:
            raise DomainError("variable %r already present" % name)
        return PolyRing(self.names[:index] + (name,) + self.names[index:])


class Polynomial:
    """Immutable sparse polynomial. Do not mutate `terms` after construction."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms):
        clean = {}
        for mono, coeff in terms.items():
            c = Fraction(coeff)
            if c == 0:
                continue
            m = tuple(int(e) for e in mono)
            if len(m) != ring.arity:
                raise DimensionError(
                    "monomial arity %d does not match ring arity %d" % (len(m), ring.arity)
                )
            if any(e < 0 for e in m):
                raise DomainError("negative exponent in monomial %r" % (m,))
            clean[m] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, ring: PolyRing) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: PolyRing, c) -> "Polynomial":
        return cls(ring, {(0,) * ring.arity: Fraction(c)})

    @classmethod
    def variable(cls, ring: PolyRing, index: int) -> "Polynomial":
        mono = tuple(int(i == index) for i in range(ring.arity))
        return cls(ring, {mono: Fraction(1)})

    @classmethod
    def term(cls, ring: PolyRing, mono, coeff=1) -> "Polynomial":
        return cls(ring, {tuple(mono): Fraction(coeff)})

    # predicates and degrees

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            raise DomainError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # arithmetic

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise DimensionError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.ring)
            return Polynomial(self.ring, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.constant(self.ring, 1)
        for _ in range(n):
            result = result * self
        return result

    def mul_term(self, mono, coeff) -> "Polynomial":
        """Multiply by a single term; faster than building a Polynomial first."""
        mono = tuple(mono)
        coeff = Fraction(coeff)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
        )

    # comparisons

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return "Polynomial(%s)" % format_polynomial(self)


def initial_form(f: Polynomial, w) -> Polynomial:
    """Sum of the terms of f whose w-weight is maximal."""
    if f.is_zero:
        raise DomainError("initial form of the zero polynomial")
    weights = [Fraction(x) for x in w]
    if len(weights) != f.ring.arity:
        raise DimensionError("weight vector length %d, ring arity %d" % (len(weights), f.ring.arity))
    best = None
    kept: dict = {}
    for m, c in f.terms.items():
        val = sum(weights[i] * m[i] for i in range(len(m)))
        if best is None or val > best:
            best = val
            kept = {m: c}
        elif val == best:
            kept[m] = c
    return Polynomial(f.ring, kept)


def homogenize(f: Polynomial, index: int, name: str) -> Polynomial:
    """Insert a variable at `index` and pad every term up to the max degree."""
    ring = f.ring.insert(index, name)
    if f.is_zero:
        return Polynomial.zero(ring)
    d = f.total_degree()
    out = {}
    for m, c in f.terms.items():
        out[m[:index] + (d - sum(m),) + m[index:]] = c
    return Polynomial(ring, out)


def dehomogenize(f: Polynomial, index: int) -> Polynomial:
    """Set the variable at `index` to 1 and drop its coordinate."""
    ring = f.ring.drop(index)
    out: dict = {}
    for m, c in f.terms.items():
        key = m[:index] + m[index + 1 :]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return Polynomial(ring, out)


# text format

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError("unexpected character %r at position %d" % (rest[0], pos))
        if m.group("int") is not None:
            tokens.append(("int", m.group("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    terms: dict = {}
    i = 0
    sign = 1
    if tokens[0] == ("op", "+"):
        i = 1
    elif tokens[0] == ("op", "-"):
        sign, i = -1, 1
    while True:
        coeff, mono, i = _parse_term(ring, tokens, i)
        s = terms.get(mono, 0) + sign * coeff
        if s:
            terms[mono] = s
        else:
            terms.pop(mono, None)
        if i == len(tokens):
            break
        kind, val = tokens[i]
        if kind != "op" or val not in "+-":
            raise ParseError("expected '+' or '-' before %r" % (val,))
        sign = 1 if val == "+" else -1
        i += 1
    return Polynomial(ring, terms)


def _split_variables(ring: PolyRing, run: str):
    """Factor an identifier run into (variable index, exponent) pairs.

    Exact ring names pass through; otherwise the run is consumed left to
    right by longest matching ring name, each optionally followed by digits:
    with ring x,y,z the run "x2yz" means x^2*y*z.
    """
    try:
        return [(ring.index(run), 1)]
    except ParseError:
        pass
    by_length = sorted(ring.names, key=len, reverse=True)
    out = []
    pos = 0
    while pos < len(run):
        for name in by_length:
            if run.startswith(name, pos):
                pos += len(name)
                start = pos
                while pos < len(run) and run[pos].isdigit():
                    pos += 1
                out.append((ring.index(name), int(run[start:pos]) if pos > start else 1))
                break
        else:
            raise ParseError("unknown variable %r in ring %s" % (run, ",".join(ring.names)))
    return out


def _parse_term(ring: PolyRing, tokens, i):
    coeff = Fraction(1)
    expo = [0] * ring.arity
    need_factor = True
    while True:
        if i == len(tokens):
            if need_factor:
                raise ParseError("expected a factor at end of input")
            break
        kind, val = tokens[i]
        if kind == "int":
            i += 1
            num = int(val)
            if i < len(tokens) and tokens[i] == ("op", "/"):
                i += 1
                if i == len(tokens) or tokens[i][0] != "int":
                    raise ParseError("expected an integer denominator")
                den = int(tokens[i][1])
                i += 1
                if den == 0:
                    raise ParseError("zero denominator")
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        elif kind == "name":
            # a run like "xy2z" is a product; a trailing exponent binds to
            # the last variable of the run
            factors = _split_variables(ring, val)
            i += 1
            e = 1
            if i < len(tokens) and tokens[i] == ("op", "^"):
                i += 1
                if i == len(tokens) or tokens[i][0] != "int":
                    raise ParseError("expected an integer exponent after '^'")
                e = int(tokens[i][1])
                i += 1
            for idx, k in factors[:-1]:
                expo[idx] += k
            idx, k = factors[-1]
            expo[idx] += k * e
        else:
            if need_factor:
                raise ParseError("expected a factor, found %r" % (val,))
            break
        need_factor = False
        if i < len(tokens) and tokens[i] == ("op", "*"):
            i += 1
            need_factor = True
    return coeff, tuple(expo), i


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_polynomial(f: Polynomial, key=None) -> str:
    """Render a polynomial; `key` overrides the default descending
    exponent order of the terms (pass a term-order key to put leads first)."""
    if f.is_zero:
        return "0"
    parts = []
    for mono in sorted(f.terms, key=key, reverse=True):
        c = f.terms[mono]
        factors = []
        for name, e in zip(f.ring.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
