"""Buchberger's algorithm with matrix term orders, reduced bases, initial
ideals, saturation, and point counting.

Orders with negative weight rows are accepted only for homogeneous ideals
(term-by-term degrees are preserved, so every reduction stays inside finitely
many graded pieces and terminates); for anything else the order must be
global. The reduced basis of (ideal, order) is canonical: monic, mutually
irreducible, sorted by leading monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError, IntegrityError, ParseError, RegionError
from .ordering import TermOrder, grevlex, leading_term, lex
from .poly import (
    Polynomial,
    PolyRing,
    format_polynomial,
    initial_form,
    parse_polynomial,
)

STRATEGIES = ("normal", "first", "degree")


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.generators:
            raise DomainError("an ideal needs at least one generator")
        for g in self.generators:
            if not isinstance(g, Polynomial) or g.ring != self.ring:
                raise DimensionError("generator from a different ring")
            if g.is_zero:
                raise DomainError("zero generator")

    @property
    def arity(self) -> int:
        return self.ring.arity

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple[Polynomial, ...]
    order: TermOrder
    reduced: bool

    def leading_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(leading_term(g, self.order)[0] for g in self.elements)

    def signature(self) -> tuple[tuple[int, ...], ...]:
        """Canonical fingerprint: the sorted leading exponents.

        Reduced bases of the same ideal are equal iff their signatures are
        (initial monomial ideals classify reduced bases).
        """
        return tuple(sorted(self.leading_exponents()))

    def max_degree(self) -> int:
        return max(g.total_degree() for g in self.elements)


def normal_form(f: Polynomial, basis, order: TermOrder) -> Polynomial:
    """Fully reduce f: no term of the result is divisible by any basis lead.

    Ties between applicable reducers go to the lowest basis index.
    """
    if f.is_zero:
        return f
    leads = []
    for g in basis:
        if g.is_zero:
            raise DomainError("zero polynomial in reduction basis")
        if g.ring != f.ring:
            raise DimensionError("reduction basis from a different ring")
        lm, lc = leading_term(g, order)
        leads.append((lm, lc, g))
    keyfn = order.key
    keys: dict = {}

    def k(m):
        v = keys.get(m)
        if v is None:
            v = keys[m] = keyfn(m)
        return v

    work = dict(f.terms)
    out: dict = {}
    while work:
        mono = max(work, key=k)
        coeff = work.pop(mono)
        hit = None
        for lm, lc, g in leads:
            if all(a >= b for a, b in zip(mono, lm)):
                hit = (lm, lc, g)
                break
        if hit is None:
            out[mono] = coeff
            continue
        lm, lc, g = hit
        shift = tuple(a - b for a, b in zip(mono, lm))
        factor = coeff / lc
        for m2, c2 in g.terms.items():
            if m2 == lm:
                continue
            m = tuple(a + b for a, b in zip(m2, shift))
            s = work.get(m, 0) - factor * c2
            if s:
                work[m] = s
            else:
                work.pop(m, None)
    return Polynomial(f.ring, out)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, cf = leading_term(f, order)
    lg, cg = leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    return f.mul_term(tuple(a - b for a, b in zip(lcm, lf)), Fraction(1, 1) / cf) - g.mul_term(
        tuple(a - b for a, b in zip(lcm, lg)), Fraction(1, 1) / cg
    )


def buchberger(ideal: Ideal, order: TermOrder, strategy: str = "normal") -> GroebnerBasis:
    """Groebner basis of the ideal. Not autoreduced; see reduced_groebner_basis.

    strategy picks the next S-pair: "normal" = smallest lcm in the active
    order, "first" = oldest pair, "degree" = smallest lcm total degree.
    Coprimality and chain criteria are applied at selection time.
    """
    if strategy not in STRATEGIES:
        raise DomainError("unknown S-pair strategy %r" % (strategy,))
    if not ideal.is_homogeneous() and not order.is_global(ideal.arity):
        raise RegionError(
            "order with negative weights is only valid for homogeneous ideals"
        )
    basis: list[Polynomial] = []
    for g in ideal.generators:
        if g not in basis:
            basis.append(g)
    leads = [leading_term(g, order)[0] for g in basis]
    keyfn = order.key
    pending = {(i, j) for j in range(len(basis)) for i in range(j)}

    def lcm_of(p):
        a, b = leads[p[0]], leads[p[1]]
        return tuple(max(x, y) for x, y in zip(a, b))

    while pending:
        if strategy == "normal":
            pick = min(pending, key=lambda p: (keyfn(lcm_of(p)), p))
        elif strategy == "degree":
            pick = min(pending, key=lambda p: (sum(lcm_of(p)), keyfn(lcm_of(p)), p))
        else:
            pick = min(pending)
        pending.discard(pick)
        i, j = pick
        li, lj = leads[i], leads[j]
        if all(min(a, b) == 0 for a, b in zip(li, lj)):
            continue  # coprime leads: S-polynomial reduces to zero
        lcm = lcm_of(pick)
        # chain criterion: some k divides the lcm and both sub-pairs settled
        chained = False
        for kk in range(len(basis)):
            if kk == i or kk == j:
                continue
            if all(a <= b for a, b in zip(leads[kk], lcm)):
                p1 = (min(i, kk), max(i, kk))
                p2 = (min(j, kk), max(j, kk))
                if p1 not in pending and p2 not in pending:
                    chained = True
                    break
        if chained:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero:
            continue
        hm, hc = leading_term(h, order)
        if hc != 1:
            h = h * (Fraction(1, 1) / hc)
        new = len(basis)
        basis.append(h)
        leads.append(hm)
        pending.update((kk, new) for kk in range(new))
    return GroebnerBasis(ideal.ring, tuple(basis), order, reduced=False)


def autoreduce(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis: minimal, interreduced, monic, sorted."""
    order = gb.order

    def lead(g):
        return leading_term(g, order)[0]

    # minimalize; sorting by total degree first puts every proper divisor
    # ahead of its multiples regardless of weight signs
    items = sorted(gb.elements, key=lambda g: (sum(lead(g)), order.key(lead(g))))
    kept: list[Polynomial] = []
    kept_leads: list[tuple[int, ...]] = []
    for g in items:
        lm = lead(g)
        if any(all(a >= b for a, b in zip(lm, l)) for l in kept_leads):
            continue
        kept.append(g)
        kept_leads.append(lm)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            h = normal_form(kept[idx], others, order)
            if h != kept[idx]:
                if h.is_zero:
                    raise IntegrityError("minimal basis element reduced to zero")
                kept[idx] = h
                changed = True
    monic = []
    for g in kept:
        lm, lc = leading_term(g, order)
        monic.append(g if lc == 1 else g * (Fraction(1, 1) / lc))
    monic.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return GroebnerBasis(gb.ring, tuple(monic), order, reduced=True)


def reduced_groebner_basis(ideal: Ideal, order: TermOrder, strategy: str = "normal") -> GroebnerBasis:
    return autoreduce(buchberger(ideal, order, strategy))


def initial_ideal(ideal: Ideal, w, fallback: TermOrder | None = None) -> Ideal:
    """Ideal of initial forms in_w, computed from the reduced basis at [w]+fallback."""
    weights = tuple(Fraction(x) for x in w)
    if len(weights) != ideal.arity:
        raise DimensionError("weight vector length %d, arity %d" % (len(weights), ideal.arity))
    if not ideal.is_homogeneous() and any(x < 0 for x in weights):
        raise RegionError("negative weights outside the region of a non-homogeneous ideal")
    order = (fallback if fallback is not None else lex()).with_weights([weights])
    gb = reduced_groebner_basis(ideal, order)
    return Ideal(ideal.ring, tuple(initial_form(g, weights) for g in gb.elements))


def saturate(ideal: Ideal, var_indices=None) -> Ideal:
    """I : (prod of the chosen variables)^infty, via one extra variable.

    Adjoins t, adds t*prod(vars) - 1, eliminates t with a block order whose
    x-block is grevlex; the surviving elements are the reduced grevlex basis
    of the saturation.
    """
    ring = ideal.ring
    r = ring.arity
    idx = sorted(set(range(r) if var_indices is None else var_indices))
    if not idx:
        raise DomainError("saturation needs at least one variable")
    if idx[0] < 0 or idx[-1] >= r:
        raise DimensionError("saturation variable index out of range")
    name = "t"
    n = 0
    while name in ring.names:
        name = "t%d" % n
        n += 1
    big = ring.insert(0, name)
    lifted = [Polynomial(big, {(0,) + m: c for m, c in g.terms.items()}) for g in ideal.generators]
    mono = [0] * big.arity
    mono[0] = 1
    for i in idx:
        mono[i + 1] = 1
    one = (0,) * big.arity
    lifted.append(Polynomial(big, {tuple(mono): Fraction(1), one: Fraction(-1)}))
    elim = TermOrder(((1,) + (0,) * r,), "grevlex")
    gb = reduced_groebner_basis(Ideal(big, tuple(lifted)), elim)
    kept = [
        Polynomial(ring, {m[1:]: c for m, c in g.terms.items()})
        for g in gb.elements
        if all(m[0] == 0 for m in g.terms)
    ]
    if not kept:
        raise IntegrityError("elimination produced no t-free elements for a nonzero ideal")
    return Ideal(ring, tuple(kept))


def count_points(ideal: Ideal) -> int:
    """Length of the projective zero scheme (Hilbert polynomial constant).

    Requires a homogeneous ideal whose projective zero set is finite; the
    count is taken on the monomial initial ideal of the reduced grevlex basis.
    """
    if not ideal.is_homogeneous():
        raise DomainError("count_points needs a homogeneous ideal")
    gb = reduced_groebner_basis(ideal, grevlex())
    leads = list(gb.leading_exponents())
    r = ideal.arity
    # projective dimension check: an independent subset of >= 2 variables
    # (no lead supported inside it) means a positive-dimensional zero set
    best = 0
    for mask in range(1 << r):
        sup = [i for i in range(r) if mask >> i & 1]
        if len(sup) <= best:
            continue
        outside = set(range(r)) - set(sup)
        if all(any(l[i] for i in outside) for l in leads):
            best = len(sup)
    if best >= 2:
        raise DimensionError("zero set is positive-dimensional (projectively)")
    start = sum(sum(l) for l in leads)
    a = _standard_count(leads, r, start)
    b = _standard_count(leads, r, start + 1)
    if a != b:
        raise IntegrityError(
            "standard monomial count did not stabilize at degree %d (%d vs %d)" % (start, a, b)
        )
    return a


def _standard_count(leads, r: int, d: int) -> int:
    count = 0
    mono = [0] * r

    def rec(pos, rem):
        nonlocal count
        if pos == r - 1:
            mono[pos] = rem
            if not any(all(m >= l for m, l in zip(mono, ld)) for ld in leads):
                count += 1
            return
        for e in range(rem + 1):
            mono[pos] = e
            rec(pos + 1, rem - e)

    rec(0, d)
    return count


# ideal file format

def parse_ideal(text: str) -> Ideal:
    """Parse the ideal file format: a 'ring:' header line, one polynomial per
    nonempty line, '#' lines are comments."""
    ring = None
    gens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ring is None:
            if not line.startswith("ring:"):
                raise ParseError("ideal file must start with a 'ring:' header line")
            names = tuple(n.strip() for n in line[len("ring:") :].split(","))
            if any(not n for n in names):
                raise ParseError("empty variable name in ring header")
            ring = PolyRing(names)
            continue
        gens.append(parse_polynomial(ring, line))
    if ring is None:
        raise ParseError("missing 'ring:' header line")
    if not gens:
        raise ParseError("ideal file lists no polynomials")
    return Ideal(ring, tuple(gens))


def format_ideal(ideal: Ideal) -> str:
    lines = ["ring: " + ",".join(ideal.ring.names)]
    lines.extend(format_polynomial(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
