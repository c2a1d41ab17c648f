"""Matrix term orders: weight rows refined by a lexicographic or graded
reverse lexicographic fallback.

A monomial comparison walks the weight rows first (first strict difference of
inner products decides) and falls through to the fallback order. Orders with
negative weight entries are legitimate for homogeneous ideals; `is_global`
tells whether an order is a genuine term order (1 is the unique minimum) and
therefore safe for arbitrary ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError
from .lattices import vec_primitive
from .poly import Polynomial

_FALLBACKS = ("lex", "grevlex")


@dataclass(frozen=True)
class TermOrder:
    weight_rows: tuple[tuple[int, ...], ...] = ()
    fallback: str = "lex"

    def __post_init__(self):
        if self.fallback not in _FALLBACKS:
            raise DomainError("fallback must be one of %s" % (_FALLBACKS,))
        rows = []
        width = None
        for row in self.weight_rows:
            prim = vec_primitive(tuple(Fraction(x) for x in row))
            if not any(prim):
                raise DomainError("zero weight row in term order")
            if width is None:
                width = len(prim)
            elif len(prim) != width:
                raise DimensionError("weight rows of mixed lengths")
            rows.append(prim)
        object.__setattr__(self, "weight_rows", tuple(rows))

    def with_weights(self, rows) -> "TermOrder":
        """New order comparing by `rows` first, then by this order."""
        return TermOrder(tuple(tuple(r) for r in rows) + self.weight_rows, self.fallback)

    def key(self, mono):
        """Sort key: bigger key = bigger monomial."""
        if self.weight_rows and len(self.weight_rows[0]) != len(mono):
            raise DimensionError(
                "monomial arity %d does not match weight row length %d"
                % (len(mono), len(self.weight_rows[0]))
            )
        dots = tuple(sum(w * e for w, e in zip(row, mono)) for row in self.weight_rows)
        if self.fallback == "lex":
            return dots + tuple(mono)
        return dots + (sum(mono),) + tuple(-e for e in reversed(mono))

    def compare(self, a, b) -> int:
        """-1, 0, or 1 as a is below, equal to, or above b."""
        if len(a) != len(b):
            raise DimensionError("comparing monomials of different arity")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def greater(self, a, b) -> bool:
        return self.compare(a, b) > 0

    def is_global(self, arity: int) -> bool:
        """True if every variable beats 1, so the order is a term order.

        Per variable: the first weight row with a nonzero entry there must be
        positive; if all rows vanish there, both fallbacks are global.
        """
        for row in self.weight_rows:
            if len(row) != arity:
                raise DimensionError("weight row length %d, arity %d" % (len(row), arity))
        for i in range(arity):
            for row in self.weight_rows:
                if row[i] != 0:
                    if row[i] < 0:
                        return False
                    break
        return True


def lex() -> TermOrder:
    return TermOrder((), "lex")


def grevlex() -> TermOrder:
    return TermOrder((), "grevlex")


def leading_term(f: Polynomial, order: TermOrder):
    """The order-maximal (monomial, coefficient) pair of a nonzero polynomial."""
    if f.is_zero:
        raise DomainError("leading term of the zero polynomial")
    mono = max(f.terms, key=order.key)
    return mono, f.terms[mono]
