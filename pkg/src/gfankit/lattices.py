"""Exact integer and rational linear algebra.

Everything downstream (term orders, cones, quotient lattices) reduces to a
handful of kernels implemented here: extended gcd, Hermite and Smith normal
forms, integer and rational kernels, and a canonicalized full-rank lattice
class over Q^d. No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DimensionError, DomainError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def dot(u, v):
    if len(u) != len(v):
        raise DimensionError("dot product of vectors of lengths %d and %d" % (len(u), len(v)))
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_primitive(vec) -> tuple[int, ...]:
    """Shortest integer vector with the same direction (positive rational scale).

    The zero vector maps to itself; signs are never flipped.
    """
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // math.gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fracs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints)


def mat_vec(rows, v):
    """Apply the linear map given by matrix rows: returns (row . v for each row)."""
    return tuple(dot(row, v) for row in rows)


def hnf_rows(rows) -> list[tuple[int, ...]]:
    """Row Hermite normal form of an integer matrix.

    Returns the nonzero rows in echelon shape: pivot columns strictly
    increasing, pivots positive, entries above each pivot reduced into
    [0, pivot). The integer row span is preserved exactly, so this is a
    canonical basis of the row lattice.
    """
    mat = [list(map(int, row)) for row in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    for row in mat:
        if len(row) != ncols:
            raise DimensionError("ragged matrix passed to hnf_rows")
    top = 0
    for col in range(ncols):
        # Euclid on the column below `top` until one nonzero entry remains
        while True:
            live = [i for i in range(top, len(mat)) if mat[i][col] != 0]
            if len(live) <= 1:
                break
            i = min(live, key=lambda k: abs(mat[k][col]))
            for k in live:
                if k != i:
                    q = mat[k][col] // mat[i][col]
                    if q:
                        mat[k] = [a - q * b for a, b in zip(mat[k], mat[i])]
        live = [i for i in range(top, len(mat)) if mat[i][col] != 0]
        if not live:
            continue
        i = live[0]
        mat[top], mat[i] = mat[i], mat[top]
        if mat[top][col] < 0:
            mat[top] = [-a for a in mat[top]]
        p = mat[top][col]
        for k in range(top):
            q = mat[k][col] // p  # floor division: remainder lands in [0, p)
            if q:
                mat[k] = [a - q * b for a, b in zip(mat[k], mat[top])]
        top += 1
    return [tuple(row) for row in mat[:top]]


def kernel_int(rows, width: int) -> list[tuple[int, ...]]:
    """HNF basis of the integer right kernel {v in Z^width : row . v = 0}.

    The kernel of an integer matrix is saturated, so this doubles as
    (rational kernel) intersect Z^width.
    """
    mat = [list(map(int, r)) for r in rows]
    for r in mat:
        if len(r) != width:
            raise DimensionError("constraint width mismatch in kernel_int")
    m = len(mat)
    if m == 0:
        return [tuple(int(i == j) for j in range(width)) for i in range(width)]
    # HNF of [A^T | I]; rows whose A^T part vanished record kernel vectors.
    work = []
    for j in range(width):
        left = [mat[i][j] for i in range(m)]
        right = [int(k == j) for k in range(width)]
        work.append(left + right)
    ker = [row[m:] for row in hnf_rows(work) if not any(row[:m])]
    return hnf_rows(ker)


def snf_divisors(rows) -> list[int]:
    """Positive elementary divisors d_1 | d_2 | ... of an integer matrix."""
    mat = [list(map(int, r)) for r in rows]
    if not mat or not mat[0]:
        return []
    m, n = len(mat), len(mat[0])
    divisors = []
    t = 0
    while t < m and t < n:
        best = None
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(mat[i][j])
                if v and (best is None or v < best):
                    best, pos = v, (i, j)
        if pos is None:
            break
        mat[t], mat[pos[0]] = mat[pos[0]], mat[t]
        if pos[1] != t:
            for row in mat:
                row[t], row[pos[1]] = row[pos[1]], row[t]
        while True:
            for i in range(t + 1, m):
                while mat[i][t]:
                    q = mat[i][t] // mat[t][t]
                    if q:
                        mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
                    if mat[i][t]:
                        mat[t], mat[i] = mat[i], mat[t]
            for j in range(t + 1, n):
                while mat[t][j]:
                    q = mat[t][j] // mat[t][t]
                    if q:
                        for row in mat:
                            row[j] -= q * row[t]
                    if mat[t][j]:
                        for row in mat:
                            row[t], row[j] = row[j], row[t]
            col_clean = all(mat[i][t] == 0 for i in range(t + 1, m))
            row_clean = all(mat[t][j] == 0 for j in range(t + 1, n))
            if not (col_clean and row_clean):
                continue
            corner = abs(mat[t][t])
            bad = None
            for i in range(t + 1, m):
                if any(mat[i][j] % corner for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            # fold the offending row in so the corner gcd can shrink
            mat[t] = [a + b for a, b in zip(mat[t], mat[bad])]
        divisors.append(abs(mat[t][t]))
        t += 1
    return divisors


def rref(rows) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rational_kernel(rows, width: int) -> list[tuple[int, ...]]:
    """Basis of the rational right kernel, as primitive integer vectors."""
    for r in rows:
        if len(r) != width:
            raise DimensionError("constraint width mismatch in rational_kernel")
    red, pivots = rref(rows)
    basis = []
    for fc in range(width):
        if fc in pivots:
            continue
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(vec_primitive(v))
    return basis


def det(rows) -> Fraction:
    mat = [[Fraction(x) for x in row] for row in rows]
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise DimensionError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            mat[c], mat[pr] = mat[pr], mat[c]
            result = -result
        result *= mat[c][c]
        inv = mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                f = mat[i][c] / inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return result


def mat_inverse(rows) -> list[tuple[Fraction, ...]]:
    """Inverse of a square rational matrix via Gauss-Jordan elimination."""
    n = len(rows)
    mat = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    if any(len(r) != 2 * n for r in mat):
        raise DimensionError("inverse of a non-square matrix")
    for c in range(n):
        pr = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pr is None:
            raise DomainError("matrix is singular")
        mat[c], mat[pr] = mat[pr], mat[c]
        inv = mat[c][c]
        mat[c] = [x / inv for x in mat[c]]
        for i in range(n):
            if i != c and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return [tuple(row[n:]) for row in mat]


def chart_projection(arity: int, chart: int) -> list[tuple[int, ...]]:
    """Rows of the map dropping one distinguished coordinate.

    Sends n to (n_j - n_chart) for j != chart in increasing index order; the
    kernel is the all-ones line.
    """
    if not 0 <= chart < arity:
        raise DimensionError("chart index %d out of range for arity %d" % (chart, arity))
    rows = []
    for j in range(arity):
        if j == chart:
            continue
        row = [0] * arity
        row[j] = 1
        row[chart] = -1
        rows.append(tuple(row))
    return rows


def saturated_basis(span_rows, width: int) -> list[tuple[int, ...]]:
    """Canonical HNF basis of (rational span of the rows) intersect Z^width.

    Double-kernel trick: the orthogonal complement of the span is an integer
    kernel, and the kernel of THAT is the saturation of the original span.
    """
    perp = rational_kernel(span_rows, width)
    return kernel_int(perp, width)


class Lattice:
    """Full-rank lattice in Q^d with a canonical basis.

    Canonical form: clear denominators with one global lcm, take the integer
    row Hermite form, scale back. Equal lattices therefore compare equal
    field-wise. Not restricted to sublattices of Z^d: quotient lattices here
    typically contain Z^d strictly.
    """

    __slots__ = ("dim", "basis", "_inv")

    def __init__(self, basis):
        rows = [tuple(Fraction(x) for x in row) for row in basis]
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise DimensionError("lattice basis must be a nonempty square matrix")
        scale = 1
        for row in rows:
            for x in row:
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        ints = [[int(x * scale) for x in row] for row in rows]
        h = hnf_rows(ints)
        if len(h) != d:
            raise DomainError("lattice basis must have full rank")
        self.dim = d
        self.basis = tuple(tuple(Fraction(x, scale) for x in row) for row in h)
        self._inv = mat_inverse(self.basis)

    @classmethod
    def standard(cls, d: int) -> "Lattice":
        return cls([[int(i == j) for j in range(d)] for i in range(d)])

    @classmethod
    def spanned_by(cls, rows, dim: int) -> "Lattice":
        """Lattice generated by possibly redundant rational rows (must span Q^dim)."""
        fr = [[Fraction(x) for x in row] for row in rows]
        scale = 1
        for row in fr:
            for x in row:
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        h = hnf_rows([[int(x * scale) for x in row] for row in fr])
        if len(h) != dim:
            raise DomainError("generators span a rank-%d lattice, need %d" % (len(h), dim))
        return cls([[Fraction(x, scale) for x in row] for row in h])

    def coords(self, v) -> tuple[Fraction, ...]:
        """Coordinates c with c . basis = v."""
        vv = [Fraction(x) for x in v]
        if len(vv) != self.dim:
            raise DimensionError("vector length %d, lattice dimension %d" % (len(vv), self.dim))
        return tuple(
            sum(vv[i] * self._inv[i][j] for i in range(self.dim)) for j in range(self.dim)
        )

    def from_coords(self, c):
        if len(c) != self.dim:
            raise DimensionError("coordinate length mismatch")
        return tuple(
            sum(Fraction(c[i]) * self.basis[i][j] for i in range(self.dim))
            for j in range(self.dim)
        )

    def contains(self, v) -> bool:
        return all(x.denominator == 1 for x in self.coords(v))

    def covolume(self) -> Fraction:
        return abs(det(self.basis))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return "Lattice(%r)" % (self.basis,)
