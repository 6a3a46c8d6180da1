"""Ordinary and exponential Riordan arrays.

An array is a pair of series (g, f) with g(0) = 1, f(0) = 0, f'(0) != 0.
Entries of the lower-triangular matrix are [x^n] g * f^k for the ordinary
kind and (n!/k!) [x^n] g * f^k for the exponential kind.  The module
computes triangle slices, inverses, production matrices (by exact linear
algebra on the triangle and, independently, from the Z and A series),
and reconstructs arrays from (Z, A) data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .dhankel import SequenceFamily
from .errors import PreconditionError, TruncationError
from .series import EGF, OGF, Series, exp_series, format_rational

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"

_SERIES_KIND = {ORDINARY: OGF, EXPONENTIAL: EGF}


@dataclass(frozen=True)
class RiordanArray:
    """A Riordan array (g, f) of either kind, truncated to a finite order."""

    kind: str
    g: Series
    f: Series

    def __post_init__(self):
        if self.kind not in (ORDINARY, EXPONENTIAL):
            raise PreconditionError(f"unknown array kind {self.kind!r}")
        expected = _SERIES_KIND[self.kind]
        if self.g.kind != expected or self.f.kind != expected:
            raise PreconditionError(
                f"a {self.kind} array needs {expected} series "
                f"(got g: {self.g.kind}, f: {self.f.kind})")
        if self.order < 2:
            raise PreconditionError("array order must be at least 2")
        if self.g.coeff(0) != 1:
            raise PreconditionError("g must have constant term 1")
        if self.f.coeff(0) != 0:
            raise PreconditionError("f must have zero constant term")
        if self.f.coeff(1) == 0:
            raise PreconditionError("f must have a nonzero linear coefficient")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)


@dataclass(frozen=True)
class TriangleSlice:
    """A finite lower-triangular slice; row n holds entries for columns 0..n."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise PreconditionError(f"row {n} must have {n + 1} entries")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if not (0 <= n < self.size):
            raise TruncationError(f"row {n} outside the computed slice")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def column(self, k: int, length: int | None = None) -> list[Fraction]:
        length = self.size if length is None else length
        return [self.entry(n, k) for n in range(length)]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.rows]


@dataclass(frozen=True)
class ProductionMatrix:
    """Lower-Hessenberg production data: row n stores columns 0..n+1.

    Equality compares the entries only; the optional Z and A series are
    bookkeeping for matrices that were built from band data.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    z: Series | None = field(default=None, compare=False)
    a: Series | None = field(default=None, compare=False)

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 2:
                raise PreconditionError(f"production row {n} must have {n + 2} entries")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if not (0 <= n < self.size):
            raise TruncationError(f"production row {n} outside the computed slice")
        if k < 0 or k > n + 1:
            return Fraction(0)
        return self.rows[n][k]

    def band(self, offset: int) -> list[Fraction]:
        """Entries p[k+offset][k]; offset -1 is the superdiagonal, 0 the
        diagonal, positive offsets the lower bands."""
        if offset < -1:
            raise PreconditionError("offset below -1 has no entries")
        return [self.rows[k + offset][k]
                for k in range(max(0, -offset), self.size - offset)]

    def max_band_offset(self) -> int:
        """Largest offset whose band contains a nonzero entry (0 if none do)."""
        best = 0
        for n, row in enumerate(self.rows):
            for k in range(n + 2):
                if row[k] != 0 and n - k > best:
                    best = n - k
        return best

    def square(self, size: int | None = None) -> list[list[Fraction]]:
        """A size-by-size dense slice (the last row's superdiagonal entry is
        outside the square and gets clipped, matching how such matrices are
        usually displayed)."""
        size = self.size if size is None else size
        if size > self.size:
            raise TruncationError(f"only {self.size} production rows available")
        return [[self.entry(n, k) for k in range(size)] for n in range(size)]

    def to_json(self, size: int | None = None) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.square(size)]


# ----- entries and triangles --------------------------------------------------

def entry(array: RiordanArray, n: int, k: int) -> Fraction:
    """The (n, k) entry, exact."""
    if not (0 <= k <= n < array.order):
        raise TruncationError(
            f"entry ({n}, {k}) outside the triangle of order {array.order}")
    value = (array.g * array.f ** k).coeff(n)
    if array.kind == EXPONENTIAL:
        value *= Fraction(factorial(n), factorial(k))
    return value


def triangle(array: RiordanArray, size: int | None = None) -> TriangleSlice:
    """All entries with n, k < size (default: the array's order)."""
    size = array.order if size is None else size
    if size > array.order:
        raise TruncationError(
            f"triangle of size {size} requested from an order-{array.order} array")
    g = array.g.truncate(size)
    f = array.f.truncate(size)
    col = g
    columns = [col]
    for _ in range(1, size):
        col = col * f
        columns.append(col)
    expo = array.kind == EXPONENTIAL
    rows = []
    for n in range(size):
        row = []
        for k in range(n + 1):
            v = columns[k].coeff(n)
            if expo:
                v *= Fraction(factorial(n), factorial(k))
            row.append(v)
        rows.append(tuple(row))
    return TriangleSlice(tuple(rows))


def inverse(array: RiordanArray) -> RiordanArray:
    """The inverse array (1/g(fbar), fbar), fbar the compositional inverse."""
    fbar = array.f.reversion()
    g_inv = Series.one(array.order, array.g.kind).div(array.g.compose(fbar))
    return RiordanArray(array.kind, g_inv, fbar)


# ----- production matrices ----------------------------------------------------

def production_via_matrix(array: RiordanArray, size: int | None = None) -> ProductionMatrix:
    """Production matrix recovered from the triangle by forward substitution.

    An order-N triangle determines N-1 production rows: row n of the result
    satisfies (row n+1 of the triangle) = sum_j T[n][j] * P[j][...].
    """
    max_size = array.order - 1
    size = max_size if size is None else size
    if size > max_size:
        raise TruncationError(
            f"production of size {size} needs an array of order {size + 1}")
    t = triangle(array, size + 1)
    rows: list[tuple[Fraction, ...]] = []
    for i in range(size):
        width = i + 2
        acc = [t.entry(i + 1, k) for k in range(width)]
        for j in range(i):
            tij = t.entry(i, j)
            if tij:
                prev = rows[j]
                for k in range(min(width, len(prev))):
                    acc[k] -= tij * prev[k]
        diag = t.entry(i, i)
        rows.append(tuple(v / diag for v in acc))
    return ProductionMatrix(tuple(rows))


def production_from_za(kind: str, z: Series, a: Series, size: int) -> ProductionMatrix:
    """Production matrix filled directly from Z and A coefficient data.

    Ordinary: column 0 holds the Z coefficients and column k >= 1 holds
    A[n-k+1].  Exponential: p[n][k] = (n!/k!) Z[n-k] + (n!/(k-1)!) A[n-k+1],
    the second term absent for k = 0.
    """
    if kind not in (ORDINARY, EXPONENTIAL):
        raise PreconditionError(f"unknown array kind {kind!r}")
    if z.order < size or a.order < size:
        raise TruncationError(
            f"Z and A must carry at least {size} coefficients for {size} rows")

    def zc(i: int) -> Fraction:
        return z.coeffs[i] if 0 <= i < z.order else Fraction(0)

    def ac(i: int) -> Fraction:
        return a.coeffs[i] if 0 <= i < a.order else Fraction(0)

    rows = []
    for n in range(size):
        row = []
        for k in range(n + 2):
            if kind == ORDINARY:
                row.append(zc(n) if k == 0 else ac(n - k + 1))
            else:
                v = Fraction(factorial(n), factorial(k)) * zc(n - k)
                if k >= 1:
                    v += Fraction(factorial(n), factorial(k - 1)) * ac(n - k + 1)
                row.append(v)
        rows.append(tuple(row))
    return ProductionMatrix(tuple(rows), z=z, a=a)


def production_via_series(array: RiordanArray, size: int | None = None) -> ProductionMatrix:
    """Production matrix from the array's Z and A series (independent of the
    triangle route; the two must agree entrywise)."""
    max_size = array.order - 1
    size = max_size if size is None else size
    if size > max_size:
        raise TruncationError(
            f"production of size {size} needs an array of order {size + 1}")
    z, a = za_sequences(array)
    return production_from_za(array.kind, z.truncate(size) if z.order > size else z,
                              a.truncate(size) if a.order > size else a, size)


def za_sequences(array: RiordanArray) -> tuple[Series, Series]:
    """The (Z, A) series of the array, one order below the array order."""
    fbar = array.f.reversion()
    if array.kind == EXPONENTIAL:
        a = Series.one(array.order - 1, array.f.kind).div(fbar.derivative())
        g_at = array.g.compose(fbar)
        z = array.g.derivative().compose(fbar.truncate(array.order - 1)).div(
            g_at.truncate(array.order - 1))
        return z, a
    # ordinary: A = x / fbar, Z = (1 - 1/g(fbar)) / fbar
    fbar_over_x = fbar.div_x()
    a = Series.one(array.order - 1, array.f.kind).div(fbar_over_x)
    g_at = array.g.compose(fbar)
    one = Series.one(array.order, array.g.kind)
    numer = one - one.div(g_at)           # constant term 0 since g(0) = 1
    z = numer.div_x().div(fbar_over_x)
    return z, a


# ----- construction from (Z, A) -----------------------------------------------

def _polynomial_at(s: Series, kind: str, order: int) -> Series:
    """Read a series' coefficients as polynomial data at a target order."""
    return Series(s.coeffs, kind, order=order)


def from_za(kind: str, z: Series, a: Series, order: int) -> RiordanArray:
    """The array whose production matrix has the given Z and A data
    (the inverse of the coefficient array; its columns carry the moments).

    Z and A are read as polynomials: coefficients beyond their stored order
    are taken to be zero.
    """
    if kind not in (ORDINARY, EXPONENTIAL):
        raise PreconditionError(f"unknown array kind {kind!r}")
    if a.coeff(0) == 0:
        raise PreconditionError("A must have a nonzero constant term")
    skind = _SERIES_KIND[kind]
    work = order + 2
    zz = _polynomial_at(z, skind, work)
    aa = _polynomial_at(a, skind, work)
    one = Series.one(work, skind)
    if kind == ORDINARY:
        u = one.div(aa).mul_x()                  # x / A
        f = u.reversion()
        g = one.div(one - zz.compose(f).mul_x())
    else:
        fbar = one.div(aa).integrate()
        f = fbar.reversion()
        g = exp_series(zz.div(aa).integrate().compose(f))
    return RiordanArray(kind, g.truncate(order), f.truncate(order))


def coefficient_array_from_za(kind: str, z: Series, a: Series, order: int) -> RiordanArray:
    """The coefficient array for the given (Z, A) data; this is exactly the
    inverse of :func:`from_za` with the same arguments."""
    if kind not in (ORDINARY, EXPONENTIAL):
        raise PreconditionError(f"unknown array kind {kind!r}")
    if a.coeff(0) == 0:
        raise PreconditionError("A must have a nonzero constant term")
    skind = _SERIES_KIND[kind]
    work = order + 2
    zz = _polynomial_at(z, skind, work)
    aa = _polynomial_at(a, skind, work)
    one = Series.one(work, skind)
    if kind == ORDINARY:
        g = one - zz.div(aa).mul_x()             # 1 - x Z / A
        f = one.div(aa).mul_x()                  # x / A
    else:
        g = one.div(exp_series(zz.div(aa).integrate()))
        f = one.div(aa).integrate()
    return RiordanArray(kind, g.truncate(order), f.truncate(order))


# ----- row generation and column sums ------------------------------------------

def generate_from_production(production: ProductionMatrix, order: int) -> TriangleSlice:
    """Rebuild a triangle row by row: row 0 is (1, 0, ...), and each next row
    is the vector-matrix product of the previous row with the production
    matrix."""
    if production.size < order - 1:
        raise TruncationError(
            f"{order} rows need a production matrix of size {order - 1}, "
            f"have {production.size}")
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(order - 1):
        prev = rows[n]
        nxt = []
        for k in range(n + 2):
            acc = Fraction(0)
            for j in range(max(0, k - 1), n + 1):
                pj = prev[j]
                if pj:
                    acc += pj * production.entry(j, k)
            nxt.append(acc)
        rows.append(tuple(nxt))
    return TriangleSlice(tuple(rows))


def column_sums(slice_: TriangleSlice, d: int) -> SequenceFamily:
    """The family of the first d partial column sums: member k at index n is
    the sum of the first k+1 entries of row n."""
    if d < 1:
        raise PreconditionError("need at least one column sum")
    if d > slice_.size:
        raise PreconditionError(
            f"cannot take {d} column sums from a slice of size {slice_.size}")
    sequences = []
    for k in range(d):
        seq = []
        for n in range(slice_.size):
            acc = Fraction(0)
            for i in range(min(k, n) + 1):
                acc += slice_.rows[n][i]
            seq.append(acc)
        sequences.append(seq)
    return SequenceFamily.from_values(d, sequences)
