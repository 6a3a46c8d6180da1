"""d-Hankel transforms of families of sequences.

A family holds d parallel sequences.  The transform's n-th value is the
determinant of the (n+1) x (n+1) matrix whose row i draws from family
member i mod d, shifted so that entry (i, j) is member[i mod d][i // d + j].
Determinants are evaluated by fraction-free Bareiss elimination after
clearing denominators; a plain rational Gaussian elimination is kept as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InsufficientDataError, PreconditionError
from .series import RationalLike, as_rational, binomial_transform, format_rational

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SequenceFamily:
    """d sequences of exact rationals, addressed modulo d by the transform."""

    d: int
    sequences: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError("a family holds at least one sequence")
        if len(self.sequences) != self.d:
            raise PreconditionError(
                f"family declares d={self.d} but holds {len(self.sequences)} sequences")
        if any(len(s) == 0 for s in self.sequences):
            raise PreconditionError("family sequences must be nonempty")

    @classmethod
    def from_values(cls, d: int, sequences) -> "SequenceFamily":
        return cls(d, tuple(tuple(as_rational(v) for v in seq) for seq in sequences))

    @property
    def length(self) -> int:
        return min(len(s) for s in self.sequences)

    def member(self, k: int) -> tuple[Fraction, ...]:
        return self.sequences[k]

    def binomial_transformed(self) -> "SequenceFamily":
        return SequenceFamily(
            self.d, tuple(tuple(binomial_transform(s)) for s in self.sequences))

    def to_json(self) -> dict:
        return {"d": self.d,
                "sequences": [[format_rational(v) for v in s] for s in self.sequences]}

    @classmethod
    def from_json(cls, payload: dict) -> "SequenceFamily":
        try:
            d = int(payload["d"])
            sequences = payload["sequences"]
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(
                'family JSON needs integer "d" and a "sequences" list') from exc
        return cls.from_values(d, sequences)


@dataclass(frozen=True)
class HankelResult:
    """The determinant values h_0..h_n of a transform sweep; the matrices
    behind them can be retained for auditing."""

    values: tuple[Fraction, ...]
    matrices: tuple[tuple[tuple[Fraction, ...], ...], ...] | None = None

    def to_json(self) -> dict:
        return {"h": [format_rational(v) for v in self.values]}


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over exact rationals, coefficients by ascending power."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(as_rational(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        if not cs:
            cs = (_ZERO,)
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (_ZERO,)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def scale(self, scalar: RationalLike) -> "Polynomial":
        s = as_rational(scalar)
        return Polynomial(tuple(c * s for c in self.coeffs))

    def mul_x(self) -> "Polynomial":
        """Multiply by x (exact shift, no truncation)."""
        if self.is_zero:
            return self
        return Polynomial((_ZERO,) + self.coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(tuple(out))

    def __call__(self, value: RationalLike) -> Fraction:
        v = as_rational(value)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


# ----- determinants -----------------------------------------------------------

def det_gauss(matrix) -> Fraction:
    """Exact determinant by rational Gaussian elimination (the slow,
    independent route kept for cross-checking)."""
    m = [[as_rational(v) for v in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise PreconditionError("determinant of a non-square matrix")
    sign = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return _ZERO
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor:
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    det = Fraction(sign)
    for k in range(n):
        det *= m[k][k]
    return det


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_exact(matrix) -> Fraction:
    """Exact determinant: denominators are cleared row by row, then
    fraction-free Bareiss elimination runs over plain integers."""
    rows = [[as_rational(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise PreconditionError("determinant of a non-square matrix")
    scale = 1
    int_rows = []
    for row in rows:
        mult = lcm(*(v.denominator for v in row))
        scale *= mult
        int_rows.append([int(v * mult) for v in row])
    return Fraction(_bareiss(int_rows), scale)


# ----- the transform ------------------------------------------------------------

def required_length(d: int, n: int) -> int:
    """Terms each family member must supply for the n-th transform value."""
    return n // d + n + 1


def _family_rows(family: SequenceFamily, row_count: int, width: int) -> list[list[Fraction]]:
    d = family.d
    need = (row_count - 1) // d + width if row_count else 0
    if family.length < need:
        raise InsufficientDataError(
            f"family sequences need at least {need} terms, have {family.length}",
            needed=need, have=family.length)
    rows = []
    for i in range(row_count):
        member = family.sequences[i % d]
        base = i // d
        rows.append([member[base + j] for j in range(width)])
    return rows


def dhankel_matrix(family: SequenceFamily, n: int) -> list[list[Fraction]]:
    """The (n+1) x (n+1) matrix with entry (i, j) = member[i mod d][i//d + j]."""
    if n < 0:
        raise PreconditionError("transform index must be nonnegative")
    return _family_rows(family, n + 1, n + 1)


def dhankel(family: SequenceFamily, n: int) -> Fraction:
    """The n-th value of the d-Hankel transform."""
    return det_exact(dhankel_matrix(family, n))


def dhankel_transform(family: SequenceFamily, n: int,
                      keep_matrices: bool = False) -> HankelResult:
    """All values h_0..h_n."""
    need = required_length(family.d, n)
    if family.length < need:
        raise InsufficientDataError(
            f"h_{n} needs family sequences of length {need}, have {family.length}",
            needed=need, have=family.length)
    matrices = tuple(dhankel_matrix(family, m) for m in range(n + 1))
    values = tuple(det_exact(m) for m in matrices)
    if keep_matrices:
        return HankelResult(values, tuple(tuple(tuple(row) for row in m)
                                          for m in matrices))
    return HankelResult(values)


def dhankel_poly(family: SequenceFamily, n: int) -> Polynomial:
    """The polynomial-valued determinant: same matrix as :func:`dhankel`
    with the last row replaced by 1, x, x^2, ..., expanded by cofactors
    along that row."""
    if n < 1:
        raise PreconditionError("polynomial determinants start at index 1")
    rows = _family_rows(family, n, n + 1)
    coeffs = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in rows]
        cofactor = det_exact(minor)
        if (n + j) % 2:
            cofactor = -cofactor
        coeffs.append(cofactor)
    return Polynomial(tuple(coeffs))


def product_formula(gamma, d: int, n: int) -> Fraction:
    """prod_{k=0}^{n} gamma_k ** floor((n-k)/d)."""
    g = [as_rational(v) for v in gamma]
    if len(g) < n + 1:
        raise InsufficientDataError(
            f"need {n + 1} gamma values, have {len(g)}", needed=n + 1, have=len(g))
    if d < 1:
        raise PreconditionError("d must be positive")
    acc = Fraction(1)
    for k in range(n + 1):
        acc *= g[k] ** ((n - k) // d)
    return acc
