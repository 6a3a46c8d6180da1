"""d-orthogonal polynomial families.

Two constructions are provided and must agree: walking a banded production
matrix through the monic recurrence x*P_n = P_{n+1} + sum_j p[n][n-j] P_{n-j},
and dividing polynomial-valued determinants by scalar ones.  For d = 2 the
recurrence coefficients can also be recovered purely from determinant data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dhankel import Polynomial, SequenceFamily, dhankel, dhankel_poly
from .errors import PreconditionError
from .riordan import ProductionMatrix, TriangleSlice


@dataclass(frozen=True)
class PolyFamily:
    """Monic polynomials P_0..P_N with deg P_n = n, plus the orthogonality
    order d they are associated with."""

    polys: tuple[Polynomial, ...]
    d: int

    def __post_init__(self):
        for n, p in enumerate(self.polys):
            if p.degree != n or p.coeff(n) != 1:
                raise PreconditionError(
                    f"member {n} must be monic of degree {n}, got {p}")

    @property
    def count(self) -> int:
        return len(self.polys)

    def to_json(self) -> list[list[str]]:
        return [p.to_json() for p in self.polys]


@dataclass(frozen=True)
class RecurrenceBands:
    """Recurrence data read off (or reconstructed for) a production matrix:
    alpha[n] = p[n][n] and bands[j-1][n] = p[n+j][n] for j = 1..d."""

    d: int
    alpha: tuple[Fraction, ...]
    bands: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.bands) != self.d:
            raise PreconditionError(f"expected {self.d} lower bands")


def polys_from_production(production: ProductionMatrix, count: int) -> PolyFamily:
    """P_0 = 1 and P_{n+1} = (x - p[n][n]) P_n - sum_{j>=1} p[n][n-j] P_{n-j}.

    Requires the unit superdiagonal that makes the family monic.
    """
    if count < 1:
        raise PreconditionError("need at least one polynomial")
    if production.size < count - 1:
        raise PreconditionError(
            f"{count} polynomials need {count - 1} production rows, "
            f"have {production.size}")
    polys = [Polynomial((Fraction(1),))]
    for n in range(count - 1):
        if production.entry(n, n + 1) != 1:
            raise PreconditionError(
                f"production superdiagonal entry at row {n} is "
                f"{production.entry(n, n + 1)}, not 1; only monic "
                "normalization is supported")
        nxt = polys[n].mul_x()
        for j in range(n + 1):
            c = production.entry(n, n - j)
            if c:
                nxt = nxt - polys[n - j].scale(c)
        polys.append(nxt)
    return PolyFamily(tuple(polys), production.max_band_offset())


def polys_from_determinants(family: SequenceFamily, count: int) -> PolyFamily:
    """P_0 = 1 and P_n = (polynomial determinant at n) / h_{n-1}."""
    if count < 1:
        raise PreconditionError("need at least one polynomial")
    polys = [Polynomial((Fraction(1),))]
    for n in range(1, count):
        h_prev = dhankel(family, n - 1)
        if h_prev == 0:
            raise PreconditionError(
                f"degenerate family: determinant h_{n - 1} vanishes")
        polys.append(dhankel_poly(family, n).scale(Fraction(1) / h_prev))
    return PolyFamily(tuple(polys), family.d)


def coefficient_triangle(family: PolyFamily) -> TriangleSlice:
    """Row n holds the coefficients of P_n by ascending power."""
    return TriangleSlice(tuple(
        tuple(p.coeff(k) for k in range(n + 1))
        for n, p in enumerate(family.polys)))


def orthogonality_order(production: ProductionMatrix) -> int | None:
    """Smallest d with p[n][k] = 0 whenever n - k > d, as witnessed by the
    computed slice; None when the band reaches the slice's corner and no
    such d can be certified."""
    offset = production.max_band_offset()
    if production.size > 1 and offset == production.size - 1:
        return None
    return offset


def recurrence_from_determinants(family: SequenceFamily, count: int) -> RecurrenceBands:
    """Recover the d = 2 recurrence bands from determinant data alone.

    Writing q[n][k] for the coefficient of x^k in P_n = h_n(x)/h_{n-1} and
    equating coefficients of x^n, x^(n-1), x^(n-2) in the recurrence
    P_{n+1} = (x - a_n) P_n - b_n P_{n-1} - c_n P_{n-2} gives

        a_n = q[n][n-1] - q[n+1][n]
        b_n = q[n][n-2] - a_n q[n][n-1] - q[n+1][n-1]
        c_n = q[n][n-3] - a_n q[n][n-2] - b_n q[n-1][n-2] - q[n+1][n-2]

    with every q at a negative power index read as 0.  The result matches
    the production-matrix diagonals of the matching moment array:
    alpha[n] = a_n, bands[0][n] = b_{n+1}, bands[1][n] = c_{n+2}.
    """
    if family.d != 2:
        raise PreconditionError(
            f"determinantal recurrence extraction is implemented for d = 2 "
            f"families only, got d = {family.d}")
    if count < 1:
        raise PreconditionError("need at least one recurrence row")
    pf = polys_from_determinants(family, count + 1)

    def q(n: int, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        return pf.polys[n].coeff(k)

    alpha = []
    beta = []
    gamma = []
    for n in range(count):
        a_n = q(n, n - 1) - q(n + 1, n)
        alpha.append(a_n)
        if n >= 1:
            b_n = q(n, n - 2) - a_n * q(n, n - 1) - q(n + 1, n - 1)
            beta.append(b_n)
        if n >= 2:
            c_n = (q(n, n - 3) - a_n * q(n, n - 2)
                   - beta[n - 1] * q(n - 1, n - 2) - q(n + 1, n - 2))
            gamma.append(c_n)
    return RecurrenceBands(2, tuple(alpha), (tuple(beta), tuple(gamma)))
