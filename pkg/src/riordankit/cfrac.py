"""Generalized continued fractions built from banded production data.

A fraction of order d has bands c[j][k] = p[k+j][k] for j = 0..d.  Level k
of the nested fraction is

    G_k = 1 / (1 - sum_{j=0}^{d} c[j][k] * x^(j+1) * G_{k+1} * ... * G_{k+j})

and the expansion of G_0 as an ordinary generating function reproduces the
first column of the triangle the production matrix generates.  Evaluation
runs bottom-up with explicit truncation at every level, so the whole
computation stays in exact rationals with linear memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientDataError, PreconditionError
from .riordan import ProductionMatrix
from .series import OGF, Series, as_rational, format_rational


@dataclass(frozen=True)
class DFraction:
    """Band data of a generalized continued fraction of order d."""

    d: int
    bands: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError("fraction order d must be at least 1")
        if len(self.bands) != self.d + 1:
            raise PreconditionError(
                f"an order-{self.d} fraction carries {self.d + 1} bands, "
                f"got {len(self.bands)}")
        if any(len(b) == 0 for b in self.bands):
            raise PreconditionError("fraction bands must be nonempty")

    @classmethod
    def from_values(cls, d: int, bands) -> "DFraction":
        return cls(d, tuple(tuple(as_rational(v) for v in band) for band in bands))

    @property
    def depth(self) -> int:
        """Number of levels with complete band data."""
        return min(len(b) for b in self.bands)

    def coefficient(self, j: int, k: int) -> Fraction:
        return self.bands[j][k]

    def to_json(self) -> dict:
        return {"d": self.d,
                "bands": [[format_rational(v) for v in band] for band in self.bands]}

    @classmethod
    def from_json(cls, payload: dict) -> "DFraction":
        try:
            d = int(payload["d"])
            bands = payload["bands"]
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(
                'fraction JSON needs integer "d" and a "bands" list') from exc
        return cls.from_values(d, bands)


def from_production(production: ProductionMatrix, d: int) -> DFraction:
    """Read the d+1 bands c[j][k] = p[k+j][k] off a production matrix.

    The matrix must be banded within d + 2 diagonals and have a unit
    superdiagonal (the normalization under which the expansion identity
    with the generated triangle's first column holds).
    """
    if d < 1:
        raise PreconditionError("fraction order d must be at least 1")
    offset = production.max_band_offset()
    if offset > d:
        raise PreconditionError(
            f"production matrix has nonzero band at offset {offset}, "
            f"wider than the requested order {d}")
    for n in range(production.size):
        if production.entry(n, n + 1) != 1:
            raise PreconditionError(
                f"production superdiagonal entry at row {n} is "
                f"{production.entry(n, n + 1)}, not 1")
    bands = tuple(tuple(production.band(j)) for j in range(d + 1))
    return DFraction(d, bands)


def expand(fraction: DFraction, order: int) -> Series:
    """Expand the fraction as an OGF with the given number of coefficients.

    Needs band data for at least order + d levels; past that point deeper
    levels cannot influence the retained coefficients, so the result is
    independent of the available depth.
    """
    if order < 1:
        raise PreconditionError("order must be at least 1")
    d = fraction.d
    depth = fraction.depth
    if depth < order + d:
        raise InsufficientDataError(
            f"expansion to {order} coefficients needs band depth {order + d}, "
            f"have {depth}", needed=order + d, have=depth)
    one = Series.one(order, OGF)
    # levels[i] holds G_{k+1+i} while processing level k
    levels = [one] * d
    g = one
    for k in range(depth - 1, -1, -1):
        denom = one
        prod = one
        for j in range(d + 1):
            if j > 0:
                prod = prod * levels[j - 1]
            c = fraction.coefficient(j, k)
            if c:
                term = prod.scale(c)
                for _ in range(j + 1):
                    term = term.mul_x()
                denom = denom - term
        g = one.div(denom)
        levels = [g] + levels[:-1]
    return g
