"""Shared builders for the test suite: closed-form series, the worked-example
arrays, and seeded random generators for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from riordankit import (
    EGF,
    EXPONENTIAL,
    OGF,
    ORDINARY,
    RiordanArray,
    Series,
    sqrt_series,
)


def geometric(order: int, kind: str = OGF, ratio: int = 1) -> Series:
    """1 / (1 - ratio*x)."""
    one = Series.one(order, kind)
    return one.div(one - Series([0, ratio], kind, order=order))


def one_plus_x(order: int, kind: str = OGF) -> Series:
    return Series([1, 1], kind, order=order)


def sqrt_pair(order: int) -> RiordanArray:
    """The exponential pair (1/sqrt(1-2x), 1/sqrt(1-2x)-1)."""
    one = Series.one(order, EGF)
    g = one.div(sqrt_series(one - Series([0, 2], EGF, order=order)))
    return RiordanArray(EXPONENTIAL, g, g - one)


def pascal(order: int) -> RiordanArray:
    """The ordinary pair (1/(1-x), x/(1-x))."""
    g = geometric(order)
    return RiordanArray(ORDINARY, g, g.mul_x())


def identity_array(order: int, kind: str = ORDINARY) -> RiordanArray:
    skind = OGF if kind == ORDINARY else EGF
    return RiordanArray(kind, Series.one(order, skind), Series.x(order, skind))


def odd_double_factorials(count: int) -> list[int]:
    values = [1]
    for n in range(1, count):
        values.append(values[-1] * (2 * n - 1))
    return values


def rand_fraction(rng: random.Random, span: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_series(rng: random.Random, order: int, kind: str = OGF,
                constant=None) -> Series:
    coeffs = [rand_fraction(rng) for _ in range(order)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return Series(coeffs, kind)


def rand_reversible(rng: random.Random, order: int, kind: str = OGF) -> Series:
    """Random series with zero constant and nonzero linear term."""
    coeffs = [Fraction(0)] + [rand_fraction(rng) for _ in range(order - 1)]
    while coeffs[1] == 0:
        coeffs[1] = rand_fraction(rng)
    return Series(coeffs, kind)


def rand_array(rng: random.Random, order: int, kind: str = ORDINARY,
               monic: bool = False) -> RiordanArray:
    skind = OGF if kind == ORDINARY else EGF
    g = rand_series(rng, order, skind, constant=1)
    f = rand_reversible(rng, order, skind)
    if monic:
        f = Series([Fraction(0), Fraction(1)] + list(f.coeffs[2:]), skind)
    return RiordanArray(kind, g, f)
