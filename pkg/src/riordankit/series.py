"""Truncated formal power series over exact rationals.

A :class:`Series` stores a fixed number of coefficients of a formal power
series, together with a tag saying whether those coefficients are to be read
as an ordinary generating function (``"ogf"``) or an exponential one
(``"egf"``).  The tag never changes the stored numbers: ``coeffs[n]`` is
always the literal coefficient of ``x**n``.  It only controls how sequence
terms are extracted (``n! * coeffs[n]`` for an EGF).

Every operation is a pure function returning a new series; all scalar values
are :class:`fractions.Fraction`, so results are exact and reproducible
bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import KindMismatchError, PreconditionError, TruncationError

OGF = "ogf"
EGF = "egf"

RationalLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise PreconditionError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"not a rational literal: {value!r}") from exc
    raise PreconditionError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p/q"``, or just ``"p"`` when integral."""
    return str(value)


class Series:
    """A truncated formal power series with exact rational coefficients."""

    __slots__ = ("kind", "coeffs")

    def __init__(self, coeffs: Iterable[RationalLike], kind: str = OGF,
                 order: int | None = None):
        if kind not in (OGF, EGF):
            raise PreconditionError(f"unknown series kind {kind!r}")
        cs = tuple(as_rational(c) for c in coeffs)
        if order is not None:
            if order < 1:
                raise PreconditionError("truncation order must be at least 1")
            cs = cs[:order] + (_ZERO,) * (order - len(cs))
        if not cs:
            raise PreconditionError("a series stores at least one coefficient")
        self.kind = kind
        self.coeffs = cs

    # ----- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int, kind: str = OGF) -> "Series":
        return cls([0], kind, order=order)

    @classmethod
    def one(cls, order: int, kind: str = OGF) -> "Series":
        return cls([1], kind, order=order)

    @classmethod
    def x(cls, order: int, kind: str = OGF) -> "Series":
        return cls([0, 1], kind, order=order)

    @classmethod
    def constant(cls, value: RationalLike, order: int, kind: str = OGF) -> "Series":
        return cls([value], kind, order=order)

    # ----- basic access -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        """The coefficient of x**n."""
        if n < 0:
            raise TruncationError(f"coefficient index {n} is negative")
        if n >= len(self.coeffs):
            raise TruncationError(
                f"coefficient {n} requested but series is truncated at order {self.order}")
        return self.coeffs[n]

    def seq_term(self, n: int) -> Fraction:
        """The n-th term of the encoded sequence: coeffs[n], times n! for an EGF."""
        c = self.coeff(n)
        return c * factorial(n) if self.kind == EGF else c

    def terms(self, count: int | None = None) -> list[Fraction]:
        count = self.order if count is None else count
        return [self.seq_term(n) for n in range(count)]

    def truncate(self, order: int) -> "Series":
        if order < 1:
            raise PreconditionError("truncation order must be at least 1")
        if order > self.order:
            raise TruncationError(
                f"cannot extend a series of order {self.order} to order {order}")
        if order == self.order:
            return self
        return Series(self.coeffs[:order], self.kind)

    def with_kind(self, kind: str) -> "Series":
        """Retag without rescaling (contrast with :func:`ogf_egf_convert`)."""
        if kind == self.kind:
            return self
        return Series(self.coeffs, kind)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # ----- ring operations ----------------------------------------------

    def _common(self, other: "Series") -> int:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.kind != self.kind:
            raise KindMismatchError(
                f"cannot combine a {self.kind} series with a {other.kind} series")
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        n = self._common(other)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n)], self.kind)

    def __sub__(self, other: "Series") -> "Series":
        n = self._common(other)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n)], self.kind)

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.kind)

    def scale(self, scalar: RationalLike) -> "Series":
        s = as_rational(scalar)
        return Series([c * s for c in self.coeffs], self.kind)

    def __mul__(self, other):
        if isinstance(other, Series):
            n = self._common(other)
            out = [_ZERO] * n
            for i, a in enumerate(self.coeffs[:n]):
                if a == 0:
                    continue
                for j in range(n - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return Series(out, self.kind)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self.div(other)
        s = as_rational(other)
        if s == 0:
            raise PreconditionError("division by zero scalar")
        return self.scale(_ONE / s)

    def div(self, other: "Series") -> "Series":
        """Series quotient; the divisor needs a nonzero constant term."""
        n = self._common(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise PreconditionError(
                "division requires a divisor with nonzero constant term; "
                "factor out powers of x first")
        inv_b0 = _ONE / b0
        out: list[Fraction] = []
        for i in range(n):
            acc = self.coeffs[i]
            for k in range(1, i + 1):
                bk = other.coeffs[k]
                if bk:
                    acc -= bk * out[i - k]
            out.append(acc * inv_b0)
        return Series(out, self.kind)

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int):
            raise PreconditionError("series powers take integer exponents only")
        if exponent == 0:
            return Series.one(self.order, self.kind)
        if exponent < 0:
            return Series.one(self.order, self.kind).div(self ** (-exponent))
        half = self ** (exponent // 2)
        sq = half * half
        return sq * self if exponent % 2 else sq

    # ----- composition and reversion ------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner(x)); the inner series needs zero constant term."""
        n = self._common(inner)
        if inner.coeffs[0] != 0:
            raise PreconditionError(
                "composition requires an inner series with zero constant term")
        g = inner.truncate(n)
        acc = Series.constant(self.coeffs[n - 1], n, self.kind)
        for k in range(n - 2, -1, -1):
            acc = acc * g + Series.constant(self.coeffs[k], n, self.kind)
        return acc

    def reversion(self) -> "Series":
        """Compositional inverse: the series r with self(r(x)) = x.

        Computed by Lagrange inversion: the n-th coefficient of the inverse
        is [x^(n-1)] (x/f)^n / n, which stays in exact rationals throughout.
        """
        if self.coeffs[0] != 0:
            raise PreconditionError("reversion requires zero constant term")
        if self.order < 2 or self.coeffs[1] == 0:
            raise PreconditionError("reversion requires a nonzero linear coefficient")
        m = self.order - 1
        shifted = Series(self.coeffs[1:], self.kind)          # f/x, order m
        h = Series.one(m, self.kind).div(shifted)             # x/f
        out = [_ZERO, h.coeffs[0]]
        power = h
        for n in range(2, self.order):
            power = power * h
            out.append(power.coeffs[n - 1] / n)
        return Series(out, self.kind)

    # ----- calculus -------------------------------------------------------

    def derivative(self) -> "Series":
        """Term-wise derivative; drops index 0, so the order shrinks by one."""
        if self.order == 1:
            return Series.zero(1, self.kind)
        return Series([(n + 1) * c for n, c in enumerate(self.coeffs[1:])], self.kind)

    def integrate(self) -> "Series":
        """Term-wise antiderivative with zero constant; the top input
        coefficient has nowhere to go and is dropped."""
        out = [_ZERO] + [c / (n + 1) for n, c in enumerate(self.coeffs[:-1])]
        return Series(out, self.kind)

    def mul_x(self) -> "Series":
        """Multiply by x at fixed order (the top coefficient falls off)."""
        return Series((_ZERO,) + self.coeffs[:-1], self.kind)

    def div_x(self) -> "Series":
        """Divide by x; requires zero constant term and order at least 2."""
        if self.coeffs[0] != 0:
            raise PreconditionError("cannot divide by x: nonzero constant term")
        if self.order < 2:
            raise PreconditionError("cannot divide by x at order 1")
        return Series(self.coeffs[1:], self.kind)

    # ----- misc -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(format_rational(c) for c in self.coeffs[:8])
        if self.order > 8:
            shown += ", ..."
        return f"Series({self.kind}, order={self.order}, [{shown}])"


# ----- transcendental helpers (formal solutions, exact coefficients) -------

def exp_series(s: Series) -> Series:
    """exp of a series with zero constant term."""
    if s.coeffs[0] != 0:
        raise PreconditionError("exp requires zero constant term")
    n = s.order
    out = [_ONE] + [_ZERO] * (n - 1)
    for i in range(1, n):
        acc = _ZERO
        for k in range(1, i + 1):
            sk = s.coeffs[k]
            if sk:
                acc += k * sk * out[i - k]
        out[i] = acc / i
    return Series(out, s.kind)


def log_series(s: Series) -> Series:
    """log of a series with constant term 1."""
    if s.coeffs[0] != 1:
        raise PreconditionError("log requires constant term 1")
    n = s.order
    out = [_ZERO] * n
    for i in range(1, n):
        acc = i * s.coeffs[i]
        for k in range(1, i):
            if out[k] and s.coeffs[i - k]:
                acc -= k * out[k] * s.coeffs[i - k]
        out[i] = acc / i
    return Series(out, s.kind)


def sqrt_series(s: Series) -> Series:
    """Formal square root of a series with constant term 1."""
    if s.coeffs[0] != 1:
        raise PreconditionError("sqrt requires constant term 1")
    n = s.order
    out = [_ONE] + [_ZERO] * (n - 1)
    for i in range(1, n):
        acc = s.coeffs[i]
        for k in range(1, i):
            if out[k] and out[i - k]:
                acc -= out[k] * out[i - k]
        out[i] = acc / 2
    return Series(out, s.kind)


def pow_int(s: Series, exponent: int) -> Series:
    """Integer power of a series (negative exponents invert first)."""
    return s ** exponent


def ogf_egf_convert(s: Series, to: str) -> Series:
    """Rescale coefficients by n! (or 1/n!) so the encoded sequence is
    preserved under the new tag."""
    if to not in (OGF, EGF):
        raise PreconditionError(f"unknown series kind {to!r}")
    if to == s.kind:
        return s
    if s.kind == EGF:  # egf -> ogf: multiply by n!
        coeffs = [c * factorial(n) for n, c in enumerate(s.coeffs)]
    else:              # ogf -> egf: divide by n!
        coeffs = [c / factorial(n) for n, c in enumerate(s.coeffs)]
    return Series(coeffs, to)


def binomial_transform(seq: Sequence[RationalLike]) -> list[Fraction]:
    """b_n = sum_k C(n, k) a_k."""
    a = [as_rational(v) for v in seq]
    return [sum((comb(n, k) * a[k] for k in range(n + 1)), _ZERO)
            for n in range(len(a))]
