"""End-to-end replay of the five worked examples against embedded tables.

Each example rebuilds its arrays, production matrices, polynomial families,
transforms and continued fractions from first principles and diffs the
results against golden values transcribed below.  Every comparison is exact
rational equality.  The ``verify`` CLI subcommand and the ``/verify``
endpoint are thin wrappers over :func:`verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cfrac import expand, from_production
from .dhankel import dhankel, product_formula
from .dorth import polys_from_determinants, polys_from_production
from .errors import PreconditionError
from .riordan import (
    EGF,
    EXPONENTIAL,
    ORDINARY,
    RiordanArray,
    Series,
    coefficient_array_from_za,
    column_sums,
    from_za,
    generate_from_production,
    inverse,
    production_via_matrix,
    production_via_series,
    triangle,
    za_sequences,
)
from .dorth import recurrence_from_determinants
from .series import OGF, log_series, sqrt_series


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    example: str
    description: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class _Recorder:
    def __init__(self):
        self.checks: list[Check] = []

    def eq(self, name: str, got, want):
        ok = got == want
        detail = "" if ok else f"got {got!r}, want {want!r}"
        self.checks.append(Check(name, ok, detail))


# ----- golden tables ------------------------------------------------------------
# e1: exponential pair (1/sqrt(1-2*x), 1/sqrt(1-2*x)-1); first column (2n-1)!!

E1_TRIANGLE = [
    [1],
    [1, 1],
    [3, 5, 1],
    [15, 33, 12, 1],
    [105, 279, 141, 22, 1],
    [945, 2895, 1830, 405, 35, 1],
    [10395, 35685, 26685, 7500, 930, 51, 1],
]
E1_PRODUCTION = [
    [1, 1, 0, 0, 0, 0, 0],
    [2, 4, 1, 0, 0, 0, 0],
    [2, 10, 7, 1, 0, 0, 0],
    [0, 12, 24, 10, 1, 0, 0],
    [0, 0, 36, 44, 13, 1, 0],
    [0, 0, 0, 80, 70, 16, 1],
    [0, 0, 0, 0, 150, 102, 19],
]
E1_POLYS = [[1], [-1, 1], [2, -5, 1], [-6, 27, -12, 1], [24, -168, 123, -22, 1]]
E1_COLUMN0 = [1, 1, 3, 15, 105, 945, 10395, 135135]
E1_COLUMN1 = [0, 1, 5, 33, 279, 2895, 35685, 509985]
E1_SUM01 = [1, 2, 8, 48, 384, 3840, 46080, 645120]
E1_HANKEL = [1, 1, 2, 24, 1728, 1658880, 17915904000, 4334215495680000]
E1_GAMMA = [2, 12, 36, 80, 150, 252, 392, 576]
E1_ODD_DOUBLE_FACTORIALS = [1, 1, 3, 15, 105, 945, 10395, 135135, 2027025,
                            34459425, 654729075, 13749310575]
E1_CF_LEVELS = [(1, 2, 2), (4, 10, 12), (7, 24, 36)]   # (c0, c1, c2) per level

# e2: ordinary array with entries C(4n, 3n+k); first column C(4n, 3n)

E2_TRIANGLE = [
    [1],
    [4, 1],
    [28, 8, 1],
    [220, 66, 12, 1],
    [1820, 560, 120, 16, 1],
    [15504, 4845, 1140, 190, 20, 1],
    [134596, 42504, 10626, 2024, 276, 24, 1],
]
E2_PRODUCTION = [
    [4, 1, 0, 0, 0, 0, 0],
    [12, 4, 1, 0, 0, 0, 0],
    [12, 6, 4, 1, 0, 0, 0],
    [4, 4, 6, 4, 1, 0, 0],
    [0, 1, 4, 6, 4, 1, 0],
    [0, 0, 1, 4, 6, 4, 1],
    [0, 0, 0, 1, 4, 6, 4],
]
E2_POLYS = [[1], [-4, 1], [4, -8, 1], [-4, 30, -12, 1], [4, -80, 72, -16, 1]]
E2_A = [1, 4, 28, 220, 1820, 15504, 134596, 1184040]
E2_B = [1, 5, 36, 286, 2380, 20349, 177100, 1560780]
E2_C = [1, 5, 37, 298, 2500, 21489, 187726, 1659060]
E2_HANKEL = [1, 1, 1, 4, 4, 4, 16, 16, 16]
E2_GAMMA = [4, 1, 1, 1, 1, 1, 1, 1, 1]

# e3: ordinary (Z, A) = (1+x+x^2, 1+x+2x^2+3x^3)

E3_MOMENT = [
    [1],
    [1, 1],
    [2, 2, 1],
    [5, 6, 3, 1],
    [14, 20, 11, 4, 1],
    [45, 68, 42, 17, 5, 1],
    [155, 248, 159, 72, 24, 6, 1],
]
E3_COEFF = [
    [1],
    [-1, 1],
    [0, -2, 1],
    [1, 0, -3, 1],
    [2, 2, 1, -4, 1],
    [-4, 6, 4, 3, -5, 1],
    [-3, -14, 9, 6, 6, -6, 1],
]
E3_PRODUCTION = [
    [1, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [1, 2, 1, 1, 0, 0, 0],
    [0, 3, 2, 1, 1, 0, 0],
    [0, 0, 3, 2, 1, 1, 0],
    [0, 0, 0, 3, 2, 1, 1],
    [0, 0, 0, 0, 3, 2, 1],
]
E3_POLYS = [[1], [-1, 1], [0, -2, 1], [1, 0, -3, 1], [2, 2, 1, -4, 1],
            [-4, 6, 4, 3, -5, 1]]
E3_A = [1, 1, 2, 5, 14, 45, 155, 562, 2122, 8245, 32769]
E3_B = [1, 2, 4, 11, 34, 113, 403, 1499, 5758, 22691, 91189]
E3_HANKEL = [1, 1, 1, 3, 9, 81, 729, 19683, 531441, 43046721, 3486784401]
E3_GAMMA = [1] + [3] * 10

# e5: exponential (Z, A) = (1+2x+3x^2+4x^3, 1+x+x^2+x^3+x^4)

E5_PRODUCTION = [
    [1, 1, 0, 0, 0, 0, 0],
    [2, 2, 1, 0, 0, 0, 0],
    [6, 6, 3, 1, 0, 0, 0],
    [24, 24, 12, 4, 1, 0, 0],
    [0, 120, 60, 20, 5, 1, 0],
    [0, 0, 360, 120, 30, 6, 1],
    [0, 0, 0, 840, 210, 42, 7],
]
E5_TRIANGLE = [
    [1],
    [1, 1],
    [3, 3, 1],
    [15, 15, 6, 1],
    [105, 105, 45, 10, 1],
    [825, 945, 420, 105, 15, 1],
    [7755, 9555, 4725, 1260, 210, 21, 1],
]
E5_A = [1, 1, 3, 15, 105, 825, 7755, 85455, 1076625, 15154425]
E5_B = [1, 2, 6, 30, 210, 1770, 17310, 196110, 2531250, 36545850]
E5_C = [1, 2, 7, 36, 255, 2190, 22035, 255120, 3351915, 49198050]
E5_HANKEL = [1, 1, 1, 24, 2880, 1036800, 20901888000, 4213820620800000,
             4587333680627712000000]


def _sqrt_pair(order: int) -> RiordanArray:
    """The exponential pair (1/sqrt(1-2*x), 1/sqrt(1-2*x)-1)."""
    one = Series.one(order, EGF)
    g = one.div(sqrt_series(one - Series([0, 2], EGF, order=order)))
    return RiordanArray(EXPONENTIAL, g, g - one)


def _poly_lists(family) -> list[list[Fraction]]:
    return [list(p.coeffs) for p in family.polys]


# ----- examples -------------------------------------------------------------------

def _verify_e1(r: _Recorder) -> None:
    R = _sqrt_pair(17)
    t = triangle(R, 7)
    r.eq("triangle 7x7", t.to_lists(), E1_TRIANGLE)
    p = production_via_matrix(R, 12)
    r.eq("production 7x7", p.square(7), E1_PRODUCTION)
    r.eq("production from series route", production_via_series(R).rows[:12], p.rows)
    z, a = za_sequences(R)
    r.eq("Z = (1+x)^2", list(z.coeffs[:4]), [1, 2, 1, 0])
    r.eq("A = (1+x)^3", list(a.coeffs[:5]), [1, 3, 3, 1, 0])
    inv = inverse(R)
    one = Series.one(R.order, EGF)
    xs = Series.x(R.order, EGF)
    r.eq("inverse g = 1/(1+x)", inv.g, one.div(one + xs))
    r.eq("inverse f = (1-(1+x)^-2)/2", inv.f, (one - (one + xs) ** -2).scale(Fraction(1, 2)))
    pf = polys_from_production(p, 5)
    r.eq("polynomials through degree 4", _poly_lists(pf), E1_POLYS)
    big = triangle(R, 13)
    fam = column_sums(big, 2)
    r.eq("first column (odd double factorials)", list(fam.member(0)[:8]), E1_COLUMN0)
    r.eq("second column", big.column(1, 8), E1_COLUMN1)
    r.eq("column sums (2^n n!)", list(fam.member(1)[:8]), E1_SUM01)
    hs = [dhankel(fam, n) for n in range(8)]
    r.eq("2-Hankel transform", hs, E1_HANKEL)
    r.eq("gamma sequence (k+2)(k+1)^2", E1_GAMMA,
         [(k + 2) * (k + 1) ** 2 for k in range(8)])
    r.eq("gamma = lowest production band", E1_GAMMA, p.band(2)[:8])
    r.eq("product formula", [product_formula(E1_GAMMA, 2, n) for n in range(8)], hs)
    r.eq("binomial-transform invariance",
         [dhankel(fam.binomial_transformed(), n) for n in range(8)], hs)
    pf_det = polys_from_determinants(fam, 7)
    r.eq("determinant route matches recurrence route",
         _poly_lists(pf_det), _poly_lists(polys_from_production(p, 7)))
    bands = recurrence_from_determinants(fam, 6)
    r.eq("recovered diagonal", list(bands.alpha), p.band(0)[:6])
    r.eq("recovered first lower band", list(bands.bands[0]), p.band(1)[:5])
    r.eq("recovered second lower band", list(bands.bands[1]), p.band(2)[:4])
    cf = from_production(production_via_matrix(R, 16), 2)
    r.eq("fraction levels (linear; x^2; x^3 numerators)",
         [(cf.coefficient(0, k), cf.coefficient(1, k), cf.coefficient(2, k))
          for k in range(3)],
         E1_CF_LEVELS)
    r.eq("fraction expansion, 12 terms",
         list(expand(cf, 12).coeffs), E1_ODD_DOUBLE_FACTORIALS)


def _verify_e2(r: _Recorder) -> None:
    R = from_za(ORDINARY, Series([4, 12, 12, 4]), Series([1, 4, 6, 4, 1]), 20)
    t = triangle(R, 7)
    r.eq("triangle 7x7", t.to_lists(), E2_TRIANGLE)
    r.eq("entries are C(4n, 3n+k)",
         all(t.entry(n, k) == comb(4 * n, 3 * n + k)
             for n in range(7) for k in range(n + 1)), True)
    p = production_via_matrix(R, 12)
    r.eq("production 7x7", p.square(7), E2_PRODUCTION)
    r.eq("production from series route", production_via_series(R).rows[:12], p.rows)
    pf = polys_from_production(p, 9)
    r.eq("polynomials through degree 4", _poly_lists(pf)[:5], E2_POLYS)
    stationary = all(
        pf.polys[n] == (pf.polys[n - 1].mul_x() - pf.polys[n - 1].scale(4)
                        - pf.polys[n - 2].scale(6) - pf.polys[n - 3].scale(4)
                        - pf.polys[n - 4])
        for n in range(5, 9))
    r.eq("stationary recurrence (x-4, 6, 4, 1) from degree 5 on", stationary, True)
    fam = column_sums(triangle(R, 12), 3)
    r.eq("first column sums", list(fam.member(0)[:8]), E2_A)
    r.eq("second column sums", list(fam.member(1)[:8]), E2_B)
    r.eq("third column sums", list(fam.member(2)[:8]), E2_C)
    hs = [dhankel(fam, n) for n in range(9)]
    r.eq("3-Hankel transform", hs, E2_HANKEL)
    r.eq("product formula", [product_formula(E2_GAMMA, 3, n) for n in range(9)], hs)
    r.eq("gamma = lowest production band", E2_GAMMA, p.band(3)[:9])
    r.eq("determinant route matches recurrence route",
         _poly_lists(polys_from_determinants(fam, 6)), _poly_lists(pf)[:6])
    cf = from_production(production_via_matrix(R, 19), 3)
    r.eq("fraction level 0 bands", [cf.coefficient(j, 0) for j in range(4)],
         [4, 12, 12, 4])
    r.eq("fraction expansion, 12 terms", list(expand(cf, 12).coeffs),
         [comb(4 * n, 3 * n) for n in range(12)])


def _verify_e3(r: _Recorder) -> None:
    z = Series([1, 1, 1])
    a = Series([1, 1, 2, 3])
    moment = from_za(ORDINARY, z, a, 16)
    coeff = coefficient_array_from_za(ORDINARY, z, a, 16)
    r.eq("moment triangle 7x7", triangle(moment, 7).to_lists(), E3_MOMENT)
    r.eq("coefficient triangle 7x7", triangle(coeff, 7).to_lists(), E3_COEFF)
    r.eq("coefficient array = inverse of moment array",
         triangle(coeff, 7).rows, triangle(inverse(moment), 7).rows)
    one = Series.one(16, OGF)
    denom = Series([1, 1, 2, 3], OGF, order=16)
    r.eq("coefficient g = (1+x^2+2x^3)/(1+x+2x^2+3x^3)",
         coeff.g, Series([1, 0, 1, 2], OGF, order=16).div(denom))
    r.eq("coefficient f = x/(1+x+2x^2+3x^3)", coeff.f, one.div(denom).mul_x())
    p = production_via_matrix(moment, 15)
    r.eq("production 7x7", p.square(7), E3_PRODUCTION)
    pf = polys_from_production(p, 6)
    r.eq("polynomials through degree 5", _poly_lists(pf), E3_POLYS)
    fam = column_sums(triangle(moment, 16), 2)
    r.eq("sequence a", list(fam.member(0)[:11]), E3_A)
    r.eq("sequence b", list(fam.member(1)[:11]), E3_B)
    r.eq("b has generating function g(1+f)",
         [(moment.g * (one + moment.f)).coeff(n) for n in range(11)], E3_B)
    hs = [dhankel(fam, n) for n in range(11)]
    r.eq("2-Hankel transform", hs, E3_HANKEL)
    r.eq("product formula", [product_formula(E3_GAMMA, 2, n) for n in range(11)], hs)
    r.eq("gamma = lowest production band", E3_GAMMA, p.band(2)[:len(E3_GAMMA)])
    r.eq("determinant route matches recurrence route",
         _poly_lists(polys_from_determinants(fam, 6)), E3_POLYS)
    bands = recurrence_from_determinants(fam, 6)
    r.eq("recovered diagonal", list(bands.alpha), p.band(0)[:6])
    r.eq("recovered first lower band", list(bands.bands[0]), p.band(1)[:5])
    r.eq("recovered second lower band", list(bands.bands[1]), p.band(2)[:4])


def _verify_e4(r: _Recorder) -> None:
    z = Series([1, 2, 1], EGF)
    a = Series([1, 3, 3, 1], EGF)
    R = from_za(EXPONENTIAL, z, a, 12)
    target = _sqrt_pair(12)
    r.eq("reconstructed g = 1/sqrt(1-2x)", R.g, target.g)
    r.eq("reconstructed f = 1/sqrt(1-2x) - 1", R.f, target.f)
    coeff = coefficient_array_from_za(EXPONENTIAL, z, a, 12)
    one = Series.one(12, EGF)
    xs = Series.x(12, EGF)
    r.eq("coefficient g = 1/(1+x)", coeff.g, one.div(one + xs))
    r.eq("coefficient f = (1-(1+x)^-2)/2",
         coeff.f, (one - (one + xs) ** -2).scale(Fraction(1, 2)))
    r.eq("coefficient array = inverse of reconstruction",
         triangle(coeff, 7).rows, triangle(inverse(R), 7).rows)
    cube = (one + xs) ** 3
    integral = one.div(cube).integrate()
    closed = (Series([0, 2, 1], EGF, order=12)).div((one + xs) ** 2).scale(Fraction(1, 2))
    r.eq("integral of (1+t)^-3 = x(2+x)/(2(1+x)^2)", integral, closed)
    ratio_integral = ((one + xs) ** 2).div(cube).integrate()
    r.eq("integral of (1+t)^2/(1+t)^3 = log(1+x)", ratio_integral, log_series(one + xs))
    r.eq("log series coefficients alternate as 1/n",
         list(ratio_integral.coeffs[1:7]),
         [Fraction((-1) ** (n + 1), n) for n in range(1, 7)])


def _verify_e5(r: _Recorder) -> None:
    z = Series([1, 2, 3, 4], EGF)
    a = Series([1, 1, 1, 1, 1], EGF)
    R = from_za(EXPONENTIAL, z, a, 13)
    p = production_via_matrix(R, 12)
    r.eq("production 7x7", p.square(7), E5_PRODUCTION)
    r.eq("production from series route", production_via_series(R).rows[:12], p.rows)
    t = triangle(R, 7)
    r.eq("triangle 7x7", t.to_lists(), E5_TRIANGLE)
    r.eq("triangle regenerated from production rows",
         generate_from_production(p, 7).rows, t.rows)
    coeff = coefficient_array_from_za(EXPONENTIAL, z, a, 13)
    one = Series.one(13, EGF)
    r.eq("coefficient g = 1/(1+x+x^2+x^3+x^4)",
         coeff.g, one.div(Series([1, 1, 1, 1, 1], EGF, order=13)))
    fam = column_sums(triangle(R, 12), 3)
    r.eq("sequence a", list(fam.member(0)[:10]), E5_A)
    r.eq("sequence b", list(fam.member(1)[:10]), E5_B)
    r.eq("sequence c", list(fam.member(2)[:10]), E5_C)
    hs = [dhankel(fam, n) for n in range(9)]
    r.eq("3-Hankel transform", hs, E5_HANKEL)
    gamma = [(k + 1) * (k + 2) * (k + 3) * (k + 4) for k in range(9)]
    r.eq("gamma = lowest production band", gamma, p.band(3)[:9])
    r.eq("product formula", [product_formula(gamma, 3, n) for n in range(9)], hs)
    r.eq("determinant route matches recurrence route",
         _poly_lists(polys_from_determinants(fam, 6)),
         _poly_lists(polys_from_production(p, 6)))


EXAMPLES: dict[str, tuple[str, object]] = {
    "e1": ("exponential pair (1/sqrt(1-2x), 1/sqrt(1-2x)-1): triangle, "
           "production matrix, inverse, polynomials, 2-Hankel transform, "
           "continued fraction", _verify_e1),
    "e2": ("ordinary array C(4n, 3n+k): triangle, production matrix, "
           "3-orthogonal polynomials, 3-Hankel transform, continued fraction",
           _verify_e2),
    "e3": ("ordinary (Z, A) = (1+x+x^2, 1+x+2x^2+3x^3): coefficient and "
           "moment arrays, polynomials, 2-Hankel transform, recovered "
           "recurrence bands", _verify_e3),
    "e4": ("exponential (Z, A) = ((1+x)^2, (1+x)^3): reconstruction and "
           "coefficient array in closed form, integral identities", _verify_e4),
    "e5": ("exponential (Z, A) = (1+2x+3x^2+4x^3, 1+x+x^2+x^3+x^4): "
           "production matrix, triangle, column sums, 3-Hankel transform",
           _verify_e5),
}

EXAMPLE_IDS = tuple(EXAMPLES)


def verify(example_id: str) -> VerifyReport:
    """Replay one example and report a named pass/fail line per table."""
    if example_id not in EXAMPLES:
        raise PreconditionError(
            f"unknown example {example_id!r}; valid ids: {', '.join(EXAMPLE_IDS)}")
    description, runner = EXAMPLES[example_id]
    recorder = _Recorder()
    runner(recorder)
    return VerifyReport(example_id, description, tuple(recorder.checks))


def verify_all() -> list[VerifyReport]:
    return [verify(example_id) for example_id in EXAMPLE_IDS]
