import random
from fractions import Fraction
from math import comb

import pytest

from riordankit import (
    EGF,
    EXPONENTIAL,
    OGF,
    ORDINARY,
    PreconditionError,
    ProductionMatrix,
    Series,
    TruncationError,
    coefficient_array_from_za,
    column_sums,
    entry,
    from_za,
    generate_from_production,
    inverse,
    production_from_za,
    production_via_matrix,
    production_via_series,
    triangle,
    za_sequences,
)
from support import (
    identity_array,
    one_plus_x,
    pascal,
    rand_array,
    rand_fraction,
    sqrt_pair,
)

SQRT_TRIANGLE = [
    [1],
    [1, 1],
    [3, 5, 1],
    [15, 33, 12, 1],
    [105, 279, 141, 22, 1],
    [945, 2895, 1830, 405, 35, 1],
    [10395, 35685, 26685, 7500, 930, 51, 1],
]
SQRT_PRODUCTION = [
    [1, 1, 0, 0, 0, 0, 0],
    [2, 4, 1, 0, 0, 0, 0],
    [2, 10, 7, 1, 0, 0, 0],
    [0, 12, 24, 10, 1, 0, 0],
    [0, 0, 36, 44, 13, 1, 0],
    [0, 0, 0, 80, 70, 16, 1],
    [0, 0, 0, 0, 150, 102, 19],
]


def binomial_array(order):
    """Ordinary array with entries C(4n, 3n+k), built from its (Z, A) data."""
    return from_za(ORDINARY, Series([4, 12, 12, 4]), Series([1, 4, 6, 4, 1]), order)


class TestEntry:
    def test_exponential_sqrt_pair(self):
        assert entry(sqrt_pair(8), 4, 1) == 279

    def test_ordinary_binomial(self):
        assert entry(binomial_array(8), 3, 1) == 66

    def test_pascal(self):
        assert entry(pascal(8), 4, 2) == 6

    def test_out_of_range(self):
        with pytest.raises(TruncationError):
            entry(pascal(6), 6, 0)
        with pytest.raises(TruncationError):
            entry(pascal(6), 2, 3)


class TestTriangle:
    def test_sqrt_pair_seven_rows(self):
        assert triangle(sqrt_pair(8), 7).to_lists() == SQRT_TRIANGLE

    def test_ordinary_coefficient_rows(self):
        coeff = coefficient_array_from_za(ORDINARY, Series([1, 1, 1]),
                                          Series([1, 1, 2, 3]), 8)
        assert triangle(coeff, 7).to_lists()[6] == [-3, -14, 9, 6, 6, -6, 1]

    def test_identity(self):
        t = triangle(identity_array(5))
        assert t.to_lists() == [[1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0, 1]]

    def test_binomial_closed_form(self):
        t = triangle(binomial_array(8))
        assert all(t.entry(n, k) == comb(4 * n, 3 * n + k)
                   for n in range(8) for k in range(n + 1))


class TestInverse:
    def test_sqrt_pair_closed_form(self):
        inv = inverse(sqrt_pair(10))
        one = Series.one(10, EGF)
        assert inv.g == one.div(one_plus_x(10, EGF))
        assert inv.f == (one - one_plus_x(10, EGF) ** -2).scale(Fraction(1, 2))

    def test_involution_random(self):
        rng = random.Random(17)
        for kind in (ORDINARY, EXPONENTIAL):
            for _ in range(10):
                array = rand_array(rng, 7, kind)
                again = inverse(inverse(array))
                assert again.g == array.g and again.f == array.f

    def test_identity(self):
        inv = inverse(identity_array(5))
        assert inv.g == Series.one(5) and inv.f == Series.x(5)

    def test_product_is_identity(self):
        rng = random.Random(23)
        array = rand_array(rng, 7, EXPONENTIAL)
        t = triangle(array).to_lists()
        u = triangle(inverse(array)).to_lists()
        n = len(t)
        for i in range(n):
            for j in range(n):
                got = sum(t[i][k] * u[k][j] for k in range(min(i, n - 1) + 1)
                          if k <= i and j <= k)
                assert got == (1 if i == j else 0)


class TestProduction:
    def test_sqrt_pair_matrix(self):
        p = production_via_matrix(sqrt_pair(9))
        assert p.square(7) == SQRT_PRODUCTION

    def test_binomial_first_column(self):
        p = production_via_matrix(binomial_array(9))
        assert p.band(0)[0] == 4
        assert [p.entry(n, 0) for n in range(7)] == [4, 12, 12, 4, 0, 0, 0]

    def test_series_route_sqrt_pair(self):
        assert production_via_series(sqrt_pair(9)) == production_via_matrix(sqrt_pair(9))

    def test_series_entry_formula(self):
        # p[1][1] = Z_0 + A_1 for the exponential kind
        p = production_via_series(sqrt_pair(9))
        assert p.entry(1, 1) == 4

    def test_pascal_bands(self):
        got = production_via_matrix(pascal(8))
        derived = production_from_za(ORDINARY, Series([1], order=7),
                                     Series([1, 1], order=7), 7)
        assert got == derived
        assert [got.entry(n, 0) for n in range(3)] == [1, 0, 0]

    def test_routes_agree_random(self):
        rng = random.Random(31)
        for kind in (ORDINARY, EXPONENTIAL):
            for _ in range(10):
                array = rand_array(rng, 7, kind)
                assert production_via_series(array) == production_via_matrix(array)

    def test_band_count_matches_degrees(self):
        p = production_via_matrix(sqrt_pair(10))
        assert p.max_band_offset() == 2
        assert all(v == 1 for v in p.band(-1))


class TestZASequences:
    def test_sqrt_pair(self):
        z, a = za_sequences(sqrt_pair(8))
        assert list(z.coeffs[:4]) == [1, 2, 1, 0]
        assert list(a.coeffs[:5]) == [1, 3, 3, 1, 0]

    def test_pascal(self):
        z, a = za_sequences(pascal(8))
        assert list(z.coeffs[:4]) == [1, 0, 0, 0]
        assert list(a.coeffs[:4]) == [1, 1, 0, 0]

    def test_identity(self):
        z, a = za_sequences(identity_array(6))
        assert z.is_zero
        assert list(a.coeffs[:3]) == [1, 0, 0]


class TestFromZA:
    def test_exponential_reconstruction(self):
        got = from_za(EXPONENTIAL, Series([1, 2, 1], EGF), Series([1, 3, 3, 1], EGF), 10)
        want = sqrt_pair(10)
        assert got.g == want.g and got.f == want.f

    def test_ordinary_moment_rows(self):
        moment = from_za(ORDINARY, Series([1, 1, 1]), Series([1, 1, 2, 3]), 8)
        assert triangle(moment, 5).to_lists() == [
            [1], [1, 1], [2, 2, 1], [5, 6, 3, 1], [14, 20, 11, 4, 1]]

    def test_exponential_second_example_row(self):
        array = from_za(EXPONENTIAL, Series([1, 2, 3, 4], EGF),
                        Series([1, 1, 1, 1, 1], EGF), 8)
        assert triangle(array, 6).to_lists()[5] == [825, 945, 420, 105, 15, 1]

    def test_zero_a_constant_rejected(self):
        with pytest.raises(PreconditionError):
            from_za(ORDINARY, Series([1]), Series([0, 1]), 8)

    def test_za_round_trip_random(self):
        rng = random.Random(37)
        for kind in (ORDINARY, EXPONENTIAL):
            skind = OGF if kind == ORDINARY else EGF
            for _ in range(10):
                d = rng.randint(1, 3)
                z = Series([rand_fraction(rng) for _ in range(d + 1)], skind)
                a = Series([Fraction(1)] + [rand_fraction(rng) for _ in range(d + 1)],
                           skind)
                array = from_za(kind, z, a, 9)
                z_back, a_back = za_sequences(array)
                assert list(z_back.coeffs) == list(Series(z.coeffs, skind, order=8).coeffs)
                assert list(a_back.coeffs) == list(Series(a.coeffs, skind, order=8).coeffs)


class TestCoefficientArray:
    def test_equals_inverse_of_moment(self):
        z, a = Series([1, 1, 1]), Series([1, 1, 2, 3])
        coeff = coefficient_array_from_za(ORDINARY, z, a, 9)
        inv = inverse(from_za(ORDINARY, z, a, 9))
        assert coeff.g == inv.g and coeff.f == inv.f

    def test_ordinary_closed_form(self):
        coeff = coefficient_array_from_za(ORDINARY, Series([1, 1, 1]),
                                          Series([1, 1, 2, 3]), 9)
        denom = Series([1, 1, 2, 3], order=9)
        assert coeff.g == Series([1, 0, 1, 2], order=9).div(denom)
        assert coeff.f == Series.one(9).div(denom).mul_x()

    def test_exponential_closed_form(self):
        coeff = coefficient_array_from_za(EXPONENTIAL, Series([1, 2, 1], EGF),
                                          Series([1, 3, 3, 1], EGF), 9)
        one = Series.one(9, EGF)
        assert coeff.g == one.div(one_plus_x(9, EGF))

    def test_quartic_a_first_component(self):
        coeff = coefficient_array_from_za(EXPONENTIAL, Series([1, 2, 3, 4], EGF),
                                          Series([1, 1, 1, 1, 1], EGF), 9)
        assert coeff.g == Series.one(9, EGF).div(Series([1, 1, 1, 1, 1], EGF, order=9))


class TestGenerateFromProduction:
    def test_sqrt_pair_regenerated(self):
        array = sqrt_pair(9)
        p = production_via_matrix(array)
        assert generate_from_production(p, 7).rows == triangle(array, 7).rows

    def test_quartic_a_row(self):
        array = from_za(EXPONENTIAL, Series([1, 2, 3, 4], EGF),
                        Series([1, 1, 1, 1, 1], EGF), 9)
        regen = generate_from_production(production_via_matrix(array), 7)
        assert list(regen.rows[3]) == [15, 15, 6, 1]

    def test_superdiagonal_only_gives_shifted_identity(self):
        rows = tuple(tuple(Fraction(1 if k == n + 1 else 0) for k in range(n + 2))
                     for n in range(4))
        p = ProductionMatrix(rows)
        got = generate_from_production(p, 4).to_lists()
        assert got == [[1], [0, 1], [0, 0, 1], [0, 0, 0, 1]]

    def test_random_round_trip(self):
        rng = random.Random(41)
        for kind in (ORDINARY, EXPONENTIAL):
            array = rand_array(rng, 8, kind)
            p = production_via_matrix(array)
            assert generate_from_production(p, 8).rows == triangle(array).rows


class TestColumnSums:
    def test_sqrt_pair_family(self):
        fam = column_sums(triangle(sqrt_pair(9)), 2)
        assert list(fam.member(0)[:6]) == [1, 1, 3, 15, 105, 945]
        assert list(fam.member(1)[:6]) == [1, 2, 8, 48, 384, 3840]

    def test_binomial_three_sums(self):
        fam = column_sums(triangle(binomial_array(8)), 3)
        assert list(fam.member(2)[:5]) == [1, 5, 37, 298, 2500]

    def test_generating_function_of_sums(self):
        array = from_za(EXPONENTIAL, Series([1, 2, 3, 4], EGF),
                        Series([1, 1, 1, 1, 1], EGF), 9)
        fam = column_sums(triangle(array), 3)
        gf = array.g * (Series.one(9, EGF) + array.f)
        assert [gf.seq_term(n) for n in range(9)] == list(fam.member(1))

    def test_too_many_columns(self):
        with pytest.raises(PreconditionError):
            column_sums(triangle(pascal(4)), 5)
