import random
from fractions import Fraction

import pytest

from riordankit import (
    EXPONENTIAL,
    ORDINARY,
    Polynomial,
    PolyFamily,
    PreconditionError,
    SequenceFamily,
    Series,
    coefficient_triangle,
    column_sums,
    from_za,
    inverse,
    orthogonality_order,
    polys_from_determinants,
    polys_from_production,
    production_from_za,
    production_via_matrix,
    recurrence_from_determinants,
    triangle,
)
from support import rand_array, sqrt_pair

SQRT_POLYS = [[1], [-1, 1], [2, -5, 1], [-6, 27, -12, 1], [24, -168, 123, -22, 1]]
BINOMIAL_POLYS = [[1], [-4, 1], [4, -8, 1], [-4, 30, -12, 1], [4, -80, 72, -16, 1]]
ORDINARY_POLYS = [[1], [-1, 1], [0, -2, 1], [1, 0, -3, 1], [2, 2, 1, -4, 1],
                  [-4, 6, 4, 3, -5, 1]]


def sqrt_production(size=12):
    return production_via_matrix(sqrt_pair(size + 1))


def binomial_array(order=17):
    return from_za(ORDINARY, Series([4, 12, 12, 4]), Series([1, 4, 6, 4, 1]), order)


def ordinary_moment(order=16):
    return from_za(ORDINARY, Series([1, 1, 1]), Series([1, 1, 2, 3]), order)


def family_of(array, d, size):
    return column_sums(triangle(array, size), d)


def poly_lists(pf):
    return [list(p.coeffs) for p in pf.polys]


class TestFromProduction:
    def test_sqrt_pair_polynomials(self):
        assert poly_lists(polys_from_production(sqrt_production(), 5)) == SQRT_POLYS

    def test_binomial_polynomials_and_stationary_recurrence(self):
        p = production_via_matrix(binomial_array())
        pf = polys_from_production(p, 9)
        assert poly_lists(pf)[:5] == BINOMIAL_POLYS
        for n in range(5, 9):
            recurred = (pf.polys[n - 1].mul_x() - pf.polys[n - 1].scale(4)
                        - pf.polys[n - 2].scale(6) - pf.polys[n - 3].scale(4)
                        - pf.polys[n - 4])
            assert pf.polys[n] == recurred

    def test_ordinary_polynomials(self):
        p = production_via_matrix(ordinary_moment())
        assert poly_lists(polys_from_production(p, 6)) == ORDINARY_POLYS

    def test_non_monic_superdiagonal_rejected(self):
        rng = random.Random(61)
        array = rand_array(rng, 7, ORDINARY)          # random f1, not 1
        p = production_via_matrix(array)
        if p.entry(0, 1) != 1:
            with pytest.raises(PreconditionError):
                polys_from_production(p, 4)

    def test_monicity_and_degree(self):
        pf = polys_from_production(sqrt_production(), 7)
        for n, poly in enumerate(pf.polys):
            assert poly.degree == n and poly.coeff(n) == 1

    def test_recurrence_evaluation_identity(self):
        rng = random.Random(67)
        for kind in (ORDINARY, EXPONENTIAL):
            array = rand_array(rng, 8, kind, monic=True)
            p = production_via_matrix(array)
            pf = polys_from_production(p, 7)
            for n in range(6):
                residue = pf.polys[n].mul_x() - pf.polys[n + 1]
                for j in range(n + 1):
                    residue = residue - pf.polys[n - j].scale(p.entry(n, n - j))
                assert residue.is_zero


class TestFromDeterminants:
    def test_matches_production_route_sqrt(self):
        fam = family_of(sqrt_pair(13), 2, 13)
        assert poly_lists(polys_from_determinants(fam, 7)) == \
            poly_lists(polys_from_production(sqrt_production(), 7))

    def test_binomial_p3(self):
        fam = family_of(binomial_array(), 3, 12)
        pf = polys_from_determinants(fam, 4)
        assert list(pf.polys[3].coeffs) == [-4, 30, -12, 1]

    def test_classical_case(self):
        fam = SequenceFamily.from_values(1, [[1, 5, 2, 3, 4, 9]])
        pf = polys_from_determinants(fam, 2)
        assert list(pf.polys[1].coeffs) == [-5, 1]

    def test_degenerate_family_rejected(self):
        fam = SequenceFamily.from_values(2, [[1, 0, 0, 0, 0], [1, 0, 0, 0, 0]])
        with pytest.raises(PreconditionError):
            polys_from_determinants(fam, 3)


class TestCoefficientTriangle:
    def test_sqrt_pair_duality(self):
        pf = polys_from_production(sqrt_production(), 7)
        assert coefficient_triangle(pf).rows == triangle(inverse(sqrt_pair(8)), 7).rows

    def test_ordinary_row(self):
        pf = polys_from_production(production_via_matrix(ordinary_moment()), 5)
        assert list(coefficient_triangle(pf).rows[4]) == [2, 2, 1, -4, 1]

    def test_single_row(self):
        pf = PolyFamily((Polynomial((Fraction(1),)),), 1)
        assert coefficient_triangle(pf).to_lists() == [[1]]


class TestOrthogonalityOrder:
    def test_sqrt_pair(self):
        assert orthogonality_order(sqrt_production()) == 2

    def test_binomial(self):
        assert orthogonality_order(production_via_matrix(binomial_array())) == 3

    def test_tridiagonal(self):
        p = production_from_za(ORDINARY, Series([1, 1], order=8),
                               Series([1, 1, 1], order=8), 8)
        assert orthogonality_order(p) == 1

    def test_not_banded_reported(self):
        # a coefficient array's production matrix is generically dense
        array = inverse(
            from_za(ORDINARY, Series([1, 1]), Series([1, 2, 1, 1, 2]), 9))
        dense = production_via_matrix(array)
        assert dense.max_band_offset() == dense.size - 1
        assert orthogonality_order(dense) is None


class TestRecurrenceFromDeterminants:
    def test_sqrt_pair_bands(self):
        fam = family_of(sqrt_pair(13), 2, 13)
        bands = recurrence_from_determinants(fam, 6)
        p = sqrt_production()
        assert list(bands.alpha) == p.band(0)[:6]
        assert list(bands.bands[0]) == p.band(1)[:5]
        assert list(bands.bands[1]) == p.band(2)[:4]

    def test_ordinary_bands(self):
        fam = family_of(ordinary_moment(), 2, 13)
        bands = recurrence_from_determinants(fam, 6)
        p = production_via_matrix(ordinary_moment())
        assert list(bands.alpha) == p.band(0)[:6] == [1] * 6
        assert list(bands.bands[0]) == p.band(1)[:5] == [1, 2, 2, 2, 2]
        assert list(bands.bands[1]) == p.band(2)[:4] == [1, 3, 3, 3]

    def test_wrong_d_rejected(self):
        fam = SequenceFamily.from_values(3, [[1, 2], [1, 3], [1, 4]])
        with pytest.raises(PreconditionError):
            recurrence_from_determinants(fam, 2)

    def test_degenerate_denominator_rejected(self):
        fam = SequenceFamily.from_values(2, [[1, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]])
        with pytest.raises(PreconditionError):
            recurrence_from_determinants(fam, 3)
