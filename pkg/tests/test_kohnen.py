import pytest

from sklift.elliptic import eigenform_field_poly, eigenforms
from sklift.errors import (
    DimensionMismatchError,
    NotAnEigenformError,
    TruncationError,
    UsageError,
)
from sklift.kohnen import (
    PlusSpaceForm,
    _eigenvalue_on,
    odd_sigma_series,
    plus_eigenforms,
    plus_hecke,
    plus_hecke_matrix,
    plus_space_basis,
    shimura_match,
    theta_series,
)
from sklift.numeric import QuadExt
from sklift.qseries import QSeries


class TestGenerators:
    def test_theta(self):
        th = theta_series(10)
        assert th.coefficient(0) == 1
        assert th.coefficient(1) == 2
        assert th.coefficient(4) == 2
        assert th.coefficient(2) == 0
        assert th.coefficient(9) == 2

    def test_odd_sigma(self):
        f2 = odd_sigma_series(10)
        assert f2.coefficient(1) == 1
        assert f2.coefficient(3) == 4
        assert f2.coefficient(2) == 0
        assert f2.coefficient(9) == 13


class TestPlusSpace:
    def test_dimensions_match_integral_weight(self):
        assert len(plus_space_basis(8, 80)) == 0
        assert len(plus_space_basis(10, 80)) == 1
        assert len(plus_space_basis(12, 96)) == 1
        assert len(plus_space_basis(14, 112)) == 1
        assert len(plus_space_basis(16, 128)) == 2

    def test_known_leading_coefficients(self, plus10, plus12):
        # classical leading data of the two index-1 Jacobi cusp forms
        assert plus10.c(3) == 1 and plus10.c(4) == -2
        assert plus12.c(3) == 1 and plus12.c(4) == 10

    def test_support_enforced_to_full_truncation(self, plus10):
        for n in range(plus10.prec + 1):
            if n == 0 or n % 4 in (1, 2):
                assert plus10.c(n) == 0, n

    def test_basis_is_prefix_stable_across_truncations(self):
        # the cache reuses longer cached expansions, which is only sound
        # because the normalized basis does not depend on the truncation
        for k in (10, 16):
            long = plus_space_basis(k, 260)
            short = plus_space_basis(k, 130)
            for a, b in zip(long, short):
                assert a.series.coeffs[:131] == b.series.coeffs

    def test_undersized_constraint_bound_detected(self):
        with pytest.raises(DimensionMismatchError):
            plus_space_basis(10, 80, constraint_bound=2)

    def test_odd_weight_rejected(self):
        with pytest.raises(UsageError):
            plus_space_basis(11, 80)

    def test_bad_support_rejected(self):
        with pytest.raises(Exception):
            PlusSpaceForm(10, QSeries([0, 1, 0, 0], 3))


class TestPlusHecke:
    def test_eigenvalues_match_integral_side(self, plus10, plus12):
        assert _eigenvalue_on(plus10, 2) == -528
        assert _eigenvalue_on(plus12, 2) == -288

    def test_prime3_eigenvalue(self, plus10, f18):
        assert _eigenvalue_on(plus10, 3) == f18.a(3) == -4284

    def test_zero_form(self, plus10):
        zero = PlusSpaceForm(10, QSeries([0] * 73, 72))
        assert plus_hecke(zero, 2).series.is_zero()

    def test_insufficient_truncation(self, plus10):
        short = PlusSpaceForm(10, plus10.series.truncate(3))
        with pytest.raises(TruncationError):
            plus_hecke(short, 2)

    def test_operators_commute(self):
        for k in (10, 12):
            basis = plus_space_basis(k, 360)
            m4 = plus_hecke_matrix(basis, 2)
            m9 = plus_hecke_matrix(basis, 3)
            assert m4 @ m9 == m9 @ m4

    def test_charpoly_matches_integral_weight(self):
        # same exact polynomial for the index-4 operator and the prime-2
        # operator on the corresponding integral-weight space
        for k, prec in ((10, 200), (12, 200), (16, 200)):
            plus_poly = plus_hecke_matrix(plus_space_basis(k, prec), 2).charpoly()
            ell_poly = eigenform_field_poly(2 * k - 2, 24)
            assert plus_poly == ell_poly, k

    def test_not_an_eigenform_witness(self):
        g = plus_space_basis(16, 200)[0]  # staircase vector, not an eigenform
        with pytest.raises(NotAnEigenformError):
            _eigenvalue_on(g, 2)


class TestShimura:
    def test_dim_one_matches(self, plus10, plus12):
        assert shimura_match(plus10).weight == 18
        assert shimura_match(plus10).a(2) == -528
        assert shimura_match(plus12).a(2) == -288

    def test_dim_two_quadratic_match(self):
        pairs = plus_eigenforms(16, 200)
        assert len(pairs) == 2
        cands = eigenforms(30, 24)
        matched = set()
        for g, lam in pairs:
            assert isinstance(lam, QuadExt) and lam.d == 51349
            f = shimura_match(g, cands)
            assert f.a(2) == lam
            matched.add(id(f))
        assert len(matched) == 2

    def test_eigenvalue_verified_before_matching(self, plus10):
        # a plus form that is not an eigenform cannot be matched
        g = plus_space_basis(16, 200)[0]
        with pytest.raises(NotAnEigenformError):
            shimura_match(g, eigenforms(30, 24))
