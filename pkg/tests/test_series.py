"""Truncated series arithmetic and the named products."""

import random

import pytest

from mexparts.errors import NonUnitConstantTerm, TruncationTooSmall
from mexparts.series import (
    TruncatedSeries,
    alternating_squares,
    alternating_triangular,
    neg_pochhammer_inf,
    pochhammer_inf,
    psi,
)


def S(*coeffs):
    return TruncatedSeries(coeffs)


class TestArithmetic:
    def test_add_cancellation(self):
        assert S(1, 1) + S(1, -1) == S(2, 0)

    def test_add_identity(self):
        s = S(3, -2, 7)
        assert TruncatedSeries.zero(2) + s == s

    def test_add_by_hand(self):
        left = S(1, -1, -1, 0, 0, 1)
        right = S(0, 1, 1, 0, 0, 0)
        assert left + right == S(1, 0, 0, 0, 0, 1)

    def test_add_truncates_to_min_order(self):
        assert (S(1, 2, 3) + S(1, 1)).trunc_order == 1

    def test_mul_telescoping(self):
        # (1-q)(1+q+q^2+q^3) = 1 - q^4, and q^4 falls off at order 3
        assert S(1, -1, 0, 0) * S(1, 1, 1, 1) == S(1, 0, 0, 0)

    def test_mul_truncates_to_min_order(self):
        assert (S(1, -1) * S(1, 1, 1, 1)).coeffs == (1, 0)

    def test_mul_identity(self):
        s = S(2, 0, -5, 1)
        assert s * TruncatedSeries.one(3) == s

    def test_mul_binomial_square(self):
        assert S(1, 1, 0) * S(1, 1, 0) == S(1, 2, 1)

    def test_mul_commutative_associative_random(self):
        rng = random.Random(7)
        for _ in range(40):
            a = TruncatedSeries([rng.randint(-5, 5) for _ in range(9)])
            b = TruncatedSeries([rng.randint(-5, 5) for _ in range(9)])
            c = TruncatedSeries([rng.randint(-5, 5) for _ in range(9)])
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_invert_geometric(self):
        assert S(1, -1, 0, 0, 0).invert() == S(1, 1, 1, 1, 1)

    def test_invert_alternating(self):
        assert S(1, 1, 0, 0).invert() == S(1, -1, 1, -1)

    def test_invert_euler_product_gives_partition_numbers(self):
        assert pochhammer_inf(1, 1, 5).invert() == S(1, 1, 2, 3, 5, 7)

    def test_invert_requires_unit_constant(self):
        with pytest.raises(NonUnitConstantTerm):
            S(2, 1).invert()
        with pytest.raises(NonUnitConstantTerm):
            S(0, 1).invert()

    def test_mul_inverse_roundtrip_random(self):
        rng = random.Random(13)
        for _ in range(30):
            coeffs = [rng.choice((1, -1))] + [rng.randint(-4, 4) for _ in range(12)]
            s = TruncatedSeries(coeffs)
            assert s * s.invert() == TruncatedSeries.one(12)

    def test_reduce_mod(self):
        assert S(1, -1).reduce_mod(2) == S(1, 1)
        assert S(1, 1, 2, 3, 5, 7).reduce_mod(5) == S(1, 1, 2, 3, 0, 2)

    def test_reduce_mod_idempotent(self):
        rng = random.Random(3)
        s = TruncatedSeries([rng.randint(-50, 50) for _ in range(20)])
        assert s.reduce_mod(7).reduce_mod(7) == s.reduce_mod(7)

    def test_coefficient_bounds(self):
        s = S(4, 5, 6)
        assert s.coefficient(2) == 6
        with pytest.raises(TruncationTooSmall):
            s.coefficient(3)
        with pytest.raises(ValueError):
            s.coefficient(-1)

    def test_decimal_strings(self):
        assert S(1, -2, 30).to_decimal_strings() == ["1", "-2", "30"]


class TestProducts:
    def test_pochhammer_euler(self):
        assert pochhammer_inf(1, 1, 5) == S(1, -1, -1, 0, 0, 1)

    def test_pochhammer_empty_product(self):
        assert pochhammer_inf(3, 3, 2) == S(1, 0, 0)

    def test_pochhammer_two_factors(self):
        assert pochhammer_inf(2, 4, 6) == S(1, 0, -1, 0, 0, 0, -1)

    def test_neg_pochhammer(self):
        assert neg_pochhammer_inf(1, 4, 5) == S(1, 1, 0, 0, 0, 1)
        assert neg_pochhammer_inf(7, 7, 6) == TruncatedSeries.one(6)
        assert neg_pochhammer_inf(1, 1, 3) == S(1, 1, 1, 2)

    def test_pochhammer_validation(self):
        with pytest.raises(ValueError):
            pochhammer_inf(0, 1, 5)
        with pytest.raises(ValueError):
            neg_pochhammer_inf(1, 0, 5)

    def test_alternating_triangular(self):
        assert alternating_triangular(1, 10) == S(1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1)
        assert alternating_triangular(3, 8) == S(1, 0, 0, -1, 0, 0, 0, 0, 0)
        assert alternating_triangular(1, 0) == S(1)

    def test_alternating_squares(self):
        assert alternating_squares(1, 9) == S(1, -1, 0, 0, 1, 0, 0, 0, 0, -1)
        assert alternating_squares(2, 7) == S(1, 0, -1, 0, 0, 0, 0, 0)
        assert alternating_squares(5, 4) == S(1, 0, 0, 0, 0)

    def test_psi_values(self):
        assert psi(1, 6) == S(1, 1, 0, 1, 0, 0, 1)
        assert psi(2, 6) == S(1, 0, 1, 0, 0, 0, 1)

    def test_psi_product_form(self):
        # psi(q) = (q^2;q^2)_inf^2 / (q;q)_inf
        n = 200
        product = (pochhammer_inf(2, 2, n) * pochhammer_inf(2, 2, n)) * pochhammer_inf(
            1, 1, n
        ).invert()
        assert psi(1, n) == product


class TestEulerInvariants:
    def test_partition_coefficients_positive_and_monotone(self):
        series = pochhammer_inf(1, 1, 200).invert()
        coeffs = series.coeffs
        assert all(c >= 1 for c in coeffs)
        assert all(coeffs[n] >= coeffs[n - 1] for n in range(2, 201))

    def test_mod2_eta_reduction_of_mex_series(self):
        # sum p_tt(n) q^n == (q^t;q^t)^3 / (q;q) mod 2
        from mexparts.mex import genfun_p_tt

        n = 200
        inv = pochhammer_inf(1, 1, n).invert()
        for t in (1, 2, 3, 5, 7):
            pt = pochhammer_inf(t, t, n)
            eta = (pt * pt) * (pt * inv)
            assert genfun_p_tt(t, n).reduce_mod(2) == eta.reduce_mod(2)
