"""The mex statistic and the three routes to the (t,t) and (2t,t) counts."""

import pytest

from mexparts.errors import OracleBoundExceeded
from mexparts.mex import (
    MexParams,
    genfun_p_2tt,
    genfun_p_tt,
    identity_p_2tt,
    identity_p_tt,
    mex_count_oracle,
    mex_of,
)
from mexparts.partitions import Partition, enumerate_partitions, partition_count


class TestMexOf:
    def test_worked_table_rows(self):
        # mex values for the partitions of 5 under (A, a) = (2, 2)
        params = MexParams(2, 2)
        table = {
            (5,): 2,
            (4, 1): 2,
            (3, 2): 4,
            (3, 1, 1): 2,
            (2, 2, 1): 4,
            (2, 1, 1, 1): 4,
            (1, 1, 1, 1, 1): 2,
        }
        for parts, expected in table.items():
            assert mex_of(Partition(parts), params) == expected

    def test_empty_partition(self):
        assert mex_of(Partition(()), MexParams(7, 3)) == 3

    def test_always_in_residue_class(self):
        params = MexParams(3, 2)
        for lam in enumerate_partitions(9):
            assert mex_of(lam, params) % 3 == 2

    def test_params_validation(self):
        with pytest.raises(ValueError):
            MexParams(0, 1)
        with pytest.raises(ValueError):
            MexParams(3, 4)
        with pytest.raises(ValueError):
            MexParams(3, 0)


class TestOracle:
    def test_worked_example(self):
        assert mex_count_oracle(5, MexParams(2, 2)) == 4

    def test_n0(self):
        assert mex_count_oracle(0, MexParams(4, 3)) == 1

    def test_n2_11(self):
        # {2} has mex 1 (counted); {1,1} has mex 2 (not)
        assert mex_count_oracle(2, MexParams(1, 1)) == 1

    def test_bound_enforced(self):
        with pytest.raises(OracleBoundExceeded):
            mex_count_oracle(61, MexParams(1, 1))


class TestGeneratingFunctions:
    def test_p_tt_worked_example(self):
        assert genfun_p_tt(2, 5).coefficient(5) == 4

    def test_constant_terms(self):
        assert genfun_p_tt(1, 0).coefficient(0) == 1
        assert genfun_p_2tt(1, 0).coefficient(0) == 1

    def test_p_tt_t3_matches_oracle(self):
        series = genfun_p_tt(3, 5)
        for n in range(6):
            assert series.coefficient(n) == mex_count_oracle(n, MexParams(3, 3))

    def test_p_2tt_matches_oracle(self):
        for t, A in ((1, 2), (2, 4)):
            series = genfun_p_2tt(t, 12)
            for n in range(13):
                assert series.coefficient(n) == mex_count_oracle(n, MexParams(A, t))

    def test_coefficients_nonnegative(self):
        for t in (1, 2, 3, 5, 7):
            assert all(c >= 0 for c in genfun_p_tt(t, 500).coeffs)
            assert all(c >= 0 for c in genfun_p_2tt(t, 500).coeffs)


class TestIdentities:
    def test_p_tt_worked_example(self):
        assert identity_p_tt(2, 5) == 4

    def test_p_tt_n0(self):
        assert identity_p_tt(1, 0) == 1

    def test_p_tt_t1_n10_by_hand(self):
        # p(10) + p(7) + p(0) - p(9) - p(4) = 42 + 15 + 1 - 30 - 5
        assert identity_p_tt(1, 10) == 23
        assert genfun_p_tt(1, 10).coefficient(10) == 23

    def test_p_2tt_small(self):
        assert identity_p_2tt(1, 0) == 1
        assert identity_p_2tt(1, 1) == 0  # {1} has mex 3 == 3 (mod 4), not counted

    def test_p_2tt_t3_matches_series(self):
        series = genfun_p_2tt(3, 30)
        for n in range(31):
            assert identity_p_2tt(3, n) == series.coefficient(n)

    def test_validation(self):
        with pytest.raises(ValueError):
            identity_p_tt(0, 5)
        with pytest.raises(ValueError):
            identity_p_2tt(1, -1)


class TestThreeWayEquivalence:
    @pytest.mark.parametrize("t", [1, 2, 3, 5, 7])
    def test_tt_family(self, t):
        series = genfun_p_tt(t, 40)
        for n in range(41):
            oracle = mex_count_oracle(n, MexParams(t, t))
            assert oracle == identity_p_tt(t, n) == series.coefficient(n)

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_2tt_family(self, t):
        series = genfun_p_2tt(t, 40)
        for n in range(41):
            oracle = mex_count_oracle(n, MexParams(2 * t, t))
            assert oracle == identity_p_2tt(t, n) == series.coefficient(n)

    def test_p21_counts_even_length_partitions(self):
        # the (2,1) count coincides with partitions having an even number
        # of parts
        for n in range(41):
            even_length = sum(1 for lam in enumerate_partitions(n) if len(lam) % 2 == 0)
            assert identity_p_2tt(1, n) == even_length

    def test_negative_argument_convention(self):
        # identity sums must drop negative arguments, matching p(n) = 0 there
        assert identity_p_tt(5, 3) == partition_count(3)
