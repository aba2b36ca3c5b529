"""Singular overpartition counts: enumeration oracle against the series."""

import pytest

from mexparts.errors import InvalidSingularParams, OracleBoundExceeded
from mexparts.singular import (
    SingularParams,
    genfun_singular,
    singular_overpartition_oracle,
)


class TestParams:
    def test_valid(self):
        assert SingularParams(3, 1).overline_residues == frozenset({1, 2})
        assert SingularParams(4, 2).self_paired
        assert not SingularParams(8, 2).self_paired

    def test_invalid(self):
        with pytest.raises(InvalidSingularParams):
            SingularParams(2, 1)
        with pytest.raises(InvalidSingularParams):
            SingularParams(4, 3)
        with pytest.raises(InvalidSingularParams):
            SingularParams(5, 0)


class TestOracle:
    def test_worked_example(self):
        # the ten objects for (3, 1) at n = 4:
        # 4, 4', 2+2, 2'+2, 2+1+1, 2'+1+1, 2+1'+1, 2'+1'+1, 1+1+1+1, 1'+1+1+1
        assert singular_overpartition_oracle(4, SingularParams(3, 1)) == 10

    def test_empty(self):
        assert singular_overpartition_oracle(0, SingularParams(5, 2)) == 1

    def test_n1_41(self):
        # {1} and {1 overlined}
        assert singular_overpartition_oracle(1, SingularParams(4, 1)) == 2

    def test_no_part_divisible_by_k(self):
        # for (3,1) at n = 3: partitions avoiding multiples of 3 are
        # 2+1 (both overlineable: factor 4) and 1+1+1 (factor 2)
        assert singular_overpartition_oracle(3, SingularParams(3, 1)) == 6

    def test_bound(self):
        with pytest.raises(OracleBoundExceeded):
            singular_overpartition_oracle(51, SingularParams(3, 1))


class TestSeries:
    def test_worked_example(self):
        assert genfun_singular(SingularParams(3, 1), 4).coefficient(4) == 10

    def test_constant_term(self):
        for k, i in ((3, 1), (4, 2), (12, 3)):
            assert genfun_singular(SingularParams(k, i), 0).coefficient(0) == 1

    def test_41_matches_oracle_to_20(self):
        series = genfun_singular(SingularParams(4, 1), 20)
        for n in range(21):
            assert series.coefficient(n) == singular_overpartition_oracle(
                n, SingularParams(4, 1)
            )


@pytest.mark.parametrize("k,i", [(3, 1), (4, 1), (8, 2), (12, 3), (20, 5), (28, 7)])
def test_oracle_series_equivalence(k, i):
    params = SingularParams(k, i)
    series = genfun_singular(params, 30)
    for n in range(31):
        assert series.coefficient(n) == singular_overpartition_oracle(n, params)


def test_self_paired_regression_42():
    # i = k - i: the overline factor appears squared in the product, so a
    # value in that class contributes 3 ways when it occurs once (plain, or
    # overlined via either slot) and 4 ways when it occurs twice or more.
    params = SingularParams(4, 2)
    series = genfun_singular(params, 20)
    for n in range(21):
        assert series.coefficient(n) == singular_overpartition_oracle(n, params)
    # pin the first nontrivial value: 2, 2', 2'' and 1+1
    assert singular_overpartition_oracle(2, params) == 4
