"""Partition counting, enumeration order, and restricted counts."""

import pytest

from mexparts.partitions import (
    ALL_PARTS,
    EVEN_PARTS,
    ODD_PARTS,
    Partition,
    ResidueClassRule,
    enumerate_partitions,
    partition_count,
    partition_generating_series,
    restricted_count,
)


class TestPartitionType:
    def test_valid_construction(self):
        lam = Partition((3, 2, 2, 1))
        assert lam.n == 8
        assert len(lam) == 4

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((2, 3))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((3, 0))

    def test_empty_partition(self):
        assert Partition(()).n == 0

    def test_equality_and_hash(self):
        assert Partition((2, 1)) == Partition((2, 1))
        assert len({Partition((2, 1)), Partition((2, 1))}) == 1


class TestPartitionCount:
    def test_small_values(self):
        assert partition_count(5) == 7
        assert partition_count(4) == 5
        assert partition_count(0) == 1

    def test_negative_convention(self):
        assert partition_count(-3) == 0
        assert partition_count(-1) == 0

    def test_against_dense_series_inversion(self):
        series = partition_generating_series(500)
        for n in range(501):
            assert partition_count(n) == series.coefficient(n)

    def test_known_large_value(self):
        # p(100), a classical table entry
        assert partition_count(100) == 190569292


class TestEnumeration:
    def test_n0(self):
        assert [lam.parts for lam in enumerate_partitions(0)] == [()]

    def test_n3(self):
        assert [lam.parts for lam in enumerate_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]

    def test_n5_table_order(self):
        expected = [
            (5,),
            (4, 1),
            (3, 2),
            (3, 1, 1),
            (2, 2, 1),
            (2, 1, 1, 1),
            (1, 1, 1, 1, 1),
        ]
        assert [lam.parts for lam in enumerate_partitions(5)] == expected

    def test_counts_match_partition_count(self):
        for n in range(41):
            assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)

    def test_yielded_partitions_satisfy_invariants(self):
        for n in range(26):
            for lam in enumerate_partitions(n):
                assert sum(lam.parts) == n == lam.n
                assert all(
                    lam.parts[j] >= lam.parts[j + 1] >= 1 for j in range(len(lam.parts) - 1)
                )

    def test_strictly_decreasing_lexicographic(self):
        for n in (6, 9, 12):
            seen = [lam.parts for lam in enumerate_partitions(n)]
            assert seen == sorted(seen, reverse=True)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(-1))


class TestResidueClassRule:
    def test_signed_expansion(self):
        rule = ResidueClassRule.from_signed_residues(32, (4, 6, 8, 10))
        assert rule.allowed == frozenset({4, 6, 8, 10, 22, 24, 26, 28})

    def test_validation(self):
        with pytest.raises(ValueError):
            ResidueClassRule(0, frozenset({0}))
        with pytest.raises(ValueError):
            ResidueClassRule(4, frozenset())
        with pytest.raises(ValueError):
            ResidueClassRule(4, frozenset({4}))


class TestRestrictedCount:
    def test_even_parts(self):
        assert restricted_count(4, EVEN_PARTS) == 2  # 4, 2+2

    def test_odd_parts(self):
        assert restricted_count(3, ODD_PARTS) == 2  # 3, 1+1+1

    def test_mod32_classes(self):
        rule = ResidueClassRule.from_signed_residues(32, (4, 6, 8, 10))
        assert restricted_count(4, rule) == 1  # the single part 4

    def test_unrestricted_equals_partition_count(self):
        for n in range(201):
            assert restricted_count(n, ALL_PARTS) == partition_count(n)

    def test_odd_equals_distinct_euler(self):
        # Euler's theorem; the distinct-parts side is an independent
        # enumeration filter.
        for n in range(61):
            distinct = sum(
                1
                for lam in enumerate_partitions(n)
                if len(set(lam.parts)) == len(lam.parts)
            )
            assert restricted_count(n, ODD_PARTS) == distinct

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            restricted_count(-1, EVEN_PARTS)
