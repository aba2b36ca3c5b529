"""Singular overpartition counts C(k, i; n) by enumeration and by series.

A singular overpartition for parameters (k, i) is an overpartition with no
part divisible by k in which only parts == +-i (mod k) may be overlined
(first occurrence of a value only).  The generating function is

    (q^k; q^k)_inf (-q^i; q^k)_inf (-q^(k-i); q^k)_inf / (q; q)_inf.

The enumeration oracle mirrors the product factor by factor.  Each of the
two (-q^.; q^k) factors offers an independent "one overlined copy of this
value" choice, so a distinct part value in an overlineable class normally
contributes a factor 2.  In the degenerate case i = k - i (k even) the two
factors coincide on the same residue class and the product squares: a value
occurring once contributes 1 + 2 = 3 (plain, or overlined via either
factor), and a value occurring at least twice contributes 4 (additionally
both overline slots used on two copies).  Divisibility by k is a property
of the underlying value, overlined or not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSingularParams, OracleBoundExceeded
from .partitions import enumerate_partitions, partition_generating_series
from .series import TruncatedSeries, neg_pochhammer_inf, pochhammer_inf

__all__ = [
    "SingularParams",
    "singular_overpartition_oracle",
    "genfun_singular",
    "SINGULAR_ORACLE_BOUND",
]

SINGULAR_ORACLE_BOUND = 50


@dataclass(frozen=True)
class SingularParams:
    k: int
    i: int

    def __post_init__(self):
        if self.k < 3:
            raise InvalidSingularParams(f"k must be at least 3, got {self.k}")
        if not 1 <= self.i <= self.k // 2:
            raise InvalidSingularParams(
                f"i must satisfy 1 <= i <= floor(k/2) = {self.k // 2}, got {self.i}"
            )

    @property
    def overline_residues(self) -> frozenset[int]:
        return frozenset({self.i % self.k, (self.k - self.i) % self.k})

    @property
    def self_paired(self) -> bool:
        # i == k - i (mod k): the two overline factors land on one residue class
        return self.i % self.k == (self.k - self.i) % self.k


def singular_overpartition_oracle(n: int, params: SingularParams) -> int:
    """Count singular overpartitions of n by enumerating underlying partitions."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > SINGULAR_ORACLE_BOUND:
        raise OracleBoundExceeded(
            f"singular_overpartition_oracle is limited to n <= {SINGULAR_ORACLE_BOUND}"
        )
    k = params.k
    residues = params.overline_residues
    doubled = params.self_paired
    total = 0
    for lam in enumerate_partitions(n):
        if any(v % k == 0 for v in lam.parts):
            continue
        weight = 1
        if doubled:
            seen_once = set()
            seen_twice = set()
            for v in lam.parts:
                if v % k in residues:
                    if v in seen_once:
                        seen_twice.add(v)
                    seen_once.add(v)
            weight = 3 ** (len(seen_once) - len(seen_twice)) * 4 ** len(seen_twice)
        else:
            distinct = {v for v in lam.parts if v % k in residues}
            weight = 2 ** len(distinct)
        total += weight
    return total


def genfun_singular(params: SingularParams, order: int) -> TruncatedSeries:
    """Series whose coefficient of q^n is C(k, i; n)."""
    k, i = params.k, params.i
    product = pochhammer_inf(k, k, order) * neg_pochhammer_inf(i, k, order)
    product = product * neg_pochhammer_inf(k - i, k, order)
    return product * partition_generating_series(order)
