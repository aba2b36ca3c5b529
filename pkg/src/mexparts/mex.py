"""The mex statistic on partitions and the counting functions built on it.

``mex_of(partition, MexParams(A, a))`` is the smallest positive integer
congruent to a (mod A) that does not occur as a part.  ``p_Aa(n)`` counts
partitions of n whose mex lands in the residue a (mod 2A); the enumeration
oracle computes it definitionally for any (A, a), while the (t, t) and
(2t, t) families also have a generating-function route and a closed
expression in ordinary partition numbers:

    sum p_tt(n) q^n  = (1/(q;q)_inf) * sum_{n>=0} (-1)^n q^(t n(n+1)/2)
    sum p_2tt(n) q^n = (1/(q;q)_inf) * sum_{n>=0} (-1)^n q^(t n^2)

    p_tt(t, n)  = p(n) + sum_{r>=1} p(n - t r(2r+1)) - sum_{s>=1} p(n - t s(2s-1))
    p_2tt(t, n) = p(n) + sum_{r>=1} p(n - 4t r^2)    - sum_{s>=1} p(n - t(2s-1)^2)

with p(m) = 0 for negative m.  The three routes agree; the test suite pins
the equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleBoundExceeded
from .partitions import Partition, enumerate_partitions, partition_count, partition_generating_series
from .series import TruncatedSeries, alternating_squares, alternating_triangular

__all__ = [
    "MexParams",
    "mex_of",
    "mex_count_oracle",
    "genfun_p_tt",
    "genfun_p_2tt",
    "identity_p_tt",
    "identity_p_2tt",
    "MEX_ORACLE_BOUND",
]

MEX_ORACLE_BOUND = 60


@dataclass(frozen=True)
class MexParams:
    """Residue a modulo A defining which arithmetic progression the mex runs over."""

    A: int
    a: int

    def __post_init__(self):
        if self.A < 1:
            raise ValueError("A must be positive")
        if not 1 <= self.a <= self.A:
            raise ValueError("a must satisfy 1 <= a <= A")


def mex_of(partition: Partition, params: MexParams) -> int:
    """Smallest positive integer == a (mod A) that is not a part."""
    present = set(partition.parts)
    v = params.a
    while v in present:
        v += params.A
    return v


def mex_count_oracle(n: int, params: MexParams) -> int:
    """Count partitions of n with mex == a (mod 2A), by full enumeration.

    Exponential in n; refuses n beyond the documented bound rather than
    silently grinding.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MEX_ORACLE_BOUND:
        raise OracleBoundExceeded(
            f"mex_count_oracle is enumeration-backed and limited to n <= {MEX_ORACLE_BOUND}"
        )
    target = params.a % (2 * params.A)
    return sum(
        1 for lam in enumerate_partitions(n) if mex_of(lam, params) % (2 * params.A) == target
    )


def genfun_p_tt(t: int, order: int) -> TruncatedSeries:
    """Series whose coefficient of q^n is p_{t,t}(n)."""
    return partition_generating_series(order) * alternating_triangular(t, order)


def genfun_p_2tt(t: int, order: int) -> TruncatedSeries:
    """Series whose coefficient of q^n is p_{2t,t}(n)."""
    return partition_generating_series(order) * alternating_squares(t, order)


def identity_p_tt(t: int, n: int) -> int:
    """p_{t,t}(n) from ordinary partition numbers; both sums are finite."""
    if t < 1:
        raise ValueError("t must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = partition_count(n)
    r = 1
    while n - t * r * (2 * r + 1) >= 0:
        total += partition_count(n - t * r * (2 * r + 1))
        r += 1
    s = 1
    while n - t * s * (2 * s - 1) >= 0:
        total -= partition_count(n - t * s * (2 * s - 1))
        s += 1
    return total


def identity_p_2tt(t: int, n: int) -> int:
    """p_{2t,t}(n) from ordinary partition numbers."""
    if t < 1:
        raise ValueError("t must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = partition_count(n)
    r = 1
    while n - 4 * t * r * r >= 0:
        total += partition_count(n - 4 * t * r * r)
        r += 1
    s = 1
    while n - t * (2 * s - 1) ** 2 >= 0:
        total -= partition_count(n - t * (2 * s - 1) ** 2)
        s += 1
    return total
