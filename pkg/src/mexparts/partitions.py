"""Partition counting and exhaustive enumeration.

``partition_count`` serves p(n) from a process-wide table that grows
geometrically; the table is filled by inverting the Euler product
(q;q)_inf, iterating only over its pentagonal-number support so the exact
big-integer table reaches n around 5*10^4 in seconds.  ``enumerate_partitions``
is the ground-truth oracle used by the mex and overpartition counters; it
yields every partition of n exactly once in decreasing lexicographic order.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .series import TruncatedSeries, pochhammer_inf

__all__ = [
    "Partition",
    "ResidueClassRule",
    "partition_count",
    "enumerate_partitions",
    "restricted_count",
    "partition_generating_series",
]


class Partition:
    """A partition: non-increasing positive parts with cached total n."""

    __slots__ = ("parts", "n")

    def __init__(self, parts):
        parts = tuple(int(v) for v in parts)
        for j, v in enumerate(parts):
            if v < 1:
                raise ValueError("parts must be positive integers")
            if j and parts[j - 1] < v:
                raise ValueError("parts must be non-increasing")
        self.parts = parts
        self.n = sum(parts)

    @classmethod
    def _unchecked(cls, parts: tuple[int, ...], n: int) -> "Partition":
        # fast path for the enumerator, which guarantees the invariants
        self = object.__new__(cls)
        self.parts = parts
        self.n = n
        return self

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


@dataclass(frozen=True)
class ResidueClassRule:
    """Allowed part sizes: those whose residue mod ``modulus`` lies in ``allowed``."""

    modulus: int
    allowed: frozenset[int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "allowed", frozenset(self.allowed))
        if not self.allowed:
            raise ValueError("allowed residue set must be non-empty")
        if any(not 0 <= r < self.modulus for r in self.allowed):
            raise ValueError("residues must lie in [0, modulus)")

    @classmethod
    def from_signed_residues(cls, modulus: int, residues) -> "ResidueClassRule":
        """Expand +-r (mod m) into explicit least residues, e.g. +-4 mod 32 -> {4, 28}."""
        expanded = set()
        for r in residues:
            expanded.add(r % modulus)
            expanded.add((-r) % modulus)
        return cls(modulus, frozenset(expanded))

    def admits(self, part: int) -> bool:
        return part % self.modulus in self.allowed


EVEN_PARTS = ResidueClassRule(2, frozenset({0}))
ODD_PARTS = ResidueClassRule(2, frozenset({1}))
ALL_PARTS = ResidueClassRule(1, frozenset({0}))


# ---------------------------------------------------------------------------
# p(n) table
# ---------------------------------------------------------------------------

_table_lock = threading.Lock()
_p_table: list[int] = [1]


def _euler_support(limit: int) -> list[tuple[int, int]]:
    # nonzero coefficients of (q;q)_inf up to the limit: exponent k(3k+-1)/2
    # carries sign (-1)^k
    support = []
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > limit:
            break
        sign = -1 if k % 2 else 1
        support.append((e1, sign))
        e2 = k * (3 * k + 1) // 2
        if e2 <= limit:
            support.append((e2, sign))
        k += 1
    support.sort()
    return support


def _grow_p_table(needed: int) -> None:
    with _table_lock:
        table = _p_table
        if needed < len(table):
            return
        target = max(needed, 2 * len(table))
        support = _euler_support(target)
        for n in range(len(table), target + 1):
            s = 0
            for e, sign in support:
                if e > n:
                    break
                s += sign * table[n - e]
            table.append(-s)


def partition_count(n: int) -> int:
    """p(n); zero for negative n, p(0) = 1.

    The table extension is the inversion recurrence for (q;q)_inf restricted
    to its nonzero (pentagonal) terms; tests pin it against the dense
    series inversion.
    """
    if n < 0:
        return 0
    if n >= len(_p_table):
        _grow_p_table(n)
    return _p_table[n]


@lru_cache(maxsize=8)
def partition_generating_series(order: int) -> TruncatedSeries:
    """1/(q;q)_inf truncated: coefficient n is p(n)."""
    return pochhammer_inf(1, 1, order).invert()


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

ENUMERATION_BOUND = 60  # documented practical bound; exponential beyond


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in decreasing lexicographic order.

    The order puts (n) first and (1, ..., 1) last, matching the usual way
    partition tables are written out.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Partition._unchecked((), 0)
        return
    parts = [n]
    yield Partition._unchecked((n,), n)
    while parts != [1] * n:
        rem = 0
        while parts[-1] == 1:
            rem += parts.pop()
        parts[-1] -= 1
        rem += 1
        largest = parts[-1]
        while rem > largest:
            parts.append(largest)
            rem -= largest
        parts.append(rem)
        yield Partition._unchecked(tuple(parts), n)


# ---------------------------------------------------------------------------
# restricted counts
# ---------------------------------------------------------------------------

_restricted_tables: dict[ResidueClassRule, list[int]] = {}


def restricted_count(n: int, rule: ResidueClassRule) -> int:
    """Number of partitions of n whose parts all satisfy ``rule``.

    Computed as coefficient n of prod_{j admitted} 1/(1 - q^j): the table is
    built by multiplying in one geometric factor per admitted part size,
    which scales to n around 2000 without enumeration.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    with _table_lock:
        table = _restricted_tables.get(rule)
        if table is None or len(table) <= n:
            size = max(n, 2 * len(table) if table else n, 16)
            fresh = [0] * (size + 1)
            fresh[0] = 1
            for j in range(1, size + 1):
                if rule.admits(j):
                    for v in range(j, size + 1):
                        fresh[v] += fresh[v - j]
            _restricted_tables[rule] = fresh
            table = fresh
    return table[n]
