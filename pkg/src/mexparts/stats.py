"""Rank and crank statistics, and the classical identities tying the small
mex families to them.

rank(lambda)  = largest part - number of parts
crank(lambda) = largest part if no part equals 1; otherwise
                (number of parts larger than omega) - omega, where omega is
                the number of 1's.

``verify_section1_identities`` sweeps five identities, with each side
computed by an independent route (closed-form partition sums on the left,
direct enumeration or restricted counting on the right):

  (a) p_{1,1}(n) = number of partitions of n with crank >= 0
  (b) p_{3,3}(n) = number of partitions of n with rank >= -1
  (c) p_{2,1}(n) = number of partitions of n with an even number of parts
  (d) p_{4,2}(n) - po(n) = partitions of n into parts == +-4, +-6, +-8, +-10 (mod 32)
  (e) p_{6,3}(n) - po(n) = partitions of n into parts == +-2, +-4, +-5, +-6, +-7, +-8 (mod 24)

where po(n) is the number of partitions of n with an odd number of parts.
n = 0 is excluded: rank and crank are undefined for the empty partition.
"""

from __future__ import annotations

from .errors import EmptyPartition
from .mex import identity_p_2tt, identity_p_tt
from .partitions import Partition, ResidueClassRule, enumerate_partitions, restricted_count
from .reports import VerificationReport

__all__ = ["rank_of", "crank_of", "verify_section1_identities"]

RULE_MOD_32 = ResidueClassRule.from_signed_residues(32, (4, 6, 8, 10))
RULE_MOD_24 = ResidueClassRule.from_signed_residues(24, (2, 4, 5, 6, 7, 8))


def rank_of(partition: Partition) -> int:
    if not partition.parts:
        raise EmptyPartition("rank of the empty partition is undefined")
    return partition.parts[0] - len(partition.parts)


def crank_of(partition: Partition) -> int:
    if not partition.parts:
        raise EmptyPartition("crank of the empty partition is undefined")
    ones = 0
    for v in reversed(partition.parts):
        if v != 1:
            break
        ones += 1
    if ones == 0:
        return partition.parts[0]
    larger = sum(1 for v in partition.parts if v > ones)
    return larger - ones


def verify_section1_identities(n_max: int) -> VerificationReport:
    """Check identities (a)-(e) for every n in [1, n_max]; see module docstring."""
    if not 1 <= n_max <= 40:
        raise ValueError("n_max must lie in [1, 40] (enumeration-bound)")
    report = VerificationReport(
        label="combinatorial-identities",
        metadata={"n_max": n_max, "identities": ["crank", "rank", "even-length", "mod32", "mod24"]},
    )
    for n in range(1, n_max + 1):
        crank_nonneg = 0
        rank_ge_minus1 = 0
        even_length = 0
        odd_length = 0
        for lam in enumerate_partitions(n):
            if crank_of(lam) >= 0:
                crank_nonneg += 1
            if rank_of(lam) >= -1:
                rank_ge_minus1 += 1
            if len(lam) % 2 == 0:
                even_length += 1
            else:
                odd_length += 1
        checks = (
            ("crank", identity_p_tt(1, n), crank_nonneg),
            ("rank", identity_p_tt(3, n), rank_ge_minus1),
            ("even-length", identity_p_2tt(1, n), even_length),
            ("mod32", identity_p_2tt(2, n) - odd_length, restricted_count(n, RULE_MOD_32)),
            ("mod24", identity_p_2tt(3, n) - odd_length, restricted_count(n, RULE_MOD_24)),
        )
        for identity, lhs, rhs in checks:
            report.checked += 1
            if lhs != rhs:
                report.record_failure(identity=identity, n=n, lhs=lhs, rhs=rhs)
    return report
