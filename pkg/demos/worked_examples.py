"""A tour of the basic objects: the mex statistic, the counting functions,
and the three independent routes to the same numbers.

Run: python demos/worked_examples.py
"""

from mexparts import (
    MexParams,
    Partition,
    SingularParams,
    enumerate_partitions,
    genfun_p_tt,
    genfun_singular,
    identity_p_tt,
    mex_count_oracle,
    mex_of,
    partition_count,
    singular_overpartition_oracle,
)

# --- the mex statistic ------------------------------------------------------
# mex_{A,a}(lambda) is the smallest positive integer congruent to a (mod A)
# that is not a part of lambda.  Tabulate it for the partitions of 5 with
# (A, a) = (2, 2): the smallest missing even number.

params = MexParams(2, 2)
print("partitions of 5 and their mex values for (A, a) = (2, 2):")
for lam in enumerate_partitions(5):
    value = mex_of(lam, params)
    marker = "  <- counted (mex == 2 mod 4)" if value % 4 == 2 else ""
    print(f"  {'+'.join(map(str, lam.parts)):>12}   mex = {value}{marker}")

# p_{2,2}(5) counts the partitions whose mex is 2 mod 4: four of the seven.
print("\np_{2,2}(5) three ways:")
print("  enumeration oracle :", mex_count_oracle(5, params))
print("  generating function:", genfun_p_tt(2, 5).coefficient(5))
print("  partition identity :", identity_p_tt(2, 5))

# --- the identity in ordinary partition numbers ----------------------------
# p_{t,t}(n) = p(n) + sum_r p(n - t r(2r+1)) - sum_s p(n - t s(2s-1)).
# At t = 1, n = 10 the surviving terms are visible by hand:
n = 10
terms = [
    ("p(10)", partition_count(10)),
    ("+ p(7)", partition_count(7)),
    ("+ p(0)", partition_count(0)),
    ("- p(9)", -partition_count(9)),
    ("- p(4)", -partition_count(4)),
]
print(f"\np_(1,1)(10) = {' '.join(t for t, _ in terms)} = {sum(v for _, v in terms)}")
assert sum(v for _, v in terms) == identity_p_tt(1, 10)

# --- singular overpartitions ------------------------------------------------
# C(3,1; 4) = 10: partitions of 4 with no part divisible by 3, where parts
# congruent to 1 or 2 (mod 3) may carry one overline on their first copy.
print("\nC(3,1; 4) counted two ways:")
print("  enumeration oracle :", singular_overpartition_oracle(4, SingularParams(3, 1)))
print("  generating function:", genfun_singular(SingularParams(3, 1), 4).coefficient(4))

# the ten objects, written out
print("""  the ten objects:
    4   4'   2+2   2'+2   2+1+1   2'+1+1   2+1'+1   2'+1'+1   1+1+1+1   1'+1+1+1""")
