"""Number-theoretic helpers and machine verification of congruence families.

The checkers here sweep arithmetic-progression claims of the form
f(a*n + b) == 0 (mod m) over n = 0, 1, ..., n_max (optionally skipping
indices divisible by a given prime), and parity characterizations of the
small mex families.  ``family_catalog`` builds the progression claims for
each named family, validating every side condition and the exactness of
every offset division.

Sweeps are exact: values come from the closed partition-number identities
(p, p_tt, p_2tt) or from the exact singular-overpartition series, then are
reduced modulo m.  A report never silently narrows a sweep; whatever was
skipped (excluded index, argument cap) is counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    EvenModulus,
    InvalidFamilyParams,
    NonIntegralOffset,
    NotCoprime,
    TruncationTooSmall,
)
from .mex import genfun_p_tt, identity_p_2tt, identity_p_tt
from .partitions import partition_count
from .reports import VerificationReport
from .series import pochhammer_inf
from .singular import SingularParams, genfun_singular

__all__ = [
    "jacobi_symbol",
    "mod_inverse",
    "delta",
    "is_prime",
    "smallest_prime_with_symbol",
    "is_k3km1",
    "is_3np1_square",
    "is_generalized_pentagonal",
    "is_triangular",
    "is_pent_plus_4pent",
    "is_2pent_plus_3tri",
    "ProgressionSpec",
    "check_progression",
    "family_catalog",
    "FAMILY_IDS",
    "check_parity_characterization",
    "check_conditional_parity",
    "check_parity_bridge",
    "eta_form_mod2_report",
    "check_singular_mod8",
]


# ---------------------------------------------------------------------------
# number theory
# ---------------------------------------------------------------------------

def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; the Legendre symbol at primes."""
    if n <= 0 or n % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mod_inverse(x: int, m: int) -> int:
    """y in [1, m) with x*y == 1 (mod m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    try:
        return pow(x, -1, m)
    except ValueError:
        raise NotCoprime(f"{x} has no inverse modulo {m}") from None


def delta(p: int, k: int) -> int:
    """24^{-1} mod p^k for p in {5, 7, 11}: the classical progression offsets."""
    if p not in (5, 7, 11):
        raise ValueError("delta is defined for p in {5, 7, 11}")
    if k < 1:
        raise ValueError("k must be positive")
    return mod_inverse(24, p**k)


PRIMALITY_ENVELOPE = 10**6


def is_prime(x: int) -> bool:
    """Deterministic trial division; intended for x up to 10^6."""
    if x > PRIMALITY_ENVELOPE:
        raise ValueError(f"primality checks are bounded at {PRIMALITY_ENVELOPE}")
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def smallest_prime_with_symbol(value: int, symbol: int = -1, minimum: int = 5) -> int:
    """Smallest prime p >= minimum with (value/p) equal to ``symbol``."""
    p = minimum
    while True:
        if is_prime(p) and p % 2 == 1 and jacobi_symbol(value, p) == symbol:
            return p
        p += 1


# ---------------------------------------------------------------------------
# representation predicates
# ---------------------------------------------------------------------------

def is_k3km1(x: int) -> bool:
    """True iff x = k(3k - 1) for some integer k (either sign, zero included).

    Solving 3k^2 - k - x = 0 gives k = (1 +- sqrt(12x + 1)) / 6, so x has the
    form iff 12x + 1 is a perfect square with (1 + r) or (1 - r) divisible
    by 6 for its root r.
    """
    if x < 0:
        return False
    disc = 12 * x + 1
    r = math.isqrt(disc)
    if r * r != disc:
        return False
    return (1 + r) % 6 == 0 or (1 - r) % 6 == 0


def is_3np1_square(n: int) -> bool:
    """True iff 3n + 1 is a perfect square."""
    if n < 0:
        return False
    v = 3 * n + 1
    r = math.isqrt(v)
    return r * r == v


def is_generalized_pentagonal(x: int) -> bool:
    """True iff x = k(3k - 1)/2 for some integer k; includes 0 (k = 0)."""
    if x < 0:
        return False
    disc = 24 * x + 1
    r = math.isqrt(disc)
    if r * r != disc:
        return False
    return (1 + r) % 6 == 0 or (1 - r) % 6 == 0


def is_triangular(x: int) -> bool:
    """True iff x = j(j + 1)/2 for some j >= 0; includes 0."""
    if x < 0:
        return False
    disc = 8 * x + 1
    r = math.isqrt(disc)
    return r * r == disc


def _generalized_pentagonals_up_to(limit: int) -> list[int]:
    vals = [0]
    k = 1
    while True:
        v = k * (3 * k - 1) // 2
        if v > limit:
            break
        vals.append(v)
        w = k * (3 * k + 1) // 2
        if w <= limit:
            vals.append(w)
        k += 1
    return sorted(set(vals))


def is_pent_plus_4pent(n: int) -> bool:
    """True iff n = x + 4y with x, y generalized pentagonal numbers."""
    if n < 0:
        return False
    for y in _generalized_pentagonals_up_to(n // 4):
        if is_generalized_pentagonal(n - 4 * y):
            return True
    return False


def is_2pent_plus_3tri(n: int) -> bool:
    """True iff n = 2x + 3y with x generalized pentagonal and y triangular."""
    if n < 0:
        return False
    for x in _generalized_pentagonals_up_to(n // 2):
        rem = n - 2 * x
        if rem % 3 == 0 and is_triangular(rem // 3):
            return True
    return False


# ---------------------------------------------------------------------------
# progression claims
# ---------------------------------------------------------------------------

_FUNCTIONS = ("p", "p_tt", "p_2tt", "singular")


@dataclass(frozen=True)
class ProgressionSpec:
    """One claim: function(step*n + offset) == 0 (mod modulus) for all swept n.

    ``exclude_prime`` skips sweep indices n divisible by that prime, matching
    the "p does not divide n" hypothesis of several families.
    """

    function: str
    step: int
    offset: int
    modulus: int
    t: int | None = None
    k: int | None = None
    i: int | None = None
    exclude_prime: int | None = None
    label: str = ""

    def __post_init__(self):
        if self.function not in _FUNCTIONS:
            raise ValueError(f"unknown function id {self.function!r}")
        if self.step < 1:
            raise ValueError("progression step must be positive")
        if self.offset < 0:
            raise ValueError("progression offset must be non-negative")
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if self.function in ("p_tt", "p_2tt") and (self.t is None or self.t < 1):
            raise ValueError(f"{self.function} needs a positive t")
        if self.function == "singular" and (self.k is None or self.i is None):
            raise ValueError("singular needs k and i")

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.function == "p":
            name = "p"
        elif self.function == "p_tt":
            name = f"p[{self.t},{self.t}]"
        elif self.function == "p_2tt":
            name = f"p[{2 * self.t},{self.t}]"
        else:
            name = f"C[{self.k},{self.i}]"
        cond = f", {self.exclude_prime} not dividing n" if self.exclude_prime else ""
        return f"{name}({self.step}n+{self.offset}) == 0 mod {self.modulus}{cond}"

    def to_json(self) -> dict:
        out = {
            "function": self.function,
            "step": self.step,
            "offset": self.offset,
            "modulus": self.modulus,
        }
        if self.t is not None:
            out["t"] = self.t
        if self.k is not None:
            out["k"] = self.k
            out["i"] = self.i
        if self.exclude_prime is not None:
            out["exclude_prime"] = self.exclude_prime
        return out


def _evaluator(spec: ProgressionSpec, max_argument: int, trunc: int | None) -> Callable[[int], int]:
    if spec.function == "p":
        return partition_count
    if spec.function == "p_tt":
        t = spec.t
        return lambda arg: identity_p_tt(t, arg)
    if spec.function == "p_2tt":
        t = spec.t
        return lambda arg: identity_p_2tt(t, arg)
    # singular: series-backed, bounded by the truncation cap
    if trunc is not None and max_argument > trunc:
        raise TruncationTooSmall(
            f"sweep needs coefficient {max_argument} but the series order is capped at {trunc}"
        )
    series = genfun_singular(SingularParams(spec.k, spec.i), max_argument)
    return series.coefficient


def check_progression(
    spec: ProgressionSpec,
    n_max: int,
    arg_cap: int | None = None,
    trunc: int | None = None,
) -> VerificationReport:
    """Sweep a progression claim for n in [0, n_max].

    ``arg_cap`` trims the sweep to arguments step*n + offset <= arg_cap (the
    trimmed-off tail is reported in the metadata, not silently dropped);
    ``trunc`` caps the order of any series that has to be built.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    n_eff = n_max
    if arg_cap is not None:
        n_eff = min(n_max, (arg_cap - spec.offset) // spec.step) if spec.offset <= arg_cap else -1
    report = VerificationReport(label=spec.describe(), spec=spec.to_json())
    report.metadata["n_max"] = n_max
    if n_eff < n_max:
        report.metadata["n_max_effective"] = n_eff
        report.metadata["argument_cap"] = arg_cap
    if n_eff < 0:
        return report
    evaluate = _evaluator(spec, spec.step * n_eff + spec.offset, trunc)
    for n in range(n_eff + 1):
        if spec.exclude_prime is not None and n % spec.exclude_prime == 0:
            report.skipped += 1
            continue
        arg = spec.step * n + spec.offset
        residue = evaluate(arg) % spec.modulus
        report.checked += 1
        if residue != 0:
            report.record_failure(n=n, argument=arg, value_mod_m=residue)
    return report


# ---------------------------------------------------------------------------
# family catalog
# ---------------------------------------------------------------------------

def _exact_div(numerator: int, denominator: int, context: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise NonIntegralOffset(f"{context}: {numerator}/{denominator} is not integral")
    return q


def _require_prime(p: int, context: str) -> None:
    if not is_prime(p):
        raise InvalidFamilyParams(f"{context}: {p} is not prime")


def transfer_specs(a: int, b: int, m: int, t: int) -> list[ProgressionSpec]:
    """If p(a*n + b) == 0 (mod m) for all n, the same progression vanishes for
    the (at, at) and (2at, at) families; emit those two conclusions."""
    if a < 1 or t < 1 or b < 0 or m < 2:
        raise InvalidFamilyParams("transfer needs a, t >= 1, b >= 0, m >= 2")
    return [
        ProgressionSpec("p_tt", a, b, m, t=a * t),
        ProgressionSpec("p_2tt", a, b, m, t=a * t),
    ]


def ramanujan_specs(p: int, k: int, t: int) -> list[ProgressionSpec]:
    """The classical progressions transferred to the mex families: step p^k,
    offset 24^{-1} mod p^k, modulus p^k (5, 11) or 7^(floor(k/2)+1) (7)."""
    if p not in (5, 7, 11):
        raise InvalidFamilyParams("ramanujan families need p in {5, 7, 11}")
    if k < 1 or t < 1:
        raise InvalidFamilyParams("ramanujan families need k, t >= 1")
    step = p**k
    offset = delta(p, k)
    modulus = 7 ** (k // 2 + 1) if p == 7 else p**k
    return [
        ProgressionSpec("p_tt", step, offset, modulus, t=step * t),
        ProgressionSpec("p_2tt", step, offset, modulus, t=step * t),
    ]


def p11_prime_power_specs(p: int, k: int) -> list[ProgressionSpec]:
    """Parity family for the (1,1) function at primes p >= 5, p != 1 (mod 12):
    argument p^(2k+1) n + (p^(2k+2) - 1)/12, skipping n divisible by p."""
    _require_prime(p, "p11 family")
    if p < 5:
        raise InvalidFamilyParams("p11 family needs p >= 5")
    if p % 12 == 1:
        raise InvalidFamilyParams("p11 family needs p != 1 (mod 12)")
    if k < 0:
        raise InvalidFamilyParams("k must be non-negative")
    offset = _exact_div(p ** (2 * k + 2) - 1, 12, "p11 family offset")
    return [ProgressionSpec("p_tt", p ** (2 * k + 1), offset, 2, t=1, exclude_prime=p)]


def p22_prime_specs(p: int, alpha: int, j: int) -> list[ProgressionSpec]:
    """Parity family for the (2,2) function: p prime, p == 3 (mod 4), p >= 7,
    1 <= j <= p-1; argument p^(2a+1)(pn + j) + 5(p^(2a+2) - 1)/24.

    p = 3 satisfies the textual hypothesis but makes the offset division by
    24 non-integral (3^2 != 1 mod 24), so it is rejected.
    """
    _require_prime(p, "p22 family")
    if p % 4 != 3:
        raise InvalidFamilyParams("p22 family needs p == 3 (mod 4)")
    if p < 7:
        raise InvalidFamilyParams("p22 family needs p >= 7: the offset is non-integral at p = 3")
    if alpha < 0:
        raise InvalidFamilyParams("alpha must be non-negative")
    if not 1 <= j <= p - 1:
        raise InvalidFamilyParams("j must satisfy 1 <= j <= p - 1")
    base = _exact_div(5 * (p ** (2 * (alpha + 1)) - 1), 24, "p22 family offset")
    step = p ** (2 * alpha + 2)
    offset = p ** (2 * alpha + 1) * j + base
    return [ProgressionSpec("p_tt", step, offset, 2, t=2)]


def p33_mod16_specs() -> list[ProgressionSpec]:
    """The two unconditional parity progressions 16n + 11 and 16n + 15 for the
    (3,3) function."""
    return [
        ProgressionSpec("p_tt", 16, 11, 2, t=3),
        ProgressionSpec("p_tt", 16, 15, 2, t=3),
    ]


def p33_prime_power_specs(p: int, alpha: int, branch: int) -> list[ProgressionSpec]:
    """Parity families for the (3,3) function at primes p >= 5 with p not
    dividing the swept index: branch 1 needs p == 3 (mod 4) and offset
    (10 p^(2a+2) - 1)/3; branch 2 needs (-2/p) = -1 and offset
    (22 p^(2a+2) - 1)/3.  Step is 16 p^(2a+1) in both."""
    _require_prime(p, "p33 prime family")
    if p < 5:
        raise InvalidFamilyParams("p33 prime family needs p >= 5")
    if alpha < 0:
        raise InvalidFamilyParams("alpha must be non-negative")
    if branch == 1:
        if p % 4 != 3:
            raise InvalidFamilyParams("branch 1 needs p == 3 (mod 4)")
        offset = _exact_div(10 * p ** (2 * alpha + 2) - 1, 3, "p33 branch 1 offset")
    elif branch == 2:
        if jacobi_symbol(-2, p) != -1:
            raise InvalidFamilyParams("branch 2 needs (-2/p) = -1")
        offset = _exact_div(22 * p ** (2 * alpha + 2) - 1, 3, "p33 branch 2 offset")
    else:
        raise InvalidFamilyParams("branch must be 1 or 2")
    return [ProgressionSpec("p_tt", 16 * p ** (2 * alpha + 1), offset, 2, t=3, exclude_prime=p)]


def p55_specs(alpha: int, row: int) -> list[ProgressionSpec]:
    """Four parity progressions for the (5,5) function, indexed by row:
      1: 2*5^(2a+1) n + (31*5^(2a) - 7)/12
      2: 2*5^(2a+1) n + (79*5^(2a) - 7)/12
      3: 2*5^(2a+2) n + (83*5^(2a+1) - 7)/12
      4: 2*5^(2a+2) n + (107*5^(2a+1) - 7)/12
    """
    if alpha < 0:
        raise InvalidFamilyParams("alpha must be non-negative")
    rows = {
        1: (2 * 5 ** (2 * alpha + 1), 31 * 5 ** (2 * alpha) - 7),
        2: (2 * 5 ** (2 * alpha + 1), 79 * 5 ** (2 * alpha) - 7),
        3: (2 * 5 ** (2 * alpha + 2), 83 * 5 ** (2 * alpha + 1) - 7),
        4: (2 * 5 ** (2 * alpha + 2), 107 * 5 ** (2 * alpha + 1) - 7),
    }
    if row not in rows:
        raise InvalidFamilyParams("row must be 1, 2, 3 or 4")
    step, numerator = rows[row]
    return [ProgressionSpec("p_tt", step, _exact_div(numerator, 12, "p55 offset"), 2, t=5)]


def p55_prime_specs(p: int, alpha: int, j: int) -> list[ProgressionSpec]:
    """Parity family for the (5,5) function at primes p >= 5 with (-10/p) = -1:
    argument 2 p^(2a+1)(pn + j) + 7(p^(2a+2) - 1)/12, 1 <= j <= p-1."""
    _require_prime(p, "p55 prime family")
    if p < 5:
        raise InvalidFamilyParams("p55 prime family needs p >= 5")
    if jacobi_symbol(-10, p) != -1:
        raise InvalidFamilyParams("p55 prime family needs (-10/p) = -1")
    if alpha < 0:
        raise InvalidFamilyParams("alpha must be non-negative")
    if not 1 <= j <= p - 1:
        raise InvalidFamilyParams("j must satisfy 1 <= j <= p - 1")
    base = _exact_div(7 * (p ** (2 * alpha + 2) - 1), 12, "p55 prime family offset")
    step = 2 * p ** (2 * alpha + 2)
    offset = 2 * p ** (2 * alpha + 1) * j + base
    return [ProgressionSpec("p_tt", step, offset, 2, t=5)]


def p77_specs(alpha: int, r: int | None = None, s: int | None = None) -> list[ProgressionSpec]:
    """Parity progressions for the (7,7) function:
      r in {3, 4, 6}: 2*7^(2a+1) n + ((11 + 12r)*49^a - 5)/6
      s in {2, 4, 5}: 2*49^(a+1) n + ((12s + 5)*7^(2a+1) - 5)/6
    Exactly one of r, s must be given."""
    if alpha < 0:
        raise InvalidFamilyParams("alpha must be non-negative")
    if (r is None) == (s is None):
        raise InvalidFamilyParams("give exactly one of r, s")
    if r is not None:
        if r not in (3, 4, 6):
            raise InvalidFamilyParams("r must be in {3, 4, 6}")
        step = 2 * 7 ** (2 * alpha + 1)
        offset = _exact_div((11 + 12 * r) * 49**alpha - 5, 6, "p77 r-offset")
    else:
        if s not in (2, 4, 5):
            raise InvalidFamilyParams("s must be in {2, 4, 5}")
        step = 2 * 49 ** (alpha + 1)
        offset = _exact_div((12 * s + 5) * 7 ** (2 * alpha + 1) - 5, 6, "p77 s-offset")
    return [ProgressionSpec("p_tt", step, offset, 2, t=7)]


def p77_prime_specs(
    p: int,
    alpha: int,
    beta: int,
    branch: int,
    r: int | None = None,
    s: int | None = None,
) -> list[ProgressionSpec]:
    """Parity families for the (7,7) function at primes p >= 5 with (-21/p) = -1:
      branch 1 (r in {3,4,6}): 2*7^(2a+1) p^(2b) n + ((11+12r)*49^a p^(2b) - 5)/6
      branch 2 (s in {2,4,5}): 2*49^(a+1) p^(2b) n + ((5+12s)*7^(2a+1) p^(2b) - 5)/6
      branch 3 (p not dividing n): 2*49^a p^(2b+1) n + (11*49^a p^(2b+2) - 5)/6
    """
    _require_prime(p, "p77 prime family")
    if p < 5:
        raise InvalidFamilyParams("p77 prime family needs p >= 5")
    if jacobi_symbol(-21, p) != -1:
        raise InvalidFamilyParams("p77 prime family needs (-21/p) = -1")
    if alpha < 0 or beta < 0:
        raise InvalidFamilyParams("alpha and beta must be non-negative")
    if branch == 1:
        if r not in (3, 4, 6):
            raise InvalidFamilyParams("branch 1 needs r in {3, 4, 6}")
        step = 2 * 7 ** (2 * alpha + 1) * p ** (2 * beta)
        offset = _exact_div(
            (11 + 12 * r) * 49**alpha * p ** (2 * beta) - 5, 6, "p77 branch 1 offset"
        )
        return [ProgressionSpec("p_tt", step, offset, 2, t=7)]
    if branch == 2:
        if s not in (2, 4, 5):
            raise InvalidFamilyParams("branch 2 needs s in {2, 4, 5}")
        step = 2 * 49 ** (alpha + 1) * p ** (2 * beta)
        offset = _exact_div(
            (5 + 12 * s) * 7 ** (2 * alpha + 1) * p ** (2 * beta) - 5, 6, "p77 branch 2 offset"
        )
        return [ProgressionSpec("p_tt", step, offset, 2, t=7)]
    if branch == 3:
        step = 2 * 49**alpha * p ** (2 * beta + 1)
        offset = _exact_div(
            11 * 49**alpha * p ** (2 * beta + 2) - 5, 6, "p77 branch 3 offset"
        )
        return [ProgressionSpec("p_tt", step, offset, 2, t=7, exclude_prime=p)]
    raise InvalidFamilyParams("branch must be 1, 2 or 3")


_FAMILY_BUILDERS: dict[str, Callable[..., list[ProgressionSpec]]] = {
    "thm2": transfer_specs,
    "ramanujan": ramanujan_specs,
    "thm5": p11_prime_power_specs,
    "thm11": p22_prime_specs,
    "thm6": p33_mod16_specs,
    "cor1": p33_prime_power_specs,
    "thm12": p55_specs,
    "thm13": p55_prime_specs,
    "thm14": p77_specs,
    "final": p77_prime_specs,
}

FAMILY_IDS = tuple(sorted(_FAMILY_BUILDERS))


def family_catalog(family_id: str, **params) -> list[ProgressionSpec]:
    """Progression claims for a named family; ids match the CLI suite names."""
    try:
        builder = _FAMILY_BUILDERS[family_id]
    except KeyError:
        raise InvalidFamilyParams(
            f"unknown family {family_id!r}; known: {', '.join(FAMILY_IDS)}"
        ) from None
    return builder(**params)


# ---------------------------------------------------------------------------
# parity checkers
# ---------------------------------------------------------------------------

def check_parity_characterization(which: str, n_max: int, trunc: int | None = None) -> VerificationReport:
    """Parity of the (1,1) or (3,3) function, and of the matching singular
    overpartition family, against its representation predicate:

      p11: odd exactly at n = k(3k - 1), k over all integers; same for C(4,1)
      p33: odd exactly when 3n + 1 is a square; same for C(12,3)

    Swept over n in [1, n_max].
    """
    if which not in ("p11", "p33"):
        raise ValueError("which must be 'p11' or 'p33'")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if trunc is not None and n_max > trunc:
        raise TruncationTooSmall(
            f"parity sweep needs coefficient {n_max} but the series order is capped at {trunc}"
        )
    if which == "p11":
        t, k, i, predicate = 1, 4, 1, is_k3km1
        predicate_name = "n = k(3k-1), k in Z"
    else:
        t, k, i, predicate = 3, 12, 3, is_3np1_square
        predicate_name = "3n+1 is a square"
    report = VerificationReport(
        label=f"parity-characterization-{which}",
        metadata={"n_max": n_max, "predicate": predicate_name},
    )
    singular_series = genfun_singular(SingularParams(k, i), n_max)
    for n in range(1, n_max + 1):
        expected_odd = predicate(n)
        mex_value = identity_p_tt(t, n)
        singular_value = singular_series.coefficient(n)
        report.checked += 2
        if (mex_value % 2 == 1) != expected_odd:
            report.record_failure(function=f"p_tt[t={t}]", n=n, value=mex_value)
        if (singular_value % 2 == 1) != expected_odd:
            report.record_failure(function=f"C[{k},{i}]", n=n, value=singular_value)
    return report


def check_conditional_parity(which: str, n_max: int) -> VerificationReport:
    """One-directional parity claims for the (3,3) function:

      thm6_part2: if n is not a pentagonal plus four times a pentagonal,
                  then p_{3,3}(16n + 3) is even
      thm6_part3: if n is not twice a pentagonal plus three times a
                  triangular, then p_{3,3}(16n + 7) is even

    Indices satisfying the predicate are skipped (the claims say nothing
    there).  Pentagonal means generalized pentagonal, zero included; the
    calibration test in the suite confirms that convention empirically.
    """
    if which == "thm6_part2":
        predicate, offset, predicate_name = is_pent_plus_4pent, 3, "pent + 4*pent"
    elif which == "thm6_part3":
        predicate, offset, predicate_name = is_2pent_plus_3tri, 7, "2*pent + 3*tri"
    else:
        raise ValueError("which must be 'thm6_part2' or 'thm6_part3'")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    report = VerificationReport(
        label=f"conditional-parity-{which}",
        metadata={
            "n_max": n_max,
            "predicate": predicate_name,
            "pentagonal_convention": "generalized, k in Z, 0 included",
        },
    )
    for n in range(n_max + 1):
        if predicate(n):
            report.skipped += 1
            continue
        value = identity_p_tt(3, 16 * n + offset)
        report.checked += 1
        if value % 2 != 0:
            report.record_failure(n=n, argument=16 * n + offset, value_mod_m=value % 2)
    return report


def check_parity_bridge(t: int, n_max: int, trunc: int | None = None) -> VerificationReport:
    """Coefficient-wise mod-2 equality of the (t,t) series and the C(4t,t)
    singular overpartition series over [0, n_max]."""
    if t < 1:
        raise ValueError("t must be positive")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if trunc is not None and n_max > trunc:
        raise TruncationTooSmall(
            f"bridge sweep needs coefficient {n_max} but the series order is capped at {trunc}"
        )
    left = genfun_p_tt(t, n_max)
    right = genfun_singular(SingularParams(4 * t, t), n_max)
    report = VerificationReport(
        label=f"parity-bridge-t={t}", metadata={"n_max": n_max, "t": t}
    )
    for n in range(n_max + 1):
        report.checked += 1
        if (left.coefficient(n) - right.coefficient(n)) % 2 != 0:
            report.record_failure(
                n=n, p_tt=left.coefficient(n), singular=right.coefficient(n)
            )
    return report


def eta_form_mod2_report(t: int, order: int) -> VerificationReport:
    """Mod-2 identity of both bridge sides with (q^t;q^t)^3 / (q;q):
    the reduction both series collapse to."""
    if t < 1:
        raise ValueError("t must be positive")
    pt = pochhammer_inf(t, t, order)
    eta = (pt * pt) * (pt * pochhammer_inf(1, 1, order).invert())
    eta2 = eta.reduce_mod(2)
    left = genfun_p_tt(t, order).reduce_mod(2)
    right = genfun_singular(SingularParams(4 * t, t), order).reduce_mod(2)
    report = VerificationReport(
        label=f"eta-form-mod2-t={t}", metadata={"order": order, "t": t}
    )
    for n in range(order + 1):
        report.checked += 1
        ok = left.coefficient(n) == eta2.coefficient(n) == right.coefficient(n)
        if not ok:
            report.record_failure(
                n=n,
                p_tt_mod2=left.coefficient(n),
                singular_mod2=right.coefficient(n),
                eta_mod2=eta2.coefficient(n),
            )
    return report


def check_singular_mod8(arg_max: int = 500) -> list[VerificationReport]:
    """Mod-8 behaviour of C(12,3) along 16n + r for arguments up to arg_max:
    r = 11, 15 vanish unconditionally; r = 3 vanishes when n is not a
    pentagonal plus four times a pentagonal; r = 7 when n is not twice a
    pentagonal plus three times a triangular."""
    series = genfun_singular(SingularParams(12, 3), arg_max)
    out = []
    cases = [
        (11, None, "unconditional"),
        (15, None, "unconditional"),
        (3, is_pent_plus_4pent, "n not pent + 4*pent"),
        (7, is_2pent_plus_3tri, "n not 2*pent + 3*tri"),
    ]
    for offset, predicate, condition in cases:
        report = VerificationReport(
            label=f"singular-mod8-16n+{offset}",
            spec=ProgressionSpec("singular", 16, offset, 8, k=12, i=3).to_json(),
            metadata={"argument_cap": arg_max, "condition": condition},
        )
        n = 0
        while 16 * n + offset <= arg_max:
            if predicate is not None and predicate(n):
                report.skipped += 1
            else:
                value = series.coefficient(16 * n + offset)
                report.checked += 1
                if value % 8 != 0:
                    report.record_failure(n=n, argument=16 * n + offset, value_mod_m=value % 8)
            n += 1
        out.append(report)
    return out
