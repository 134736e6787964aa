"""Classical parameter bounds for binary [M, n, m] codes.

Sphere-packing, Plotkin, and Griesmer are evaluated in exact integer
arithmetic and give hard satisfied/violated verdicts.  Elias-Bassalygo and
McEliece-Rodemich-Rumsey-Welch are asymptotic statements with an o(1) term;
we drop that term and report them as advisory only, since at short lengths
the truncated inequality can fail for perfectly valid codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance on floating advisory comparisons.
ADVISORY_TOL = 1e-9

SATISFIED = "satisfied"
VIOLATED = "violated"
ADVISORY_SATISFIED = "advisory-satisfied"
ADVISORY_VIOLATED = "advisory-violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class BoundCheck:
    name: str
    kind: str  # "exact" or "advisory"
    outcome: str
    lhs: object  # value on the code's side of the inequality
    rhs: object  # the bound's cap/requirement
    slack: object


@dataclass(frozen=True)
class BoundReport:
    M: int
    n: int
    m: int
    checks: tuple[BoundCheck, ...]

    @property
    def finite_ok(self) -> bool:
        return all(c.outcome == SATISFIED for c in self.checks if c.kind == "exact")

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def binary_entropy(x: float) -> float:
    """H_2(x) = -x log2 x - (1-x) log2 (1-x), extended by 0 at the endpoints."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy needs x in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _check_params(M: int, n: int, m: int) -> None:
    if M < 1 or n < 1 or m < 1:
        raise ValueError("M, n, m must all be >= 1")
    if n > M:
        raise ValueError("need n <= M")


def check_finite_bounds(M: int, n: int, m: int) -> BoundReport:
    """Evaluate the sphere-packing, Plotkin, and Griesmer bounds exactly."""
    _check_params(M, n, m)
    checks = []

    lhs = 2 ** (M - n)
    rhs = sum(math.comb(M, i) for i in range((m - 1) // 2 + 1))
    checks.append(
        BoundCheck(
            "sphere-packing", "exact",
            SATISFIED if lhs >= rhs else VIOLATED, lhs, rhs, lhs - rhs,
        )
    )

    # Plotkin, cross-multiplied: m * (2^n - 1) <= M * 2^(n-1).
    lhs = m * (2**n - 1)
    rhs = M * 2 ** (n - 1)
    checks.append(
        BoundCheck(
            "plotkin", "exact",
            SATISFIED if lhs <= rhs else VIOLATED, lhs, rhs, rhs - lhs,
        )
    )

    lhs = M
    rhs = sum(-(-m // 2**i) for i in range(n))
    checks.append(
        BoundCheck(
            "griesmer", "exact",
            SATISFIED if lhs >= rhs else VIOLATED, lhs, rhs, lhs - rhs,
        )
    )
    return BoundReport(M, n, m, tuple(checks))


def check_asymptotic_bounds(M: int, n: int, m: int) -> BoundReport:
    """Evaluate the Elias-Bassalygo and MRRW rate caps with o(1) dropped."""
    _check_params(M, n, m)
    rate = n / M
    checks = []

    if 2 * m > M:
        checks.append(BoundCheck("elias-bassalygo", "advisory", NOT_APPLICABLE, rate, None, None))
    else:
        cap = 1.0 - binary_entropy(0.5 * (1.0 - math.sqrt(1.0 - 2.0 * m / M)))
        outcome = ADVISORY_SATISFIED if rate <= cap + ADVISORY_TOL else ADVISORY_VIOLATED
        checks.append(BoundCheck("elias-bassalygo", "advisory", outcome, rate, cap, cap - rate))

    if m > M:
        checks.append(BoundCheck("mrrw", "advisory", NOT_APPLICABLE, rate, None, None))
    else:
        arg = 0.5 - math.sqrt(m * (M - m)) / M
        cap = binary_entropy(max(arg, 0.0))
        outcome = ADVISORY_SATISFIED if rate <= cap + ADVISORY_TOL else ADVISORY_VIOLATED
        checks.append(BoundCheck("mrrw", "advisory", outcome, rate, cap, cap - rate))
    return BoundReport(M, n, m, tuple(checks))


def full_report(M: int, n: int, m: int) -> BoundReport:
    """Finite bounds followed by advisory bounds in one report."""
    finite = check_finite_bounds(M, n, m)
    asym = check_asymptotic_bounds(M, n, m)
    return BoundReport(M, n, m, finite.checks + asym.checks)


def max_m_by_finite_bounds(M: int, n: int) -> int:
    """Largest m passing all three finite bounds (m = 1 always does).

    By the batch-to-ECC distance bridge this upper-bounds any certifiable
    batch m for binary single-symbol buckets with t = 1.
    """
    if n > M:
        raise ValueError("need n <= M")
    m = 1
    while check_finite_bounds(M, n, m + 1).finite_ok:
        m += 1
    return m
