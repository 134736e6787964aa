"""Linear batch codes: encoding, recovery-set planning, verification.

A batch request (a multiset of database indices) is served by pairwise
disjoint recovery sets, one per requested item, where the recovery set for
item i is a set of encoded-symbol columns whose F_q-linear combination is the
unit vector e_i, and no bucket contributes more than t columns overall.
Retrieval is restricted to linear operations on encoded symbols, so the
planner's infeasible verdict is definitive (its search is complete).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .field import PrimeField
from .linalg import MatrixFq, VectorFq, combinations_equal_to, mat_vec_encode, row_weights

VERIFY_CAP_ENV = "BATCHKIT_VERIFY_CAP"
DEFAULT_VERIFY_CAP = 200_000


class VerifyCapExceeded(RuntimeError):
    """A verification sweep would enumerate more requests than the guard allows.

    Raise the cap explicitly (``cap=`` argument or the BATCHKIT_VERIFY_CAP
    environment variable) to override.
    """


@dataclass(frozen=True)
class RecoverySet:
    """Columns (with nonzero coefficients) combining to e_item.

    Build via :func:`make_recovery_set` or :func:`enumerate_recovery_sets`,
    which check the defining equation against a concrete code.
    """

    item: int
    support: tuple[int, ...]
    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class QueryPlan:
    """Pairwise-disjoint recovery sets answering a batch request.

    ``sets[r]`` recovers ``request[r]``; requests are canonical
    (non-decreasing) index tuples.
    """

    request: tuple[int, ...]
    sets: tuple[RecoverySet, ...]


@dataclass(frozen=True)
class BatchVerdict:
    """Outcome of a batch-property check; witness is a failing request."""

    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


class LinearBatchCode:
    """A generator matrix, an ordered bucket partition, and a read budget t.

    The matrix has n rows (database size) and N columns (total storage),
    partitioned into M non-empty buckets; at most t columns may be read from
    any bucket when serving a request.  Buckets of size 1 with t = 1 are the
    one-symbol-per-server special case.
    """

    def __init__(
        self,
        matrix: MatrixFq,
        buckets: Sequence[Sequence[int]],
        t: int = 1,
        claimed_m: Optional[int] = None,
    ) -> None:
        if t < 1:
            raise ValueError("bucket read budget t must be >= 1")
        if matrix.n_rows > matrix.n_cols:
            raise ValueError("a batch code needs at least as many columns as rows")
        bkts = tuple(tuple(int(c) for c in b) for b in buckets)
        if not bkts or any(not b for b in bkts):
            raise ValueError("buckets must be non-empty")
        flat = [c for b in bkts for c in b]
        if sorted(flat) != list(range(matrix.n_cols)):
            raise ValueError("buckets must partition the column set exactly")
        self.matrix = matrix
        self.buckets = bkts
        self.t = t
        self.claimed_m = claimed_m
        self.bucket_of = np.empty(matrix.n_cols, dtype=np.int64)
        for bi, b in enumerate(bkts):
            for c in b:
                self.bucket_of[c] = bi
        self.bucket_of.setflags(write=False)
        self._recovery_cache: dict[tuple[int, int], list] = {}

    @classmethod
    def with_unit_buckets(
        cls, matrix: MatrixFq, t: int = 1, claimed_m: Optional[int] = None
    ) -> "LinearBatchCode":
        return cls(matrix, [(j,) for j in range(matrix.n_cols)], t=t, claimed_m=claimed_m)

    @property
    def field(self) -> PrimeField:
        return self.matrix.field

    @property
    def q(self) -> int:
        return self.matrix.field.q

    @property
    def n(self) -> int:
        return self.matrix.n_rows

    @property
    def N(self) -> int:
        return self.matrix.n_cols

    @property
    def M(self) -> int:
        return len(self.buckets)

    @property
    def rate(self) -> float:
        return self.n / self.N

    def __repr__(self) -> str:
        return (
            f"LinearBatchCode(q={self.q}, n={self.n}, N={self.N}, "
            f"M={self.M}, t={self.t})"
        )

    def _recovery_options(self, item: int, cap: int) -> list:
        """Cached (RecoverySet, column mask, bucket usage) triples for e_item."""
        key = (item, cap)
        hit = self._recovery_cache.get(key)
        if hit is None:
            target = VectorFq.unit(self.field, self.n, item)
            hit = []
            for support, coeffs in combinations_equal_to(self.matrix, target, cap):
                mask = 0
                usage: dict[int, int] = {}
                for c in support:
                    mask |= 1 << c
                    b = int(self.bucket_of[c])
                    usage[b] = usage.get(b, 0) + 1
                hit.append((RecoverySet(item, support, coeffs), mask, tuple(usage.items())))
            self._recovery_cache[key] = hit
        return hit


def encode(code: LinearBatchCode, x: VectorFq) -> VectorFq:
    """Encode a database vector: y = x @ G."""
    return mat_vec_encode(code.matrix, x)


def make_recovery_set(
    code: LinearBatchCode, item: int, support: Iterable[int], coeffs: Iterable[int]
) -> RecoverySet:
    """Build a RecoverySet, checking its defining equation against `code`."""
    support = tuple(int(c) for c in support)
    coeffs = tuple(code.field.check(a) for a in coeffs)
    if len(support) != len(coeffs) or len(set(support)) != len(support):
        raise ValueError("support and coefficients must align, support without repeats")
    if not 0 <= item < code.n:
        raise ValueError(f"item {item} out of range [0, {code.n})")
    if any(a == 0 for a in coeffs):
        raise ValueError("recovery-set coefficients must be nonzero")
    if any(not 0 <= c < code.N for c in support):
        raise ValueError("support column out of range")
    acc = np.zeros(code.n, dtype=np.int64)
    for c, a in zip(support, coeffs):
        acc = (acc + a * code.matrix.column(c)) % code.q
    if not np.array_equal(acc, VectorFq.unit(code.field, code.n, item).entries):
        raise ValueError(f"combination does not equal the unit vector e_{item}")
    return RecoverySet(item, support, coeffs)


def enumerate_recovery_sets(
    code: LinearBatchCode, item: int, max_size: Optional[int] = None
) -> list[RecoverySet]:
    """All minimal-support recovery sets for `item`, by size then lex order."""
    if not 0 <= item < code.n:
        raise ValueError(f"item {item} out of range [0, {code.n})")
    cap = code.N if max_size is None else min(max_size, code.N)
    return [rs for rs, _, _ in code._recovery_options(item, cap)]


def canonical_request(request: Iterable[int], n: int) -> tuple[int, ...]:
    """Sort a request multiset non-decreasingly, validating index ranges."""
    req = tuple(sorted(int(i) for i in request))
    if any(not 0 <= i < n for i in req):
        raise ValueError(f"request indices must lie in [0, {n})")
    return req


def plan_request(
    code: LinearBatchCode, request: Iterable[int], *, support_cap: Optional[int] = None
) -> Optional[QueryPlan]:
    """Plan a batch request; None means no plan exists (within support_cap).

    The search is complete over minimal-support recovery sets, which is
    lossless when support_cap is N (any plan shrinks to one using minimal
    sets).  With a smaller cap, None can be a false negative.  The returned
    plan is the first solution under a deterministic order: request slots are
    processed fewest-candidates-first, candidates in enumeration order, and
    repeated items take candidates in increasing order.
    """
    req = canonical_request(request, code.n)
    if not req:
        return QueryPlan((), ())
    cap = code.N if support_cap is None else min(support_cap, code.N)
    options = {i: code._recovery_options(i, cap) for i in set(req)}
    if any(not opts for opts in options.values()):
        return None
    order = sorted(range(len(req)), key=lambda s: (len(options[req[s]]), s))
    budget_trivial = code.t >= max(len(b) for b in code.buckets)
    loads = [0] * code.M
    chosen: list[Optional[RecoverySet]] = [None] * len(req)

    def dfs(k: int, used_mask: int, floors: dict[int, int]) -> bool:
        if k == len(order):
            return True
        slot = order[k]
        item = req[slot]
        opts = options[item]
        for idx in range(floors.get(item, 0), len(opts)):
            rs, mask, usage = opts[idx]
            if used_mask & mask:
                continue
            if not budget_trivial:
                if any(loads[b] + c > code.t for b, c in usage):
                    continue
                for b, c in usage:
                    loads[b] += c
            chosen[slot] = rs
            if dfs(k + 1, used_mask | mask, {**floors, item: idx + 1}):
                return True
            if not budget_trivial:
                for b, c in usage:
                    loads[b] -= c
        return False

    if not dfs(0, 0, {}):
        return None
    return QueryPlan(req, tuple(chosen))  # type: ignore[arg-type]


def check_plan(code: LinearBatchCode, plan: QueryPlan) -> None:
    """Re-verify a plan from scratch; raises ValueError on any violation."""
    if len(plan.sets) != len(plan.request):
        raise ValueError("plan must carry one recovery set per requested item")
    used: set[int] = set()
    loads = [0] * code.M
    for item, rs in zip(plan.request, plan.sets):
        if rs.item != item:
            raise ValueError("recovery set recovers the wrong item")
        make_recovery_set(code, rs.item, rs.support, rs.coeffs)  # equation check
        for c in rs.support:
            if c in used:
                raise ValueError(f"column {c} used by two recovery sets")
            used.add(c)
            loads[int(code.bucket_of[c])] += 1
    for b, load in enumerate(loads):
        if load > code.t:
            raise ValueError(f"bucket {b} read {load} times, budget is {code.t}")


def decode(
    code: LinearBatchCode, plan: QueryPlan, y: VectorFq
) -> list[tuple[int, int]]:
    """Evaluate each recovery set on the encoded vector y.

    Returns (item, value) pairs in plan order, touching only planned columns.
    """
    if y.field != code.field or len(y) != code.N:
        raise ValueError(f"expected a length-{code.N} vector over F_{code.q}")
    out = []
    for rs in plan.sets:
        if any(not 0 <= c < code.N for c in rs.support):
            raise ValueError("plan does not match this code")
        val = 0
        for c, a in zip(rs.support, rs.coeffs):
            val = (val + a * int(y.entries[c])) % code.q
        out.append((rs.item, val))
    return out


def _verify_guard(total: int, cap: Optional[int]) -> None:
    limit = cap if cap is not None else int(os.environ.get(VERIFY_CAP_ENV, DEFAULT_VERIFY_CAP))
    if total > limit:
        raise VerifyCapExceeded(
            f"{total} requests to check exceeds the guard of {limit}; "
            f"pass a larger cap or set {VERIFY_CAP_ENV}"
        )


def verify_batch(
    code: LinearBatchCode, m: int, *, cap: Optional[int] = None, multiset: bool = True
) -> BatchVerdict:
    """Check that every size-m request is servable.

    Iterates canonical (non-decreasing) requests; with multiset=True all
    C(n+m-1, m) multisets, otherwise all distinct-index combinations.  On
    failure returns the lexicographically first failing request.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if multiset:
        total = math.comb(code.n + m - 1, m)
        requests = itertools.combinations_with_replacement(range(code.n), m)
    else:
        total = math.comb(code.n, m)
        requests = itertools.combinations(range(code.n), m)
    _verify_guard(total, cap)
    for req in requests:
        if plan_request(code, req) is None:
            return BatchVerdict(False, req)
    return BatchVerdict(True)


def certify_max_m(
    code: LinearBatchCode, *, cap: Optional[int] = None, multiset: bool = True
) -> int:
    """Largest m for which verify_batch holds (0 if even m = 1 fails).

    Searches downward from the ceiling min(row weight) * t; each of the m
    disjoint recovery sets for a repeated item consumes a distinct column
    that is nonzero in that item's row, and a bucket yields at most t
    columns, so no larger m can hold.  Feasibility is monotone in m.
    """
    ceiling = min(row_weights(code.matrix)) * code.t
    if not multiset:
        ceiling = min(ceiling, code.n)
    for m in range(ceiling, 0, -1):
        if verify_batch(code, m, cap=cap, multiset=multiset).holds:
            return m
    return 0
