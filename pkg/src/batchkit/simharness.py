"""In-process simulation of bucket servers answering batch requests.

Servers are abstract: a transcript records exactly which column positions
each bucket was asked for, which is enough to check the load guarantee
(never more than t reads per bucket) and end-to-end reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .batchcode import LinearBatchCode, canonical_request, decode, encode, plan_request
from .linalg import VectorFq


@dataclass(frozen=True)
class SimTranscript:
    """One simulated retrieval: per-server reads, loads, and decoded values."""

    request: tuple[int, ...]
    per_server_queries: tuple[tuple[int, ...], ...]
    per_server_load: tuple[int, ...]
    reconstructed: tuple[tuple[int, int], ...]
    wall_steps: int


def simulate(
    code: LinearBatchCode, x: VectorFq, request: Iterable[int]
) -> Optional[SimTranscript]:
    """Encode x, plan and execute the request, decode, and cross-check.

    Returns None when the planner reports the request infeasible.  The
    transcript's reads are exactly the planned supports, nothing more.
    """
    req = canonical_request(request, code.n)
    y = encode(code, x)
    plan = plan_request(code, req)
    if plan is None:
        return None
    queries: list[list[int]] = [[] for _ in range(code.M)]
    for rs in plan.sets:
        for c in rs.support:
            queries[int(code.bucket_of[c])].append(c)
    queries = [sorted(qs) for qs in queries]
    values = decode(code, plan, y)
    for item, value in values:
        if value != int(x.entries[item]):
            raise AssertionError(f"decoded x_{item} = {value}, database holds {int(x.entries[item])}")
    loads = tuple(len(qs) for qs in queries)
    return SimTranscript(
        request=req,
        per_server_queries=tuple(tuple(qs) for qs in queries),
        per_server_load=loads,
        reconstructed=tuple(values),
        wall_steps=max(loads, default=0),
    )


@dataclass(frozen=True)
class WorkloadSummary:
    """Aggregate load statistics over a seeded random request workload."""

    request_count: int
    feasible_count: int
    max_load: int
    load_histogram: tuple[tuple[int, ...], ...]  # [server][load] -> count
    seed: int


def workload_stats(
    code: LinearBatchCode, m: int, trials: int, seed: int
) -> WorkloadSummary:
    """Simulate `trials` uniform random size-m requests with random databases.

    Requests are multisets drawn as m uniform indices sorted non-decreasingly;
    databases are uniform over F_q^n.  Fully reproducible for a fixed seed.
    Infeasible draws count toward request_count but not the histograms.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    hist = [[0] * (code.t + 1) for _ in range(code.M)]
    feasible = 0
    max_load = 0
    for _ in range(trials):
        req = tuple(sorted(int(i) for i in rng.integers(0, code.n, size=m)))
        x = VectorFq(code.field, rng.integers(0, code.q, size=code.n))
        transcript = simulate(code, x, req)
        if transcript is None:
            continue
        feasible += 1
        for b, load in enumerate(transcript.per_server_load):
            hist[b][load] += 1
            max_load = max(max_load, load)
    return WorkloadSummary(
        request_count=trials,
        feasible_count=feasible,
        max_load=max_load,
        load_histogram=tuple(tuple(h) for h in hist),
        seed=seed,
    )
