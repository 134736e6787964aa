"""Benchmark the two minimum-distance kernel paths on random binary codes.

Generates a random full-rank n x N generator matrix over F_2 and times the
compiled (numba) kernel against the pure-numpy fallback on the same input.
The compiled path is warmed once before timing so JIT compilation is not
charged to the measurement.

Usage:
    python benchmarks/bench_min_distance.py [--n 18] [--N 40] [--repeats 3]
"""

import argparse
import time

import numpy as np

from batchkit import GF2, MatrixFq, min_distance, rank
from batchkit._kernels import (
    _get_njit_kernel,
    min_weight_gf2_numpy,
    numba_enabled,
)
from batchkit.linalg import row_masks_gf2


def random_fullrank_matrix(n, N, rng):
    while True:
        g = MatrixFq(GF2, rng.integers(0, 2, size=(n, N)))
        if rank(g) == n:
            return g


def time_calls(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return result, min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=18, help="message length")
    parser.add_argument("--N", type=int, default=40, help="codeword length (<= 63)")
    parser.add_argument("--repeats", type=int, default=3, help="timed runs per path")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if not 1 <= args.n <= args.N <= 63:
        parser.error("need 1 <= n <= N <= 63")

    rng = np.random.default_rng(args.seed)
    g = random_fullrank_matrix(args.n, args.N, rng)
    masks = row_masks_gf2(g)
    print(f"random full-rank {args.n}x{args.N} binary generator, "
          f"{2 ** args.n - 1} nonzero messages, best of {args.repeats} runs")

    if numba_enabled():
        kernel = _get_njit_kernel()
        kernel(masks, args.n)  # warm-up: compile outside the timed region
        d_numba, t_numba = time_calls(lambda: int(kernel(masks, args.n)), args.repeats)
        print(f"numba kernel:   d = {d_numba}  {t_numba * 1e3:9.2f} ms")
    else:
        d_numba = None
        print("numba kernel:   unavailable (numba missing or BATCHKIT_NO_NUMBA set)")

    d_numpy, t_numpy = time_calls(
        lambda: min_weight_gf2_numpy(masks, args.n), args.repeats
    )
    print(f"numpy fallback: d = {d_numpy}  {t_numpy * 1e3:9.2f} ms")

    assert d_numpy == min_distance(g)
    if d_numba is not None:
        assert d_numba == d_numpy, "kernel paths disagree"
        print(f"agreement: ok, numba/numpy time ratio {t_numba / t_numpy:.2f}")


if __name__ == "__main__":
    main()
