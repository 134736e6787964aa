"""Minimum-weight enumeration kernels.

The binary (q = 2) kernel walks all nonzero messages in Gray-code order over
bit-packed codewords.  It has a numba-compiled path and a pure-numpy fallback;
set ``BATCHKIT_NO_NUMBA=1`` to force the fallback (the numpy path is also used
automatically when numba is unavailable).  Nonbinary fields use a chunked
numpy enumeration.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "BATCHKIT_NO_NUMBA"


def numba_enabled() -> bool:
    if os.environ.get(_ENV_FLAG, "").strip().lower() in ("1", "true", "yes"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


_njit_kernel = None


def _get_njit_kernel():
    global _njit_kernel
    if _njit_kernel is None:
        from numba import njit

        @njit(cache=True)
        def kernel(row_masks, n):  # pragma: no cover - compiled
            # 16-bit popcount table; a 64-bit word needs four lookups.
            pop16 = np.zeros(1 << 16, dtype=np.int64)
            for v in range(1, 1 << 16):
                pop16[v] = pop16[v >> 1] + (v & 1)
            best = 64
            cw = 0
            for i in range(1, 1 << n):
                # Gray-code step: message i differs from i-1 in bit ctz(i).
                j = 0
                while ((i >> j) & 1) == 0:
                    j += 1
                cw ^= row_masks[j]
                w = (
                    pop16[cw & 0xFFFF]
                    + pop16[(cw >> 16) & 0xFFFF]
                    + pop16[(cw >> 32) & 0xFFFF]
                    + pop16[(cw >> 48) & 0xFFFF]
                )
                if w < best:
                    best = w
            return best

        _njit_kernel = kernel
    return _njit_kernel


def min_weight_gf2_numpy(row_masks: np.ndarray, n: int) -> int:
    """Pure-numpy minimum nonzero-codeword weight for bit-packed binary rows."""
    base = min(n, 16)
    cw = np.zeros(1 << base, dtype=np.int64)
    for j in range(base):
        size = 1 << j
        cw[size : 2 * size] = cw[:size] ^ row_masks[j]
    rest = [int(m) for m in row_masks[base:]]
    best = 64
    for hi in range(1 << (n - base)):
        x = 0
        for j, mask in enumerate(rest):
            if (hi >> j) & 1:
                x ^= mask
        weights = np.bitwise_count(cw ^ x)
        if hi == 0:
            weights = weights[1:]  # skip the all-zero message
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def min_weight_gf2(row_masks: np.ndarray, n: int) -> int:
    if numba_enabled():
        return int(_get_njit_kernel()(row_masks, n))
    return min_weight_gf2_numpy(row_masks, n)


def min_weight_generic(g: np.ndarray, q: int, chunk: int = 1 << 14) -> int:
    """Minimum nonzero-codeword weight of the row space of `g` over F_q."""
    n, ncols = g.shape
    total = q**n
    radix = q ** np.arange(n, dtype=np.int64)
    best = ncols
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // radix[None, :]) % q
        words = (msgs @ g) % q
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best
