"""Builders that assemble larger batch codes from smaller ones.

Each builder records the m guaranteed by its construction rule on the output
code's ``claimed_m``; certification can only meet or exceed that claim.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .batchcode import LinearBatchCode, certify_max_m
from .field import PrimeField
from .linalg import MatrixFq, VectorFq


def subcube_code(n: int, t: int, q: int = 2) -> LinearBatchCode:
    """The subcube code: two database halves plus their elementwise sum.

    Three buckets of n/2 columns each, budget t; claims m = 2t for
    1 <= t <= n/2.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    half = n // 2
    if not 1 <= t <= half:
        raise ValueError(f"t must lie in [1, {half}]")
    field = PrimeField(q)
    g = np.zeros((n, 3 * half), dtype=np.int64)
    for j in range(half):
        g[j, j] = 1
        g[half + j, half + j] = 1
        g[j, n + j] = 1
        g[half + j, n + j] = 1
    buckets = (
        tuple(range(half)),
        tuple(range(half, n)),
        tuple(range(n, n + half)),
    )
    return LinearBatchCode(MatrixFq(field, g), buckets, t=t, claimed_m=2 * t)


def _require_simple(code: LinearBatchCode, what: str) -> None:
    if code.t != 1 or any(len(b) != 1 for b in code.buckets):
        raise ValueError(f"{what} requires single-column buckets with t = 1")


def _known_m(code: LinearBatchCode) -> int:
    return code.claimed_m if code.claimed_m is not None else certify_max_m(code)


def concat_codes(c1: LinearBatchCode, c2: LinearBatchCode) -> LinearBatchCode:
    """Horizontal concatenation [G1 | G2]; claims m = m1 + m2."""
    if c1.field != c2.field:
        raise ValueError("codes must share a field")
    if c1.n != c2.n:
        raise ValueError("codes must have the same database size n")
    _require_simple(c1, "concatenation")
    _require_simple(c2, "concatenation")
    g = np.concatenate([c1.matrix.entries, c2.matrix.entries], axis=1)
    return LinearBatchCode.with_unit_buckets(
        MatrixFq(c1.field, g), t=1, claimed_m=_known_m(c1) + _known_m(c2)
    )


def direct_sum(c1: LinearBatchCode, c2: LinearBatchCode) -> LinearBatchCode:
    """Block-diagonal combination [[G1, 0], [0, G2]]; claims m = min(m1, m2)."""
    if c1.field != c2.field:
        raise ValueError("codes must share a field")
    _require_simple(c1, "direct sum")
    _require_simple(c2, "direct sum")
    g = np.zeros((c1.n + c2.n, c1.N + c2.N), dtype=np.int64)
    g[: c1.n, : c1.N] = c1.matrix.entries
    g[c1.n :, c1.N :] = c2.matrix.entries
    return LinearBatchCode.with_unit_buckets(
        MatrixFq(c1.field, g), t=1, claimed_m=min(_known_m(c1), _known_m(c2))
    )


def extend_one(
    code: LinearBatchCode, bottom_left: Optional[VectorFq] = None
) -> LinearBatchCode:
    """Add one database row and m fresh columns carrying it.

    The new generator is (n+1) x (M+m): G on top with an n x m zero block to
    its right, and a bottom row of `bottom_left` (arbitrary, default all
    zeros) followed by m ones.  Claims the input's m.
    """
    _require_simple(code, "one-row extension")
    m = _known_m(code)
    if bottom_left is None:
        bottom_left = VectorFq.zeros(code.field, code.N)
    if bottom_left.field != code.field or len(bottom_left) != code.N:
        raise ValueError(f"bottom-left block must be a length-{code.N} vector over F_{code.q}")
    g = np.zeros((code.n + 1, code.N + m), dtype=np.int64)
    g[: code.n, : code.N] = code.matrix.entries
    g[code.n, : code.N] = bottom_left.entries
    g[code.n, code.N :] = 1
    return LinearBatchCode.with_unit_buckets(MatrixFq(code.field, g), t=1, claimed_m=m)


def compose(c1: LinearBatchCode, c2: LinearBatchCode) -> LinearBatchCode:
    """Two-layer composition: re-encode each bucket of c1 with c2.

    Requires every bucket of c1 to hold exactly n2 columns, t = 1 on both
    codes, and a shared field.  Bucket b of c1 contributes the column block
    G1[:, bucket_b] @ G2; composed buckets are block-major (c1 bucket outer,
    c2 bucket inner), M1 * M2 in total.  Claims m = m1 * m2.
    """
    if c1.field != c2.field:
        raise ValueError("codes must share a field")
    if c1.t != 1 or c2.t != 1:
        raise ValueError("composition requires t = 1 on both codes")
    if any(len(b) != c2.n for b in c1.buckets):
        raise ValueError(f"every bucket of the outer code must hold exactly {c2.n} columns")
    q = c1.q
    g2 = c2.matrix.entries
    blocks = [(c1.matrix.entries[:, bucket] @ g2) % q for bucket in c1.buckets]
    g = np.concatenate(blocks, axis=1)
    buckets = []
    for a in range(c1.M):
        offset = a * c2.N
        for inner in c2.buckets:
            buckets.append(tuple(offset + j for j in inner))
    return LinearBatchCode(
        MatrixFq(c1.field, g), buckets, t=1, claimed_m=_known_m(c1) * _known_m(c2)
    )
