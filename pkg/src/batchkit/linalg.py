"""Dense vectors and matrices over a prime field.

Provides encoding (x @ G), rank and per-row weights, exhaustive minimum
distance, and enumeration of minimal-support column combinations hitting a
target vector.  Everything is exact integer arithmetic mod q.
"""

from __future__ import annotations

import itertools
from typing import Optional

import numpy as np

from . import _kernels
from .field import PrimeField

# Exhaustive min-distance guard: q**n_rows may not exceed this.
MAX_DISTANCE_WORDS = 1 << 24


class VectorFq:
    """Immutable row vector over F_q."""

    __slots__ = ("field", "entries")

    def __init__(self, field: PrimeField, entries) -> None:
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("vector entries must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"vector entries must be canonical residues mod {field.q}")
        arr.setflags(write=False)
        self.field = field
        self.entries = arr

    @classmethod
    def zeros(cls, field: PrimeField, length: int) -> "VectorFq":
        return cls(field, np.zeros(length, dtype=np.int64))

    @classmethod
    def unit(cls, field: PrimeField, length: int, index: int) -> "VectorFq":
        e = np.zeros(length, dtype=np.int64)
        e[index] = 1
        return cls(field, e)

    def __len__(self) -> int:
        return int(self.entries.size)

    def __iter__(self):
        return iter(int(v) for v in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorFq)
            and self.field == other.field
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return f"VectorFq(q={self.field.q}, {self.entries.tolist()})"


class MatrixFq:
    """Immutable dense matrix over F_q (row-major)."""

    __slots__ = ("field", "entries")

    def __init__(self, field: PrimeField, rows) -> None:
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("matrix must be two-dimensional and non-empty")
        if arr.min() < 0 or arr.max() >= field.q:
            raise ValueError(f"matrix entries must be canonical residues mod {field.q}")
        arr.setflags(write=False)
        self.field = field
        self.entries = arr

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "MatrixFq":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def n_rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def n_cols(self) -> int:
        return int(self.entries.shape[1])

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixFq)
            and self.field == other.field
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return f"MatrixFq(q={self.field.q}, {self.entries.tolist()})"


def mat_vec_encode(g: MatrixFq, x: VectorFq) -> VectorFq:
    """Return the row vector x @ G over F_q."""
    if x.field != g.field:
        raise ValueError("vector and matrix live in different fields")
    if len(x) != g.n_rows:
        raise ValueError(f"expected a length-{g.n_rows} vector, got {len(x)}")
    return VectorFq(g.field, (x.entries @ g.entries) % g.field.q)


def rank(a: MatrixFq) -> int:
    """Rank over F_q by Gaussian elimination."""
    q = a.field.q
    m = a.entries.copy()
    n_rows, n_cols = m.shape
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, q)) % q
        for i in range(n_rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % q
        r += 1
        if r == n_rows:
            break
    return r


def row_weights(a: MatrixFq) -> list[int]:
    """Per-row Hamming weights."""
    return [int(w) for w in np.count_nonzero(a.entries, axis=1)]


def row_masks_gf2(a: MatrixFq) -> np.ndarray:
    """Bit-pack the rows of a binary matrix (column j -> bit j)."""
    if a.field.q != 2 or a.n_cols > 63:
        raise ValueError("bit packing requires q = 2 and at most 63 columns")
    bits = 1 << np.arange(a.n_cols, dtype=np.int64)
    return (a.entries * bits).sum(axis=1)


def min_distance(a: MatrixFq) -> int:
    """Minimum Hamming weight of x @ A over all nonzero messages x.

    Requires full row rank (the generated code must have dimension n_rows)
    and an enumerable message space (q ** n_rows <= 2**24).
    """
    q = a.field.q
    n = a.n_rows
    if rank(a) != n:
        raise ValueError("minimum distance requires a full-row-rank matrix")
    if q**n > MAX_DISTANCE_WORDS:
        raise ValueError(f"message space q**n = {q}**{n} exceeds the enumeration guard")
    if q == 2 and a.n_cols <= 63:
        return _kernels.min_weight_gf2(row_masks_gf2(a), n)
    return _kernels.min_weight_generic(a.entries, q)


def _solve_unique(cols: np.ndarray, b: np.ndarray, q: int) -> Optional[np.ndarray]:
    """Unique solution c of cols @ c = b, or None.

    Returns None when the columns are linearly dependent (solution not
    unique) or the system is inconsistent.
    """
    n, k = cols.shape
    aug = np.concatenate([cols, b.reshape(-1, 1)], axis=1) % q
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i, c]), None)
        if piv is None:
            return None
        aug[[r, piv]] = aug[[piv, r]]
        aug[r] = (aug[r] * pow(int(aug[r, c]), -1, q)) % q
        for i in range(n):
            if i != r and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % q
        r += 1
    if aug[r:, k].any():
        return None
    return aug[:k, k].copy()


def combinations_equal_to(
    a: MatrixFq, target: VectorFq, max_support: int
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All minimal-support column combinations of `a` equal to `target`.

    Returns (support, coeffs) pairs where every coefficient is nonzero and
    sum(coeffs[i] * a[:, support[i]]) == target.  The family is superset-free
    (no returned support contains another), which also forces the coefficient
    vector on each support to be unique.  Ordered by support size, then
    lexicographically; supports larger than `max_support` are not searched.
    """
    if target.field != a.field:
        raise ValueError("target and matrix live in different fields")
    if len(target) != a.n_rows:
        raise ValueError(f"expected a length-{a.n_rows} target, got {len(target)}")
    q = a.field.q
    n_cols = a.n_cols
    cap = min(max_support, n_cols)
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    found_masks: list[int] = []

    if q == 2:
        col_bits = [int(m) for m in _column_masks(a)]
        tbits = 0
        for i, v in enumerate(target.entries):
            if v:
                tbits |= 1 << i
        for size in range(1, cap + 1):
            for comb in itertools.combinations(range(n_cols), size):
                cmask = 0
                acc = 0
                for j in comb:
                    cmask |= 1 << j
                    acc ^= col_bits[j]
                if acc != tbits:
                    continue
                if any(fm & cmask == fm for fm in found_masks):
                    continue
                found.append((comb, (1,) * size))
                found_masks.append(cmask)
        return found

    cols = a.entries
    tv = target.entries
    for size in range(1, cap + 1):
        for comb in itertools.combinations(range(n_cols), size):
            cmask = 0
            for j in comb:
                cmask |= 1 << j
            if any(fm & cmask == fm for fm in found_masks):
                continue
            sol = _solve_unique(cols[:, comb], tv, q)
            if sol is None or not sol.all():
                continue
            found.append((comb, tuple(int(c) for c in sol)))
            found_masks.append(cmask)
    return found


def _column_masks(a: MatrixFq) -> np.ndarray:
    # Column j packed over rows (row i -> bit i); binary matrices only.
    bits = 1 << np.arange(a.n_rows, dtype=np.int64)
    return (a.entries * bits[:, None]).sum(axis=0)
