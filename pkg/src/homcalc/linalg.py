"""Exact dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries reduced to [0, p).  All
operations are pure and deterministic (first-nonzero pivoting), so every
downstream witness is reproducible.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from .errors import DimensionMismatch

# int64 products a*b with a,b < p stay exact as long as the accumulated dot
# length times (p-1)^2 fits in 63 bits; guard at matmul time.
_INT64_LIMIT = 2**62


def normalize(a, p: int) -> np.ndarray:
    """Reduce an array-like mod p into a fresh int64 array."""
    return np.mod(np.asarray(a, dtype=np.int64), p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"matmul {a.shape} x {b.shape}")
    if a.shape[1] and a.shape[1] * (p - 1) ** 2 >= _INT64_LIMIT:
        raise DimensionMismatch("characteristic too large for exact int64 matmul")
    return (a @ b) % p


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, p - 2, p)


def rref(m, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form and strictly increasing pivot columns."""
    r = normalize(m, p).copy()
    rows, cols = r.shape
    pivots: List[int] = []
    lead = 0
    for col in range(cols):
        if lead >= rows:
            break
        piv = None
        for i in range(lead, rows):
            if r[i, col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != lead:
            r[[lead, piv]] = r[[piv, lead]]
        r[lead] = (r[lead] * inv_mod(r[lead, col], p)) % p
        for i in range(rows):
            if i != lead and r[i, col]:
                r[i] = (r[i] - r[i, col] * r[lead]) % p
        pivots.append(col)
        lead += 1
    return r, pivots


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def kernel_basis(m, p: int) -> np.ndarray:
    """Columns form a basis of the right null space (cols = nullity)."""
    m = normalize(m, p)
    r, pivots = rref(m, p)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    k = zeros(cols, len(free))
    for j, fc in enumerate(free):
        k[fc, j] = 1
        for i, pc in enumerate(pivots):
            k[pc, j] = (-r[i, fc]) % p
    return k


def solve(m, b, p: int) -> Optional[np.ndarray]:
    """One solution of m x = b (free variables zero), or None if inconsistent."""
    m = normalize(m, p)
    b = normalize(b, p)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    if b.shape[0] != m.shape[0]:
        raise DimensionMismatch(f"solve {m.shape} vs rhs {b.shape}")
    aug = np.concatenate([m, b], axis=1)
    r, pivots = rref(aug, p)
    ncols = m.shape[1]
    if any(c >= ncols for c in pivots):
        return None
    x = zeros(ncols, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, ncols:]
    return x[:, 0] if vec else x


def coords_in_span(basis: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray:
    """Express columns of `vectors` in the columns of `basis`; raises if not in span."""
    x = solve(basis, vectors, p)
    if x is None:
        raise DimensionMismatch("vectors not contained in the given span")
    return x


def in_span(basis: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    return solve(basis, vectors, p) is not None


def column_space_basis(m, p: int) -> np.ndarray:
    """Subset of columns of m forming a basis of the column space."""
    m = normalize(m, p)
    _, pivots = rref(m, p)
    return m[:, pivots]


def complement_indices(span_cols: np.ndarray, p: int) -> List[int]:
    """Standard-basis indices whose span complements the given column space."""
    _, pivots = rref(span_cols.T, p)
    dim = span_cols.shape[0]
    return [j for j in range(dim) if j not in pivots]


def quotient_maps(span_cols: np.ndarray, p: int) -> Tuple[np.ndarray, np.ndarray]:
    """(proj, sec) for the quotient F^n / colspan.

    proj is q x n with proj @ span_cols = 0; sec is n x q with proj @ sec = I.
    """
    n = span_cols.shape[0]
    g, pivots = rref(span_cols.T, p)
    g = g[: len(pivots)]
    nonp = [j for j in range(n) if j not in pivots]
    # v' = v - sum_i v[pivot_i] * g_i has zeros on pivot coords and v' == v mod span;
    # proj reads off the non-pivot coordinates of v'.
    proj = zeros(len(nonp), n)
    for j_idx, j in enumerate(nonp):
        proj[j_idx, j] = 1
        for i, pc in enumerate(pivots):
            proj[j_idx, pc] = (-g[i, j]) % p
    sec = zeros(n, len(nonp))
    for j_idx, j in enumerate(nonp):
        sec[j, j_idx] = 1
    return proj, sec


def invert(m: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Inverse of a square matrix, or None when singular."""
    n = m.shape[0]
    if m.shape[1] != n:
        return None
    x = solve(m, eye(n), p)
    if x is None or len(rref(m, p)[1]) != n:
        return None
    return x
