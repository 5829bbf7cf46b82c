"""Exact integer Smith normal form and rank over GF(p).

Matrices are dense numpy arrays.  Elimination runs in int64 and switches
to Python integers (object dtype) if an update could overflow.
"""

from __future__ import annotations

import math

import numpy as np

_SAFE = 2**62


def _widen_if_needed(A: np.ndarray, coef: np.ndarray, pivot_row: np.ndarray, rows: np.ndarray) -> np.ndarray:
    if A.dtype == object:
        return A
    bound = int(np.abs(coef).max()) * int(np.abs(pivot_row).max()) + int(np.abs(A[rows]).max())
    return A.astype(object) if bound >= _SAFE else A


def row_echelon(M) -> np.ndarray:
    """Integer row echelon form by Euclidean row operations (unimodular).

    Returns only the nonzero rows.  At each column the row holding the
    smallest nonzero magnitude becomes the pivot, which keeps entries small.
    """
    A = np.array(M, dtype=object if np.asarray(M).dtype == object else np.int64)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    A = A[np.any(A != 0, axis=1)]
    nrows, ncols = A.shape
    r = 0
    for j in range(ncols):
        if r == len(A):
            break
        while True:
            col = A[r:, j]
            nz = np.flatnonzero(col)
            if not len(nz):
                break
            piv = r + nz[np.argmin(np.abs(col[nz]).astype(float) if A.dtype == object else np.abs(col[nz]))]
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
            others = r + 1 + np.flatnonzero(A[r + 1:, j])
            if not len(others):
                break
            coef = A[others, j] // A[r, j]
            A = _widen_if_needed(A, coef, A[r], others)
            A[others] -= coef[:, None] * A[r]
        if A[r, j] != 0:
            r += 1
            if j % 16 == 15:
                keep = np.ones(len(A), dtype=bool)
                keep[r:] = np.any(A[r:] != 0, axis=1)
                A = A[keep]
    return A[:r]


def _is_diagonal(A: np.ndarray) -> bool:
    off = A.copy()
    n = min(A.shape)
    off[np.arange(n), np.arange(n)] = 0
    return not np.any(off != 0)


def _normalize_diagonal(d: list[int]) -> list[int]:
    """Diagonal entries to invariant factors d_1 | d_2 | ... via gcd/lcm swaps."""
    d = [abs(int(x)) for x in d]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            if g and g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_diagonal(M) -> list[int]:
    """Full Smith diagonal of M (length min(rows, cols)), zeros last."""
    A = np.asarray(M)
    rows, cols = A.shape
    B = row_echelon(A)
    while not _is_diagonal(B):
        B = row_echelon(B.T).T
        if _is_diagonal(B):
            break
        B = row_echelon(B)
    rank = min(B.shape)
    d = _normalize_diagonal([B[i, i] for i in range(rank)])
    return d + [0] * (min(rows, cols) - rank)


def invariant_factors(M) -> list[int]:
    """Invariant factors of the abelian group Z^cols / rowspace(M).

    Unit factors are dropped; each free Z summand is reported as 0.
    """
    A = np.asarray(M)
    rank_part = [d for d in smith_diagonal(A) if d != 0]
    free = A.shape[1] - len(rank_part)
    return [d for d in rank_part if d != 1] + [0] * free


def rank_mod_p(M, p: int) -> int:
    """Rank of M over GF(p) by Gaussian elimination."""
    A = np.asarray(M, dtype=np.int64) % p
    A = A[np.any(A != 0, axis=1)]
    r = 0
    for j in range(A.shape[1]):
        nz = r + np.flatnonzero(A[r:, j])
        if not len(nz):
            continue
        piv = nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, j]), p - 2, p) % p
        others = np.flatnonzero(A[:, j])
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - A[others, j][:, None] * A[r]) % p
        r += 1
        if r == len(A):
            break
    return r
