"""Dense linear algebra over F_p (row reduction, nullspace)."""

from __future__ import annotations

import numpy as np


def _dtype(p):
    return np.int64 if p < (1 << 31) else object


def rref(M, p):
    """Reduced row echelon form of M mod p; returns (R, pivot_columns)."""
    A = np.array(M, dtype=_dtype(p)) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c] % p)[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        f = A[:, c].copy()
        f[r] = 0
        mask = np.nonzero(f)[0]
        if len(mask):
            A[mask] = (A[mask] - np.outer(f[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def nullspace(M, p):
    """Basis (list of int lists) of {v : M v = 0} over F_p."""
    M = np.array(M, dtype=_dtype(p))
    cols = M.shape[1]
    R, pivots = rref(M, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = int(-R[i, fc]) % p
        basis.append(v)
    return basis
