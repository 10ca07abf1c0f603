"""Row reduction over GF(p) on integer numpy arrays."""

from __future__ import annotations

import numpy as np

__all__ = ["rref", "rank", "nullspace", "row_space_equal"]


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.

    Returns the nonzero rows of the RREF and the pivot columns.
    """
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def rank(mat, p: int) -> int:
    a = np.asarray(mat)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(mat, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows, in RREF) of {v : mat @ v = 0 mod p}."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        n = ncols if ncols is not None else (a.shape[1] if a.ndim == 2 else 0)
        return np.eye(n, dtype=np.int64)
    red, pivots = rref(a, p)
    n = red.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-red[row, f]) % p
    if basis.shape[0] == 0:
        return basis
    return rref(basis, p)[0]


def row_space_equal(a, b, p: int) -> bool:
    ra = rref(a, p)[0] if np.asarray(a).size else np.zeros((0, 0), dtype=np.int64)
    rb = rref(b, p)[0] if np.asarray(b).size else np.zeros((0, 0), dtype=np.int64)
    if ra.shape[0] == 0 or rb.shape[0] == 0:
        return ra.shape[0] == rb.shape[0]
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
