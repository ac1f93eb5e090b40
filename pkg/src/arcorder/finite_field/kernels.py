"""Rank of many small matrices over a prime field.

Two interchangeable backends: a numba loop compiled on first use and a
numpy version that eliminates the whole batch column by column.  Setting
ARCORDER_NO_NUMBA=1 selects numpy; so does a missing numba.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("ARCORDER_NO_NUMBA", "") in ("", "0")


def inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def _rank_batch_numpy(mats: np.ndarray, p: int) -> np.ndarray:
    a = np.array(mats, dtype=np.int64) % p
    nb, nr, nc = a.shape
    inv = inverse_table(p)
    rank = np.zeros(nb, dtype=np.int64)
    rows = np.arange(nr)
    idx = np.arange(nb)
    for c in range(nc):
        mask = (a[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        b = idx[has]
        piv = mask[b].argmax(axis=1)
        r = rank[b]
        top = a[b, r].copy()
        a[b, r] = a[b, piv]
        a[b, piv] = top
        prow = a[b, r] * inv[a[b, r, c]][:, None] % p
        a[b, r] = prow
        factor = a[b, :, c].copy()
        factor[np.arange(len(b)), r] = 0
        a[b] = (a[b] - factor[:, :, None] * prow[:, None, :]) % p
        rank[b] += 1
    return rank


if HAVE_NUMBA:

    @njit(cache=True)
    def _rank_batch_numba(mats, p, inv):
        nb, nr, nc = mats.shape
        out = np.zeros(nb, dtype=np.int64)
        a = np.empty((nr, nc), dtype=np.int64)
        for k in range(nb):
            for i in range(nr):
                for j in range(nc):
                    a[i, j] = mats[k, i, j] % p
            r = 0
            for c in range(nc):
                if r == nr:
                    break
                piv = -1
                for i in range(r, nr):
                    if a[i, c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(nc):
                        tmp = a[r, j]
                        a[r, j] = a[piv, j]
                        a[piv, j] = tmp
                s = inv[a[r, c]]
                for j in range(c, nc):
                    a[r, j] = a[r, j] * s % p
                for i in range(r + 1, nr):
                    f = a[i, c]
                    if f != 0:
                        for j in range(c, nc):
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
                r += 1
            out[k] = r
        return out


def rank_batch(mats, p: int, backend: str | None = None) -> np.ndarray:
    """Ranks of a stack of matrices (shape batch x rows x cols) mod p."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.ndim != 3:
        raise ValueError("expected a 3-d stack of matrices")
    if mats.shape[0] == 0 or mats.shape[1] == 0 or mats.shape[2] == 0:
        return np.zeros(mats.shape[0], dtype=np.int64)
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        return _rank_batch_numba(mats, p, inverse_table(p))
    return _rank_batch_numpy(mats, p)
