"""Exact linear algebra over a prime field."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import rank_batch


class NotPrime(ValueError):
    pass


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    return p


@dataclass(frozen=True, eq=False)
class PrimeFieldMatrix:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim != 2:
            a = a.reshape(a.shape[0] if a.ndim else 0, -1)
        object.__setattr__(self, "entries", a % self.p)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __matmul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(self.p, self.entries @ other.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeFieldMatrix)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool((self.entries == other.entries).all())
        )

    def rank(self) -> int:
        return rank_mod_p(self.entries, self.p)

    def power(self, k: int) -> "PrimeFieldMatrix":
        out = np.eye(self.rows, dtype=np.int64)
        for _ in range(k):
            out = out @ self.entries % self.p
        return PrimeFieldMatrix(self.p, out)


def rank_mod_p(a, p: int) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return int(rank_batch(a[None], p)[0])


def rref(a, p: int):
    """Reduced row echelon form and pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    nr, nc = a.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        for k in range(nr):
            if k != r and a[k, c]:
                a[k] = (a[k] - a[k, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_mod_p(a, p: int) -> np.ndarray:
    """Basis of {x : a x = 0} as the rows of the result."""
    a = np.asarray(a, dtype=np.int64)
    nc = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(nc, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(nc) if c not in pivots]
    out = np.zeros((len(free), nc), dtype=np.int64)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = (-r[i, fc]) % p
    return out
