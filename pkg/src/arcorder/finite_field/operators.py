"""Nilpotent operators, their homomorphisms and embeddings as matrices.

A Jordan block of size m acts on the basis e_0, ..., e_{m-1} with
e_i = T^{m-1-i} g for a generator g, so T e_i = e_{i-1} and T e_0 = 0.
Every matrix here has entries 0 or 1 before reduction, so the same integer
matrices serve for every prime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..partitions import Partition
from ..summands import Decomposition, Indecomposable
from .linalg import PrimeFieldMatrix, check_prime, rank_mod_p


def _offsets(blocks) -> list[int]:
    out, s = [], 0
    for b in blocks:
        out.append(s)
        s += b
    return out


def jordan_matrix(blocks) -> np.ndarray:
    n = sum(blocks)
    a = np.zeros((n, n), dtype=np.int64)
    for off, b in zip(_offsets(blocks), blocks):
        for i in range(1, b):
            a[off + i - 1, off + i] = 1
    return a


def nilpotent_matrix(lam, p: int) -> PrimeFieldMatrix:
    """Block diagonal Jordan matrix of type lam over F_p."""
    return PrimeFieldMatrix(check_prime(p), jordan_matrix(tuple(lam)))


def jordan_type(a: PrimeFieldMatrix) -> Partition:
    """Block sizes read off the rank sequence of the powers of a."""
    n = a.rows
    if a.cols != n:
        raise ValueError("jordan_type needs a square matrix")
    ranks = [n]
    cur = np.eye(n, dtype=np.int64)
    while ranks[-1] > 0:
        cur = cur @ a.entries % a.p
        r = rank_mod_p(cur, a.p)
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
    # at_least[k] = number of blocks of size >= k
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return Partition(sum(1 for c in at_least if c >= j) for j in range(1, (at_least[0] if at_least else 0) + 1))


def shift_map(src: int, dst: int, s: int) -> np.ndarray:
    """g_src -> T^s g_dst between single blocks, a dst x src matrix."""
    m = np.zeros((dst, src), dtype=np.int64)
    for k in range(src):
        e = src - 1 - k + s  # T-exponent of the image of e_k
        if e <= dst - 1:
            m[dst - 1 - e, k] = 1
    return m


def intertwiner_basis(lam, mu) -> list[np.ndarray]:
    """Basis of k[T]-linear maps from blocks lam to blocks mu."""
    lam, mu = tuple(lam), tuple(mu)
    n, m = sum(lam), sum(mu)
    out = []
    for j, (oj, a) in enumerate(zip(_offsets(lam), lam)):
        for i, (oi, b) in enumerate(zip(_offsets(mu), mu)):
            for s in range(max(0, b - a), b):
                f = np.zeros((m, n), dtype=np.int64)
                f[oi : oi + b, oj : oj + a] = shift_map(a, b, s)
                out.append(f)
    return out


@dataclass(frozen=True, eq=False)
class EmbeddingPoint:
    """A k[T]-monomorphism f between operators with the given block sizes.

    Blocks need not be sorted; alpha and beta report them as partitions.
    """

    alpha_blocks: tuple
    beta_blocks: tuple
    f: np.ndarray
    p: int

    @property
    def alpha(self) -> Partition:
        return Partition(sorted(self.alpha_blocks, reverse=True))

    @property
    def beta(self) -> Partition:
        return Partition(sorted(self.beta_blocks, reverse=True))

    def matrix(self) -> PrimeFieldMatrix:
        return PrimeFieldMatrix(self.p, self.f.reshape(sum(self.beta_blocks), sum(self.alpha_blocks)))

    def is_valid(self) -> bool:
        f = self.matrix().entries
        a = jordan_matrix(self.alpha_blocks)
        b = jordan_matrix(self.beta_blocks)
        commute = not ((f @ a - b @ f) % self.p).any()
        return commute and rank_mod_p(f, self.p) == sum(self.alpha_blocks)


def _indecomposable_parts(x: Indecomposable):
    """Subspace blocks, ambient blocks and the image of the generator."""
    if x.kind == "P0":
        return (), (x.m,), []
    if x.kind == "P1":
        return (1,), (x.m,), [[(0, x.m - 1)]]
    if x.kind == "P2":
        return (2,), (x.m,), [[(0, x.m - 2)]]
    return (2,), (x.m, x.r), [[(0, x.m - 2), (1, x.r - 1)]]


def realize(obj, p: int) -> EmbeddingPoint:
    """Integer matrix form of an indecomposable or a direct sum of them."""
    items = [obj] if isinstance(obj, Indecomposable) else list(obj)
    a_blocks, b_blocks, gens = [], [], []
    for x in items:
        a, b, g = _indecomposable_parts(x)
        base = len(b_blocks)
        a_blocks += a
        gens += [[(base + i, s) for i, s in img] for img in g]
        b_blocks += b
    f = np.zeros((sum(b_blocks), sum(a_blocks)), dtype=np.int64)
    a_off, b_off = _offsets(a_blocks), _offsets(b_blocks)
    for j, (a, img) in enumerate(zip(a_blocks, gens)):
        for i, s in img:
            b = b_blocks[i]
            f[b_off[i] : b_off[i] + b, a_off[j] : a_off[j] + a] += shift_map(a, b, s)
    return EmbeddingPoint(tuple(a_blocks), tuple(b_blocks), f % p, check_prime(p))


def decomposition_point(d: Decomposition, p: int) -> EmbeddingPoint:
    return realize(list(d), p)
