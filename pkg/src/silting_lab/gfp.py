"""Exact rank computations over prime fields using int64 numpy arrays."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 32003
SECOND_PRIME = 2

# products of two residues must fit in int64
_MAX_PRIME = 3_037_000_499


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, order=True)
class FieldPrime:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")
        if self.p > _MAX_PRIME:
            raise ValueError(f"prime {self.p} too large for int64 elimination")


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2 or a.size == 0:
        return 0
    a %= p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = rank + 1 + hit
            a[idx] = (a[idx] - np.outer(a[idx, c], a[rank])) % p
        rank += 1
    return rank


def nullity_mod_p(matrix, ncols: int, p: int) -> int:
    """Dimension of the kernel of a matrix with ``ncols`` columns."""
    m = np.asarray(matrix)
    if m.size == 0:
        return ncols
    return ncols - rank_mod_p(m, p)
