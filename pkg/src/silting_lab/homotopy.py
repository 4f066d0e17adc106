"""Morphism spaces in the homotopy category of projective complexes.

A degree-d morphism f: X -> Y[d] has components f^k: X^k -> Y^{k+d}.  It is a
chain map when d_Y f^k = f^{k+1} d_X (the sign convention of the shift
differential does not change dimensions), and it is null-homotopic when
f^k = d_Y h^k + h^{k+1} d_X for some h^k: X^k -> Y^{k+d-1}.  Then

    dim Hom(X, Y[d]) = dim ker(chain condition) - rank(homotopy operator).

Everything is assembled as integer matrices once and ranked over each
requested prime, so the two-prime cross-check costs one extra elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .complexes import MixedAlgebras, ProjComplex
from .gfp import DEFAULT_PRIME, SECOND_PRIME, FieldPrime, rank_mod_p


class PrimeDisagreement(RuntimeError):
    def __init__(self, dims: dict[int, int]):
        super().__init__(f"hom dimension depends on the prime: {dims}")
        self.dims = dims


DEFAULT_PRIMES = (FieldPrime(DEFAULT_PRIME), FieldPrime(SECOND_PRIME))


def _primes(F) -> tuple[FieldPrime, ...]:
    if F is None:
        return (FieldPrime(DEFAULT_PRIME),)
    if isinstance(F, FieldPrime):
        return (F,)
    if isinstance(F, int):
        return (FieldPrime(F),)
    out = tuple(f if isinstance(f, FieldPrime) else FieldPrime(f) for f in F)
    if not out:
        raise ValueError("at least one prime is required")
    return out


def _map_basis(X: ProjComplex, Y: ProjComplex, d: int):
    """Index the coordinates of graded maps X^k -> Y^{k+d}."""
    A = X.algebra
    index = {}
    for k, xs in X.terms:
        ys = Y.term(k + d)
        if not ys:
            continue
        for j, vj in enumerate(xs):
            for i, ui in enumerate(ys):
                for path in A.path_basis(ui, vj):
                    index[(k, i, j, path)] = len(index)
    return index


def _hom_matrices(X: ProjComplex, Y: ProjComplex, d: int):
    A = X.algebra
    fvars = _map_basis(X, Y, d)
    if not fvars:
        return 0, None, None
    hvars = _map_basis(X, Y, d - 1)

    # chain condition D(f)^k = d_Y f^k - f^{k+1} d_X, one row per path coordinate
    eqs: dict = {}
    cells: list[tuple[int, int, int]] = []
    for (k, i, j, path), col in fvars.items():
        for i2, combo in Y.column(k + d, i):
            for a, c in combo:
                prod = A.mul(a, path)
                if prod is not None:
                    row = eqs.setdefault((k, i2, j, prod), len(eqs))
                    cells.append((row, col, c))
        for j0, combo in X.row(k - 1, j):
            for b, c in combo:
                prod = A.mul(path, b)
                if prod is not None:
                    row = eqs.setdefault((k - 1, i, j0, prod), len(eqs))
                    cells.append((row, col, -c))
    phi = np.zeros((len(eqs), len(fvars)), dtype=np.int64)
    for r, c, v in cells:
        phi[r, c] += v

    psi = np.zeros((len(fvars), len(hvars)), dtype=np.int64)
    for (k, i, j, path), col in hvars.items():
        for i2, combo in Y.column(k + d - 1, i):
            for a, c in combo:
                prod = A.mul(a, path)
                if prod is not None:
                    psi[fvars[(k, i2, j, prod)], col] += c
        for j0, combo in X.row(k - 1, j):
            for b, c in combo:
                prod = A.mul(path, b)
                if prod is not None:
                    psi[fvars[(k - 1, i, j0, prod)], col] += c
    return len(fvars), phi, psi


def hom_dims(X: ProjComplex, Y: ProjComplex, d: int, F=None) -> dict[int, int]:
    """dim Hom(X, Y[d]) over each prime in F, keyed by prime."""
    if X.algebra != Y.algebra:
        raise MixedAlgebras("complexes live over different algebras")
    n, phi, psi = _hom_matrices(X, Y, d)
    out = {}
    for f in _primes(F):
        if n == 0:
            out[f.p] = 0
            continue
        kernel = n - (rank_mod_p(phi, f.p) if phi.size else 0)
        out[f.p] = kernel - (rank_mod_p(psi, f.p) if psi.size else 0)
    return out


def hom_dim(X: ProjComplex, Y: ProjComplex, d: int = 0, F=None) -> int:
    """dim Hom_K(X, Y[d]).

    ``F`` is a :class:`FieldPrime`, a sequence of them, or ``None`` for the
    default prime.  With several primes the answers must agree, otherwise
    :class:`PrimeDisagreement` is raised.
    """
    dims = hom_dims(X, Y, d, F)
    values = set(dims.values())
    if len(values) != 1:
        raise PrimeDisagreement(dims)
    return values.pop()


@dataclass(frozen=True)
class HomTable:
    """Dimensions of Hom(X, Y[d]) for a contiguous range of shifts d."""

    entries: tuple[tuple[int, int], ...]

    def __getitem__(self, d: int) -> int:
        for dd, v in self.entries:
            if dd == d:
                return v
        raise KeyError(d)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def nonzero(self) -> dict[int, int]:
        return {d: v for d, v in self.entries if v}

    def fingerprint(self) -> str:
        nz = self.nonzero()
        return ";".join(f"{d}:{v}" for d, v in sorted(nz.items())) or "0"


def hom_window(X: ProjComplex, Y: ProjComplex) -> tuple[int, int]:
    """Shifts outside this interval give disjoint degree supports, hence zero."""
    if X.is_zero() or Y.is_zero():
        return (0, -1)
    (xl, xh), (yl, yh) = X.support(), Y.support()
    # need k in [xl, xh] with k + d in [yl, yh]
    return (yl - xh, yh - xl)


def hom_table(X: ProjComplex, Y: ProjComplex, dmin: int, dmax: int, F=None) -> HomTable:
    lo, hi = hom_window(X, Y)
    rows = []
    for d in range(dmin, dmax + 1):
        rows.append((d, hom_dim(X, Y, d, F) if lo <= d <= hi else 0))
    return HomTable(tuple(rows))


def positive_shift_bound(X: ProjComplex, Y: ProjComplex | None = None) -> int:
    """Largest shift d at which Hom(X, Y[d]) can be nonzero.

    Hom(X, Y[d]) needs a degree k with X^k and Y^{k+d} both nonzero, so it
    vanishes once d exceeds max(Y) - min(X).  For Y = X this is below
    width(X).  Unlike width(X) + width(Y), the bound stays correct when the
    two supports are far apart.
    """
    Y = X if Y is None else Y
    return max(0, hom_window(X, Y)[1])


def is_presilting(X: ProjComplex, F=None) -> bool:
    """Hom(X, X[d]) = 0 for every d > 0."""
    for d in range(1, positive_shift_bound(X) + 1):
        if hom_dim(X, X, d, F):
            return False
    return True


def pair_presilting(X: ProjComplex, Y: ProjComplex, F=None) -> bool:
    """Whether X (+) Y is presilting, tested summand by summand."""
    if not is_presilting(X, F) or not is_presilting(Y, F):
        return False
    for d in range(1, positive_shift_bound(X, Y) + 1):
        if hom_dim(X, Y, d, F):
            return False
    for d in range(1, positive_shift_bound(Y, X) + 1):
        if hom_dim(Y, X, d, F):
            return False
    return True


def first_positive_shift(X: ProjComplex, Y: ProjComplex, F=None,
                         shifts: Iterable[int] | None = None) -> int | None:
    """Smallest d > 0 with Hom(X, Y[d]) != 0, or None."""
    lo, hi = hom_window(X, Y)
    rng = shifts if shifts is not None else range(max(1, lo), hi + 1)
    for d in rng:
        if d > 0 and lo <= d <= hi and hom_dim(X, Y, d, F):
            return d
    return None


__all__: Sequence[str] = (
    "DEFAULT_PRIMES", "HomTable", "PrimeDisagreement", "first_positive_shift", "hom_dim",
    "hom_dims", "hom_table", "hom_window", "is_presilting", "pair_presilting",
    "positive_shift_bound",
)
