"""Bounded complexes of indecomposable projectives with path-labeled differentials.

The differential component ``d <k> <row> <col>`` maps the ``col``-th summand
of degree k to the ``row``-th summand of degree k+1.  Its value is a
combination of nonzero paths from the row summand's vertex to the column
summand's vertex.  Composites multiply left to right, so the component of
d^{k+1} d^k at (r, c) is the sum over m of entry(k+1, r, m) * entry(k, m, c).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .gfp import DEFAULT_PRIME, rank_mod_p
from .quiver import GentleAlgebra, NotComposable, ParseError, Path, lambda_fixed


class ComplexError(ValueError):
    pass


class SquareNonzero(ComplexError):
    def __init__(self, degree: int, row: int, col: int):
        super().__init__(f"d^{degree + 1} d^{degree} is nonzero at ({row}, {col})")
        self.degree, self.row, self.col = degree, row, col


class MixedAlgebras(ComplexError):
    pass


Terms = tuple[tuple[Path, int], ...]


def _normalize(combo: Mapping[Path, int]) -> Terms:
    return tuple(sorted(((p, c) for p, c in combo.items() if c != 0), key=lambda t: t[0].sort_key()))


@dataclass(frozen=True, eq=False)
class ProjComplex:
    algebra: GentleAlgebra
    terms: tuple[tuple[int, tuple[int, ...]], ...]
    entries: tuple[tuple[tuple[int, int, int], Terms], ...]

    def __post_init__(self):
        degs = [k for k, _ in self.terms]
        if degs != sorted(set(degs)):
            raise ComplexError("degrees must be strictly increasing")
        if any(not vs for _, vs in self.terms):
            raise ComplexError("empty degrees must be omitted")
        for v in (v for _, vs in self.terms for v in vs):
            if v not in self.algebra.vertices:
                raise ComplexError(f"unknown vertex {v}")
        keys = [key for key, _ in self.entries]
        if keys != sorted(set(keys)):
            raise ComplexError("differential entries must be sorted and unique")
        for (k, row, col), combo in self.entries:
            if not combo:
                raise ComplexError("zero entries must be omitted")
            if not (0 <= row < len(self.term(k + 1)) and 0 <= col < len(self.term(k))):
                raise ComplexError(f"entry ({k}, {row}, {col}) out of range")

    @classmethod
    def build(
        cls,
        terms: Mapping[int, Iterable[int]],
        entries: Mapping[tuple[int, int, int], Mapping[Path, int]] | None = None,
        algebra: GentleAlgebra | None = None,
    ) -> "ProjComplex":
        algebra = algebra or lambda_fixed()
        t = tuple((k, tuple(vs)) for k, vs in sorted(terms.items()) if tuple(vs))
        e = []
        for key, combo in sorted((entries or {}).items()):
            norm = _normalize(combo)
            if norm:
                e.append((key, norm))
        return cls(algebra, t, tuple(e))

    @classmethod
    def stalk(cls, vertex: int, degree: int = 0, algebra: GentleAlgebra | None = None) -> "ProjComplex":
        return cls.build({degree: (vertex,)}, algebra=algebra)

    @classmethod
    def zero(cls, algebra: GentleAlgebra | None = None) -> "ProjComplex":
        return cls.build({}, algebra=algebra)

    def _key(self):
        return (self.algebra, self.terms, self.entries)

    def __eq__(self, other):
        if not isinstance(other, ProjComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (ProjComplex, (self.algebra, self.terms, self.entries))

    def __repr__(self):
        return f"ProjComplex({to_literal(self)!r})"

    @cached_property
    def _term_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.terms)

    @cached_property
    def _entry_map(self) -> dict[tuple[int, int, int], Terms]:
        return dict(self.entries)

    @cached_property
    def _by_col(self) -> dict[tuple[int, int], tuple[tuple[int, Terms], ...]]:
        out: dict[tuple[int, int], list] = {}
        for (k, row, col), combo in self.entries:
            out.setdefault((k, col), []).append((row, combo))
        return {key: tuple(v) for key, v in out.items()}

    @cached_property
    def _by_row(self) -> dict[tuple[int, int], tuple[tuple[int, Terms], ...]]:
        out: dict[tuple[int, int], list] = {}
        for (k, row, col), combo in self.entries:
            out.setdefault((k, row), []).append((col, combo))
        return {key: tuple(v) for key, v in out.items()}

    def term(self, k: int) -> tuple[int, ...]:
        return self._term_map.get(k, ())

    def entry(self, k: int, row: int, col: int) -> Terms:
        return self._entry_map.get((k, row, col), ())

    def column(self, k: int, col: int) -> tuple[tuple[int, Terms], ...]:
        """Nonzero entries of d^k in column ``col`` as (row, terms)."""
        return self._by_col.get((k, col), ())

    def row(self, k: int, row: int) -> tuple[tuple[int, Terms], ...]:
        """Nonzero entries of d^k in row ``row`` as (col, terms)."""
        return self._by_row.get((k, row), ())

    def degrees(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return self.terms[0][0], self.terms[-1][0]

    def width(self) -> int:
        """Length of the smallest degree interval containing every summand."""
        s = self.support()
        return 0 if s is None else s[1] - s[0] + 1

    def summand_count(self) -> int:
        return sum(len(vs) for _, vs in self.terms)


def validate_complex(X: ProjComplex) -> None:
    """Raise unless every entry is a combination of nonzero composable paths and d^2 = 0."""
    A = X.algebra
    for (k, row, col), combo in X.entries:
        src = X.term(k + 1)[row]
        tgt = X.term(k)[col]
        for path, _ in combo:
            if path.source != src or path.target != tgt:
                raise NotComposable(
                    f"entry d {k} {row} {col}: {path} is not a path from {src} to {tgt}")
            if path not in A.path_basis(src, tgt):
                raise NotComposable(f"entry d {k} {row} {col}: {path} is zero in the algebra")
    for k in X.degrees():
        for c in range(len(X.term(k))):
            acc: dict[tuple[int, Path], int] = {}
            for m, inner in X.column(k, c):
                for r, outer in X.column(k + 1, m):
                    for a, ca in outer:
                        for b, cb in inner:
                            prod = A.mul(a, b)
                            if prod is not None:
                                acc[(r, prod)] = acc.get((r, prod), 0) + ca * cb
            for (r, _), value in sorted(acc.items(), key=lambda t: (t[0][0], t[0][1].sort_key())):
                if value != 0:
                    raise SquareNonzero(k, r, c)


def shift(X: ProjComplex, d: int) -> ProjComplex:
    """X[d]: the summands in degree k move to degree k - d."""
    if d == 0:
        return X
    return ProjComplex(
        X.algebra,
        tuple((k - d, vs) for k, vs in X.terms),
        tuple(((k - d, r, c), combo) for (k, r, c), combo in X.entries),
    )


def direct_sum(X: ProjComplex, Y: ProjComplex) -> ProjComplex:
    if X.algebra != Y.algebra:
        raise MixedAlgebras("direct sum of complexes over different algebras")
    degs = sorted(set(X.degrees()) | set(Y.degrees()))
    terms = {k: X.term(k) + Y.term(k) for k in degs}
    entries: dict[tuple[int, int, int], dict[Path, int]] = {}
    for (k, r, c), combo in X.entries:
        entries[(k, r, c)] = dict(combo)
    for (k, r, c), combo in Y.entries:
        entries[(k, r + len(X.term(k + 1)), c + len(X.term(k)))] = dict(combo)
    return ProjComplex.build(terms, entries, X.algebra)


def homology_dims(X: ProjComplex, prime: int = DEFAULT_PRIME) -> dict[int, tuple[int, ...]]:
    """Dimension vectors of the cohomology of X viewed as a complex of representations.

    Degrees with vanishing cohomology are omitted.  Vectors are indexed like
    ``X.algebra.vertices``.
    """
    A = X.algebra
    if X.is_zero():
        return {}
    lo, hi = X.support()
    ranks: dict[tuple[int, int], int] = {}
    dims: dict[tuple[int, int], int] = {}
    for v in A.vertices:
        for k in range(lo - 1, hi + 1):
            # basis of X^k e_v: (summand, path from its vertex to v)
            src = [(c, u) for c, w in enumerate(X.term(k)) for u in A.path_basis(w, v)]
            tgt = [(r, u) for r, w in enumerate(X.term(k + 1)) for u in A.path_basis(w, v)]
            dims[(k, v)] = len(src)
            if not src or not tgt:
                ranks[(k, v)] = 0
                continue
            index = {b: i for i, b in enumerate(tgt)}
            mat = np.zeros((len(tgt), len(src)), dtype=np.int64)
            for j, (c, u) in enumerate(src):
                for r, combo in X.column(k, c):
                    for a, coeff in combo:
                        prod = A.mul(a, u)
                        if prod is not None:
                            mat[index[(r, prod)], j] += coeff
            ranks[(k, v)] = rank_mod_p(mat, prime)
    out = {}
    for k in range(lo, hi + 1):
        vec = tuple(dims[(k, v)] - ranks[(k, v)] - ranks[(k - 1, v)] for v in A.vertices)
        if any(vec):
            out[k] = vec
    return out


_DEG_RE = re.compile(r"^deg\s+(-?\d+)\s*:\s*(.*)$")
_D_RE = re.compile(r"^d\s+(-?\d+)\s+(\d+)\s+(\d+)\s*:\s*(.+)$")
_P_RE = re.compile(r"^P\((-?\d+)\)$")
_TERM_RE = re.compile(r"^(-?\d+)\*(.+)$")


def parse_literal(text: str, algebra: GentleAlgebra | None = None) -> ProjComplex:
    """Read the line format written by :func:`to_literal`."""
    algebra = algebra or lambda_fixed()
    terms: dict[int, tuple[int, ...]] = {}
    entries: dict[tuple[int, int, int], dict[Path, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        m = _DEG_RE.match(line)
        if m:
            k = int(m.group(1))
            if k in terms:
                raise ParseError(f"line {lineno}: degree {k} declared twice")
            items = [s.strip() for s in m.group(2).split(",") if s.strip()]
            vs = []
            for item in items:
                pm = _P_RE.match(item)
                if not pm:
                    raise ParseError(f"line {lineno}: bad summand {item!r}")
                vs.append(int(pm.group(1)))
            terms[k] = tuple(vs)
            continue
        m = _D_RE.match(line)
        if m:
            key = (int(m.group(1)), int(m.group(2)), int(m.group(3)))
            if key in entries:
                raise ParseError(f"line {lineno}: entry {key} given twice")
            combo: dict[Path, int] = {}
            for chunk in m.group(4).split(" + "):
                tm = _TERM_RE.match(chunk.strip())
                if not tm:
                    raise ParseError(f"line {lineno}: bad term {chunk!r}")
                path = algebra.path(tm.group(2))
                combo[path] = combo.get(path, 0) + int(tm.group(1))
            entries[key] = combo
            continue
        raise ParseError(f"line {lineno}: cannot read {raw!r}")
    try:
        return ProjComplex.build(terms, entries, algebra)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def to_literal(X: ProjComplex) -> str:
    lines = [f"deg {k}: " + ",".join(f"P({v})" for v in vs) for k, vs in X.terms]
    for (k, r, c), combo in X.entries:
        body = " + ".join(f"{coeff}*{path}" for path, coeff in combo)
        lines.append(f"d {k} {r} {c}: {body}")
    return "".join(line + "\n" for line in lines)
