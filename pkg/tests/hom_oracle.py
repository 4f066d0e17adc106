"""Hom in the homotopy category computed from explicit vector spaces.

Each projective P(i) is the span of the nonzero paths starting at i, with
arrows acting by right concatenation.  Module maps are all matrices that
commute with every arrow and idempotent, found as a nullspace; nothing here
uses the path-basis description of maps between projectives.
"""

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from silting_lab.quiver import lazy


def _space(A, vertices):
    return [(c, u) for c, v in enumerate(vertices) for u in A.paths_from(v)]


def _action(A, basis, element):
    index = {b: i for i, b in enumerate(basis)}
    m = [[0] * len(basis) for _ in basis]
    for j, (c, u) in enumerate(basis):
        if u.target != element.source:
            continue
        prod = A.compose(u, element)
        if prod is not None:
            m[index[(c, prod)]][j] = 1
    return m


def _differential(A, X, k, src, tgt):
    index = {b: i for i, b in enumerate(tgt)}
    m = [[0] * len(src) for _ in tgt]
    for j, (c, u) in enumerate(src):
        for r, combo in X.column(k, c):
            for a, coeff in combo:
                prod = A.mul(a, u)
                if prod is not None:
                    m[index[(r, prod)]][j] += coeff
    return m


def _q(v):
    f = Fraction(int(v.p), int(v.q)) if hasattr(v, "p") else Fraction(v)
    return QQ(f.numerator, f.denominator)


def _nullspace(rows, ncols):
    if ncols == 0:
        return []
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    M = DomainMatrix([[_q(v) for v in r] for r in rows], (len(rows), ncols), QQ)
    return [[Fraction(int(x.p), int(x.q)) for x in v] for v in M.nullspace().to_Matrix().tolist()]


def _rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return DomainMatrix([[_q(v) for v in r] for r in rows], (len(rows), ncols), QQ).rank()


def _module_maps(A, src, tgt):
    """Basis of module maps as flattened len(tgt) x len(src) matrices."""
    n, m = len(src), len(tgt)
    generators = [lazy(v) for v in A.vertices] + [A.path(a[0]) for a in A.quiver.arrows]
    rows = []
    for g in generators:
        S, T = _action(A, src, g), _action(A, tgt, g)
        # T f - f S = 0, entry (i, j)
        for i in range(m):
            for j in range(n):
                row = [0] * (m * n)
                for k in range(m):
                    row[k * n + j] += T[i][k]
                for k in range(n):
                    row[i * n + k] -= S[k][j]
                rows.append(row)
    return _nullspace(rows, m * n)


def _matmul(P, Q):
    return [[sum(P[i][k] * Q[k][j] for k in range(len(Q))) for j in range(len(Q[0]) if Q else 0)]
            for i in range(len(P))]


def _unflatten(vec, m, n):
    return [[vec[i * n + j] for j in range(n)] for i in range(m)]


def hom_dim_rational(X, Y, d):
    """dim Hom(X, Y[d]) over the rationals."""
    A = X.algebra
    degs = sorted(set(X.degrees()) | {k - d for k in Y.degrees()})
    if not degs:
        return 0
    lo, hi = degs[0] - 1, degs[-1] + 1
    Xs = {k: _space(A, X.term(k)) for k in range(lo - 1, hi + 2)}
    Ys = {k: _space(A, Y.term(k)) for k in range(lo - 1 + d, hi + 2 + d)}
    dX = {k: _differential(A, X, k, Xs[k], Xs[k + 1]) for k in range(lo - 1, hi + 1)}
    dY = {k: _differential(A, Y, k, Ys[k], Ys[k + 1]) for k in range(lo - 1 + d, hi + 1 + d)}

    # maps f^k: X^k -> Y^{k+d}, parametrized by module-map bases
    fbasis = {k: _module_maps(A, Xs[k], Ys[k + d]) for k in range(lo, hi + 1)}
    offsets, total = {}, 0
    for k in range(lo, hi + 1):
        offsets[k] = total
        total += len(fbasis[k])
    if total == 0:
        return 0

    def as_map(k, j):
        return _unflatten(fbasis[k][j], len(Ys[k + d]), len(Xs[k]))

    # chain condition dY f^k - f^{k+1} dX = 0 for every k
    constraints = []
    for k in range(lo - 1, hi + 1):
        m, n = len(Ys[k + 1 + d]), len(Xs[k])
        if m == 0 or n == 0:
            continue
        cols = []
        for kk in range(lo, hi + 1):
            for j in range(len(fbasis[kk])):
                if kk == k and dY.get(k + d) is not None and Ys[k + d]:
                    M = _matmul(dY[k + d], as_map(k, j))
                elif kk == k + 1 and dX.get(k) is not None and Xs[k + 1]:
                    M = [[-v for v in row] for row in _matmul(as_map(k + 1, j), dX[k])]
                else:
                    M = [[0] * n for _ in range(m)]
                cols.append([v for row in M for v in row])
        for i in range(m * n):
            constraints.append([c[i] for c in cols])
    dim_z = len(_nullspace(constraints, total))

    # null-homotopic maps dY h^k + h^{k+1} dX with h^k: X^k -> Y^{k+d-1}
    images = []
    for k in range(lo, hi + 2):
        for hv in _module_maps(A, Xs[k], Ys[k + d - 1]) if k in Xs and (k + d - 1) in Ys else []:
            h = _unflatten(hv, len(Ys[k + d - 1]), len(Xs[k]))
            vec = [0] * total
            parts = {}
            if k - 1 >= lo and Xs[k - 1] and Ys[k + d - 1]:
                parts[k - 1] = _matmul(h, dX[k - 1])       # h^k dX^{k-1}: X^{k-1} -> Y^{k-1+d}
            if k <= hi and Xs[k] and Ys[k + d]:
                parts[k] = _matmul(dY[k + d - 1], h)       # dY^{k+d-1} h^k: X^k -> Y^{k+d}
            for kk, M in parts.items():
                if not fbasis[kk]:
                    continue
                flat = [v for row in M for v in row]
                coords = _solve_in_basis(fbasis[kk], flat)
                for j, c in enumerate(coords):
                    vec[offsets[kk] + j] += c
            images.append(vec)
    rank_b = _rank(images, total) if images else 0
    return dim_z - rank_b


def _solve_in_basis(basis, target):
    """Coordinates of target in the span of basis (which is linearly independent)."""
    n = len(basis)
    M = DomainMatrix([[_q(basis[j][i]) for j in range(n)] for i in range(len(target))],
                     (len(target), n), QQ)
    b = DomainMatrix([[_q(v)] for v in target], (len(target), 1), QQ)
    aug = M.hstack(b).rref()[0].to_Matrix()
    coords = [0] * n
    pivots = M.rref()[1]
    for row, col in enumerate(pivots):
        coords[col] = Fraction(int(aug[row, n].p), int(aug[row, n].q))
    return coords
