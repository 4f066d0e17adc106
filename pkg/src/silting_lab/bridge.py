"""From graded arcs to complexes of projectives over the fixed algebra.

Each crossing with a_i contributes a summand P(i) in homological degree
minus its intersection index.  Each interior segment lies in one face and
joins two sides of it.  The segment contributes the path read off the
corners it cuts:

    face F_p:  (a1, a2) -> x1,  (a2, a3) -> y2,  (a1, a3) -> x1 y2
    face F_q:  (a1, a2) -> y1,  (a2, a3) -> x2,  (a1, a3) -> y1 x2

Composites inside one face are nonzero paths and composites across the two
faces are the relations, which is what makes d^2 vanish.
"""

from __future__ import annotations

from itertools import product

from .arcs import (
    GradedArc, NoSharedEndpoint, end_point, format_arc, germ_word, index_sequence,
    oriented_from, reverse, segment_face,
)
from .complexes import ProjComplex, validate_complex
from .homotopy import hom_dim
from .quiver import GentleAlgebra, Path, lambda_fixed

CORNER_ARROWS = {
    ("p", 1, 2): "x1", ("p", 2, 3): "y2",
    ("q", 1, 2): "y1", ("q", 2, 3): "x2",
}


def segment_path(face: str, a: int, b: int, table=None, algebra: GentleAlgebra | None = None) -> Path | None:
    """Path from the smaller to the larger label attached to a segment in ``face``."""
    table = CORNER_ARROWS if table is None else table
    algebra = algebra or lambda_fixed()
    lo, hi = sorted((a, b))
    if hi - lo == 1:
        return algebra.path(table[(face, lo, hi)])
    first = algebra.path(table[(face, 1, 2)])
    second = algebra.path(table[(face, 2, 3)])
    return algebra.compose(first, second)


def arc_to_complex(arc: GradedArc, table=None) -> ProjComplex:
    algebra = lambda_fixed()
    mus = index_sequence(arc)
    terms: dict[int, list[int]] = {}
    slot: list[tuple[int, int]] = []
    for label, mu in zip(arc.word, mus):
        deg = -mu
        terms.setdefault(deg, []).append(label)
        slot.append((deg, len(terms[deg]) - 1))
    entries = {}
    for k in range(1, arc.n):
        a, b = arc.word[k - 1], arc.word[k]
        path = segment_path(segment_face(arc, k), a, b, table, algebra)
        if path is None:
            raise ValueError(f"segment {k} of {format_arc(arc)} has a zero label")
        # the larger label sits one degree lower and maps to the smaller one
        src, tgt = (slot[k], slot[k - 1]) if b > a else (slot[k - 1], slot[k])
        assert tgt[0] == src[0] + 1
        entries[(src[0], tgt[1], src[1])] = {path: 1}
    return ProjComplex.build(terms, entries, algebra)


def candidate_tables():
    """All four ways to put one arrow of each parallel pair into each face."""
    out = []
    for first, second in product((("x1", "y1"), ("y1", "x1")), (("x2", "y2"), ("y2", "x2"))):
        out.append({
            ("p", 1, 2): first[0], ("q", 1, 2): first[1],
            ("p", 2, 3): second[0], ("q", 2, 3): second[1],
        })
    return out


def table_is_consistent(table) -> bool:
    """Within-face composites nonzero and cross-face composites zero."""
    A = lambda_fixed()
    for f, g in product("pq", repeat=2):
        prod = A.compose(A.path(table[(f, 1, 2)]), A.path(table[(g, 2, 3)]))
        if (prod is not None) != (f == g):
            return False
    return True


def oriented_index(a: GradedArc, b: GradedArc, z: str) -> int:
    """Index of the endpoint intersection at z from a to b (both read from z)."""
    a_z = a if a.start == z else reverse(a)
    b_z = b if b.start == z else reverse(b)
    if a_z.start != z or b_z.start != z:
        raise NoSharedEndpoint(f"{format_arc(a)} and {format_arc(b)} do not both end at {z}")
    return a_z.mu1 - b_z.mu1


class EndpointCheckFailed(AssertionError):
    def __init__(self, a: GradedArc, b: GradedArc, z: str, d: int):
        super().__init__(f"Hom(X({format_arc(a)}), X({format_arc(b)})[{d}]) = 0 at {z}")
        self.pair = (a, b, z, d)


def shared_endpoints(a: GradedArc, b: GradedArc) -> list[str]:
    ends_a = {a.start, end_point(a)}
    ends_b = {b.start, end_point(b)}
    return sorted(ends_a & ends_b)


def verify_endpoint_hom(a: GradedArc, b: GradedArc, z: str | None = None, F=None) -> int:
    """Check that an oriented endpoint intersection yields a nonzero Hom.

    Returns the shift d that was checked.  Raises
    :class:`EndpointCheckFailed` with the offending pair otherwise.
    """
    zs = [z] if z is not None else [w for w in shared_endpoints(a, b) if oriented_from(a, b, w)]
    if not zs:
        raise NoSharedEndpoint(f"no endpoint oriented from {format_arc(a)} to {format_arc(b)}")
    zz = zs[0]
    if not oriented_from(a, b, zz):
        raise ValueError(f"{zz} is not oriented from {format_arc(a)} to {format_arc(b)}")
    germ_word(a, zz)
    d = oriented_index(a, b, zz)
    if hom_dim(arc_to_complex(a), arc_to_complex(b), d, F) < 1:
        raise EndpointCheckFailed(a, b, zz, d)
    return d


def check_complex(arc: GradedArc) -> ProjComplex:
    X = arc_to_complex(arc)
    validate_complex(X)
    return X
