"""Graded arcs on the torus with one boundary component and two marked points.

Three arcs a1, a2, a3 between the auxiliary boundary points r and s cut the
surface into two quadrilaterals.  F_p contains the marked point p on its
boundary side and F_q contains q.  Read counterclockwise, both faces have
sides (boundary, a1, a2, a3).  Crossing a_i switches faces, and a point on
a_i is seen in opposite orders from the two faces.

A graded arc is recorded as its start point, the labels of the arcs it
crosses in order, and the intersection index at the first crossing.
Segment k runs from crossing k to crossing k+1.  Crossing 0 is the start
point and crossing n+1 the end point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

MARKED = ("p", "q")
LABELS = (1, 2, 3)
BOUNDARY = 0  # side index of the boundary segment in each face

SEGMENT_TYPES = {
    ("p", 1, 3): "i", ("q", 3, 2): "ii", ("p", 2, 1): "iii",
    ("q", 1, 3): "iv", ("p", 3, 2): "v", ("q", 2, 1): "vi",
    ("p", 3, 1): "i'", ("q", 2, 3): "ii'", ("p", 1, 2): "iii'",
    ("q", 3, 1): "iv'", ("p", 2, 3): "v'", ("q", 1, 2): "vi'",
}
UNPRIMED = ("i", "ii", "iii", "iv", "v", "vi")
PRIMED = ("i'", "ii'", "iii'", "iv'", "v'", "vi'")

SLE = "SLE"
SRE = "SRE"

_LAP = (1, 2, 3, 1, 2, 3)
_LAP_INV = (3, 2, 1, 3, 2, 1)


class ArcError(ValueError):
    pass


class EndpointsDiffer(ArcError):
    pass


class NoSharedEndpoint(ArcError):
    pass


class CircleReductionError(ArcError):
    pass


def other(z: str) -> str:
    return "q" if z == "p" else "p"


@dataclass(frozen=True, order=True)
class GradedArc:
    start: str
    word: tuple[int, ...]
    mu1: int = 0

    def __post_init__(self):
        if self.start not in MARKED:
            raise ArcError(f"start must be p or q, got {self.start!r}")
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise ArcError("an arc must cross at least one arc of the system")
        if any(w not in LABELS for w in word):
            raise ArcError(f"labels must lie in 1..3, got {word}")
        if any(a == b for a, b in zip(word, word[1:])):
            raise ArcError(f"adjacent labels must differ, got {word}")
        if not isinstance(self.mu1, int):
            raise ArcError("mu1 must be an integer")

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_arc(self)


_ARC_RE = re.compile(r"^([pq]):([1-3](?:,[1-3])*)@([+-]?\d+)$")


def parse_arc(text: str) -> GradedArc:
    """Read ``<start>:<l1>,...,<ln>@<mu1>``."""
    m = _ARC_RE.match(text.strip())
    if not m:
        raise ArcError(f"cannot read arc {text!r}")
    return GradedArc(m.group(1), tuple(int(c) for c in m.group(2).split(",")), int(m.group(3)))


def format_arc(arc: GradedArc) -> str:
    return f"{arc.start}:{','.join(map(str, arc.word))}@{arc.mu1}"


def end_point(arc: GradedArc) -> str:
    return other(arc.start) if arc.n % 2 else arc.start


def same_endpoints(arc: GradedArc) -> bool:
    return arc.n % 2 == 0


def segment_face(arc: GradedArc, k: int) -> str:
    """Face ('p' or 'q') containing segment k, for 0 <= k <= n."""
    if not 0 <= k <= arc.n:
        raise IndexError(k)
    return arc.start if k % 2 == 0 else other(arc.start)


def segment_sides(arc: GradedArc, k: int) -> tuple[int, int]:
    """Sides joined by segment k, with 0 standing for the boundary side."""
    a = BOUNDARY if k == 0 else arc.word[k - 1]
    b = BOUNDARY if k == arc.n else arc.word[k]
    return a, b


def step(a: int, b: int) -> int:
    return 1 if a < b else -1


def index_sequence(arc: GradedArc) -> tuple[int, ...]:
    mus = [arc.mu1]
    for a, b in zip(arc.word, arc.word[1:]):
        mus.append(mus[-1] + step(a, b))
    return tuple(mus)


def last_index(arc: GradedArc) -> int:
    return arc.mu1 + sum(step(a, b) for a, b in zip(arc.word, arc.word[1:]))


def reverse(arc: GradedArc) -> GradedArc:
    return GradedArc(end_point(arc), arc.word[::-1], last_index(arc))


def shift_arc(arc: GradedArc, d: int) -> GradedArc:
    """The grading shift [d]; the first index moves by +d."""
    return GradedArc(arc.start, arc.word, arc.mu1 + d)


def canonicalize(arc: GradedArc) -> GradedArc:
    return min(arc, reverse(arc))


def underlying(arc: GradedArc) -> tuple[str, tuple[int, ...]]:
    """Canonical (start, word) of the ungraded arc, independent of direction."""
    rev = (end_point(arc), arc.word[::-1])
    return min((arc.start, arc.word), rev)


def is_gamma(arc: GradedArc) -> bool:
    c = canonicalize(arc)
    return c.start == "p" and c.word == (1, 2, 3)


def gamma(mu1: int = 0) -> GradedArc:
    return GradedArc("p", (1, 2, 3), mu1)


# -- germs at marked points ---------------------------------------------------

def germ_word(arc: GradedArc, z: str) -> tuple[int, ...]:
    """Crossing labels read from the endpoint z (the start when both ends are z)."""
    if arc.start == z:
        return arc.word
    if end_point(arc) == z:
        return arc.word[::-1]
    raise NoSharedEndpoint(f"{format_arc(arc)} has no endpoint at {z}")


def compare_germs(u: Sequence[int], v: Sequence[int]) -> int:
    """-1 if the strand u leaves the common point to the left of v, 1 if right, 0 if equal.

    Both strands leave the same marked point and run parallel until they
    first choose different exit sides of a face.  Entering a face through
    side X, the exit side that comes later counterclockwise after X lies
    further to the left.  A strand that has used up its word exits through
    the boundary side to its end point.
    """
    prev = BOUNDARY
    for k in range(max(len(u), len(v))):
        a = u[k] if k < len(u) else BOUNDARY
        b = v[k] if k < len(v) else BOUNDARY
        if a != b:
            return -1 if (a - prev) % 4 > (b - prev) % 4 else 1
        prev = a
    return 0


def oriented_from(a: GradedArc, b: GradedArc, z: str) -> bool:
    """Whether z is an oriented intersection from a to b.

    True when the germ of a at z lies to the left of the germ of b, so that
    a small clockwise rotation at z carries a to b.  Coinciding germs count
    in both directions.
    """
    c = compare_germs(germ_word(a, z), germ_word(b, z))
    return c <= 0


def endpoint_index(src: GradedArc, dst: GradedArc) -> int:
    """Intersection index at the shared start point, oriented from src to dst."""
    if src.start != dst.start:
        raise EndpointsDiffer(f"{format_arc(src)} and {format_arc(dst)} start differently")
    return src.mu1 - dst.mu1


def relative_position(arc: GradedArc) -> str:
    """SLE when the starting segment lies left of the ending segment, else SRE."""
    if not same_endpoints(arc):
        raise EndpointsDiffer(f"{format_arc(arc)} has distinct endpoints")
    c = compare_germs(arc.word, arc.word[::-1])
    if c == 0:  # impossible: an even palindrome would repeat its middle letter
        raise ArcError("start and end germs coincide")
    return SLE if c < 0 else SRE


def self_index(arc: GradedArc) -> int:
    """Index of the oriented self-intersection at the common endpoint."""
    mus = index_sequence(arc)
    if relative_position(arc) == SRE:
        return mus[-1] - mus[0]
    return mus[0] - mus[-1]


# -- circles -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CircleNumber:
    numerator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 6)

    def __str__(self) -> str:
        return f"{self.numerator}/6"


def _circle_numerator(word: Sequence[int]) -> int:
    if word[0] == 2:
        return 0
    sign = 1 if word[0] == 1 else -1
    length = 0
    for i, w in enumerate(word, 1):
        target = i % 3 if sign > 0 else (4 - i) % 3
        if w % 3 != target:
            break
        length = i
    return sign * length


def circle_number(arc: GradedArc) -> CircleNumber:
    return CircleNumber(_circle_numerator(arc.word))


def circle_number_rev(arc: GradedArc) -> CircleNumber:
    return CircleNumber(_circle_numerator(arc.word[::-1]))


def contains_circle(arc: GradedArc) -> bool:
    return max(abs(_circle_numerator(arc.word)), abs(_circle_numerator(arc.word[::-1]))) > 6


def _free_reduce(items: list[tuple[int, int | None]]) -> list[tuple[int, int | None]]:
    out: list[tuple[int, int | None]] = []
    for it in items:
        if out and out[-1][0] == it[0]:
            out.pop()
        else:
            out.append(it)
    return out


def unwind(arc: GradedArc, direction: int = 1) -> GradedArc:
    """Drag both endpoints once around the boundary and regrade by -2*direction.

    ``direction=1`` moves the endpoints anticlockwise, lowering both circle
    numbers by one; ``direction=-1`` is the inverse move.  Crossings of the
    original arc that survive keep their index before the regrading.
    """
    head, tail = (_LAP_INV, _LAP) if direction > 0 else (_LAP, _LAP_INV)
    items = [(w, None) for w in head] + [(w, i) for i, w in enumerate(arc.word)] + [(w, None) for w in tail]
    reduced = _free_reduce(items)
    if not reduced:
        raise CircleReductionError(f"{format_arc(arc)} collapses under unwinding")
    word = tuple(w for w, _ in reduced)
    shift = -2 * direction
    mus = index_sequence(arc)
    anchor = next(((pos, orig) for pos, (_, orig) in enumerate(reduced) if orig is not None), None)
    if anchor is None:
        # no original crossing survives; keep the first index
        mu1 = arc.mu1
    else:
        pos, orig = anchor
        mu_at = mus[orig] + shift
        mu1 = mu_at - sum(step(a, b) for a, b in zip(word[:pos], word[1:pos + 1]))
    return GradedArc(arc.start, word, mu1)


def reduce_circles(arc: GradedArc, max_steps: int | None = None) -> GradedArc:
    """Unwind boundary laps until the arc contains no circle."""
    limit = max_steps if max_steps is not None else arc.n + 2
    for _ in range(limit):
        if not contains_circle(arc):
            return arc
        c = _circle_numerator(arc.word)
        cr = _circle_numerator(arc.word[::-1])
        if max(c, cr) > 6:
            arc = unwind(arc, 1)
        else:
            arc = unwind(arc, -1)
    if contains_circle(arc):
        raise CircleReductionError(f"circle reduction did not terminate for {format_arc(arc)}")
    return arc


# -- simplest sequences ----------------------------------------------------------

def _admissible_step(word: Sequence[int], mus: Sequence[int], a: int, b: int) -> bool:
    # word and mus are 1-based in the text; here word[i-1] is the i-th label
    return (a - b) % 2 == 1 and word[a] == word[b - 1] and mus[a] == mus[b - 1]


def is_admissible(arc: GradedArc, seq: Sequence[int]) -> bool:
    """Conditions A1-A3 between every pair of consecutive entries."""
    if not seq or seq[0] != 0 or seq[-1] != arc.n or list(seq) != sorted(set(seq)):
        return False
    mus = index_sequence(arc)
    return all(_admissible_step(arc.word, mus, a, b) for a, b in zip(seq, seq[1:]))


def simplest_sequence(arc: GradedArc) -> tuple[int, ...]:
    """Shortest admissible sequence, lexicographically first among the shortest.

    A shortest admissible sequence has no admissible proper subsequence, so
    it is simplest.  Found by breadth-first search on the admissible steps.
    """
    n = arc.n
    mus = index_sequence(arc)
    # layered search keeps the lexicographically smallest path per node
    best: dict[int, tuple[int, ...]] = {0: (0,)}
    frontier = [0]
    while frontier and n not in best:
        nxt: dict[int, tuple[int, ...]] = {}
        for a in frontier:
            for b in range(a + 1, n + 1):
                if b in best or not _admissible_step(arc.word, mus, a, b):
                    continue
                cand = best[a] + (b,)
                if b not in nxt or cand < nxt[b]:
                    nxt[b] = cand
        best.update(nxt)
        frontier = sorted(nxt)
    return best[n]


def skeleton(arc: GradedArc, seq: Sequence[int] | None = None) -> tuple[int, ...]:
    """Labels at the marked crossings i_2, ..., i_t of a simplest sequence."""
    seq = simplest_sequence(arc) if seq is None else seq
    return tuple(arc.word[i - 1] for i in seq[1:])


def segment_types(arc: GradedArc) -> tuple[str, ...]:
    return tuple(
        SEGMENT_TYPES[(segment_face(arc, k), arc.word[k - 1], arc.word[k])]
        for k in range(1, arc.n)
    )


def has_all_six(types: Iterable[str]) -> bool:
    s = set(types)
    return set(UNPRIMED) <= s or set(PRIMED) <= s


# -- simplicity -------------------------------------------------------------------

def _interleave(x: tuple, y: tuple) -> bool:
    a, b = sorted(x)
    return (a < y[0] < b) != (a < y[1] < b)


def sides_interleave(s: tuple[int, int], t: tuple[int, int]) -> bool:
    """Chords joining four distinct sides of a face always cross."""
    if len({*s, *t}) < 4:
        return False
    return _interleave(s, t)


def segments_forced_cross(arc: GradedArc, k1: int, k2: int) -> bool:
    """Segments k1 and k2 lie in one face and join interleaved sides."""
    return (segment_face(arc, k1) == segment_face(arc, k2)
            and sides_interleave(segment_sides(arc, k1), segment_sides(arc, k2)))


def _chords_by_face(arc: GradedArc):
    faces: dict[str, list[tuple[object, object]]] = {"p": [], "q": []}
    n = arc.n
    for k in range(n + 1):
        a = ("end", 0) if k == 0 else ("x", k)
        b = ("end", 1) if k == n else ("x", k + 1)
        faces[segment_face(arc, k)].append((a, b))
    return faces


class _ParityUnion:
    """Boolean variables tied by equal or opposite values, some of them fixed."""

    def __init__(self):
        self.parent: dict = {}
        self.parity: dict = {}  # value(x) = value(parent) xor parity
        self.value: dict = {}   # fixed values, kept on roots only

    def find(self, x):
        if x not in self.parent:
            self.parent[x], self.parity[x] = x, 0
        if self.parent[x] == x:
            return x, 0
        root, p = self.find(self.parent[x])
        self.parent[x] = root
        self.parity[x] ^= p
        return root, self.parity[x]

    def fix(self, x, v: int) -> bool:
        root, p = self.find(x)
        v ^= p
        if self.value.setdefault(root, v) != v:
            return False
        return True

    def link(self, x, y, differ: int) -> bool:
        """Require value(x) xor value(y) == differ."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return px ^ py == differ
        rel = px ^ py ^ differ
        self.parent[rx], self.parity[rx] = ry, rel
        if rx in self.value:
            return self.fix(ry, self.value.pop(rx) ^ rel)
        return True

    def get(self, x):
        root, p = self.find(x)
        return None if root not in self.value else self.value[root] ^ p


def _side(arc: GradedArc, pt) -> int:
    kind, v = pt
    return BOUNDARY if kind == "end" else arc.word[v - 1]


def _order_variable(p1, p2):
    """('g',) for the two germs, ('x', a, b) with a < b for two crossing points on one side."""
    if p1[0] == "end":
        return ("g",)
    a, b = sorted((p1[1], p2[1]))
    return ("x", a, b)


def _local_position(arc: GradedArc, pt, sign: int, values: dict):
    # each point shares a side with at most one point of the other chord
    kind, v = pt
    if kind == "end":
        germs = (0, 1) if values.get(("g",), 1) else (1, 0)
        return (BOUNDARY, germs[v])
    r = 0
    for key, before in values.items():
        if key[0] == "x" and v in key[1:]:
            r = int(before != (key[1] == v))
    return (arc.word[v - 1], sign * r)


def _simple_by_constraints(arc: GradedArc) -> bool | None:
    """Decide simplicity from pairwise order constraints, or None when they leave a choice.

    Two chords of a face can only interleave through the order of points on a
    side they share, so each chord pair constrains at most two order
    variables.  Those constraints are propagated exactly; a contradiction
    means no choice of orders works.
    """
    uf = _ParityUnion()
    faces = _chords_by_face(arc)
    for face, chords in faces.items():
        sign = 1 if face == "p" else -1
        for c1, c2 in combinations(chords, 2):
            vs = sorted({_order_variable(x, y) for x in c1 for y in c2 if _side(arc, x) == _side(arc, y)})
            allowed = []
            for vals in product((1, 0), repeat=len(vs)):
                values = dict(zip(vs, vals))
                u = tuple(_local_position(arc, pt, sign, values) for pt in c1)
                w = tuple(_local_position(arc, pt, sign, values) for pt in c2)
                if not _interleave(u, w):
                    allowed.append(vals)
            if len(allowed) == 2 ** len(vs):
                continue
            if not allowed:
                return False
            if len(allowed) == 1:
                if not all(uf.fix(v, x) for v, x in zip(vs, allowed[0])):
                    return False
            elif len(allowed) == 2 and len(vs) == 2:
                (a1, b1), (a2, b2) = allowed
                if a1 == a2:
                    ok = uf.fix(vs[0], a1)
                elif b1 == b2:
                    ok = uf.fix(vs[1], b1)
                else:
                    ok = uf.link(vs[0], vs[1], a1 ^ b1)
                if not ok:
                    return False
            else:
                return None
    rank: dict[int, int] = {}
    for lab in LABELS:
        pts = [k for k in range(1, arc.n + 1) if arc.word[k - 1] == lab]
        before = {k: 0 for k in pts}
        for a, b in combinations(pts, 2):
            v = uf.get(("x", a, b))
            if v is None:
                return None
            before[b if v else a] += 1
        if sorted(before.values()) != list(range(len(pts))):
            return False  # the forced comparisons are not a linear order
        rank.update(before)
    g = uf.get(("g",))
    germs = (0, 1) if g is None or g else (1, 0)

    def pos(pt, sign):
        kind, v = pt
        return (BOUNDARY, germs[v]) if kind == "end" else (arc.word[v - 1], sign * rank[v])

    for face, chords in faces.items():
        sign = 1 if face == "p" else -1
        placed = [(pos(a, sign), pos(b, sign)) for a, b in chords]
        if any(_interleave(c1, c2) for c1, c2 in combinations(placed, 2)):
            return None
    return True


def is_simple(arc: GradedArc) -> bool:
    """Decide whether the arc has a representative without self-crossings.

    The orders of the crossing points along a1, a2, a3 and, when both ends
    sit at the same marked point, the order of the two germs there, must
    leave the chords in both faces pairwise non-interleaved.  Pairwise
    constraint propagation settles almost every arc; a backtracking search
    over the orders handles the rest.
    """
    decided = _simple_by_constraints(arc)
    return _simple_by_search(arc) if decided is None else decided


def _simple_by_search(arc: GradedArc) -> bool:
    """Backtracking over rank assignments, testing each chord pair once all its ends are ranked."""
    n = arc.n
    # a face with a single chord can never interleave
    active = [(face, ch) for face, ch in _chords_by_face(arc).items() if len(ch) > 1]
    if not active:
        return True
    sizes = {lab: arc.word.count(lab) for lab in LABELS}
    germ_orders = ((0, 1), (1, 0)) if same_endpoints(arc) else ((0, 0),)

    free, watch = [], {k: [] for k in range(1, n + 1)}
    for face, chords in active:
        sign = 1 if face == "p" else -1
        for c1, c2 in combinations(chords, 2):
            ks = {v for kind, v in (*c1, *c2) if kind == "x"}
            pair = (sign, c1, c2, ks)
            if not ks:
                free.append(pair)
            for k in ks:
                watch[k].append(pair)

    for germs in germ_orders:
        rank: dict[int, int] = {}

        def pos(pt, sign):
            kind, v = pt
            if kind == "end":
                return (BOUNDARY, germs[v])
            return (arc.word[v - 1], sign * rank[v])

        def crossing(pair) -> bool:
            sign, c1, c2, ks = pair
            if any(k not in rank for k in ks):
                return False
            return _interleave((pos(c1[0], sign), pos(c1[1], sign)),
                               (pos(c2[0], sign), pos(c2[1], sign)))

        used = {lab: set() for lab in LABELS}

        def place(k: int) -> bool:
            # points are ranked in the order the arc visits them, completing chords early
            if k > n:
                return True
            lab = arc.word[k - 1]
            for r in range(sizes[lab]):
                if r in used[lab]:
                    continue
                rank[k] = r
                used[lab].add(r)
                if not any(crossing(pr) for pr in watch[k]) and place(k + 1):
                    return True
                used[lab].discard(r)
                del rank[k]
            return False

        if not any(crossing(pr) for pr in free) and place(1):
            return True
    return False
