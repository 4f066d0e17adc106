"""Property suites tying the arc calculus to the Hom oracle.

Each suite returns a :class:`PropertyResult` with the number of instances
checked and the failing instances.  Every Hom dimension is evaluated over
all configured primes, and a disagreement raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import (
    GradedArc, compare_germs, contains_circle, end_point, format_arc, germ_word, has_all_six,
    is_simple, last_index, oriented_from, parse_arc, reduce_circles, relative_position,
    reverse, same_endpoints, segment_types, shift_arc, simplest_sequence, skeleton, unwind,
)
from .bridge import arc_to_complex, oriented_index, shared_endpoints
from .complexes import ProjComplex, parse_literal, shift
from .fixtures import reduced_words
from .homotopy import DEFAULT_PRIMES, hom_dim, hom_dims, hom_window


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_record(self) -> dict:
        return {"name": self.name, "instances": self.instances,
                "failures": list(self.failures), "passed": self.passed}


def all_arcs(max_crossings: int, mus=(0,)):
    """Every (not necessarily canonical) arc up to the crossing bound."""
    for n in range(1, max_crossings + 1):
        for w in reduced_words(n):
            for start in "pq":
                for mu in mus:
                    yield GradedArc(start, w, mu)


def intersection_index(a: GradedArc, b: GradedArc, z: str) -> int:
    """Index at the shared endpoint z from a to b.

    The endpoint formula applies in the oriented direction; the other
    direction is determined by the two indices summing to one.
    """
    if oriented_from(a, b, z):
        return oriented_index(a, b, z)
    return 1 - oriented_index(b, a, z)


def index_symmetry(max_crossings: int = 3, mus=(-1, 0, 2), F=DEFAULT_PRIMES) -> PropertyResult:
    """Oriented indices at a shared endpoint sum to one, and the oriented one is a Hom."""
    res = PropertyResult("index symmetry")
    arcs = list(all_arcs(max_crossings))
    for a in arcs:
        for b0 in arcs:
            for mu in mus:
                b = shift_arc(b0, mu)
                for z in shared_endpoints(a, b):
                    if compare_germs(germ_word(a, z), germ_word(b, z)) == 0:
                        continue
                    res.instances += 1
                    ab, ba = oriented_from(a, b, z), oriented_from(b, a, z)
                    total = intersection_index(a, b, z) + intersection_index(b, a, z)
                    if ab == ba or total != 1:
                        res.failures.append(f"{format_arc(a)} {format_arc(b)} at {z}: sum {total}")
                        continue
                    src, dst = (a, b) if ab else (b, a)
                    d = oriented_index(src, dst, z)
                    if hom_dim(arc_to_complex(src), arc_to_complex(dst), d, F) < 1:
                        res.failures.append(f"Hom(X({format_arc(src)}), X({format_arc(dst)})[{d}]) = 0")
    return res


def cancel_law(max_crossings: int = 8) -> PropertyResult:
    """Consecutive marked labels of a simplest sequence are pairwise distinct."""
    res = PropertyResult("cancel law")
    for arc in all_arcs(max_crossings):
        res.instances += 1
        sk = skeleton(arc, simplest_sequence(arc))
        for x, y, z in zip(sk, sk[1:], sk[2:]):
            if len({x, y, z}) < 3:
                res.failures.append(f"{format_arc(arc)}: skeleton {sk}")
                break
    return res


def _circle_postconditions(arc: GradedArc, out: GradedArc) -> str | None:
    if contains_circle(out):
        return "result still contains a circle"
    if (out.start, end_point(out)) != (arc.start, end_point(arc)):
        return "endpoints changed"
    if (out.mu1, last_index(out)) != (arc.mu1, last_index(arc)):
        return "first or last index changed"
    if same_endpoints(arc) and relative_position(out) != relative_position(arc):
        return "relative position changed"
    return None


def circle_reduction(enumerate_up_to: int = 10, wind_base: int = 6, laps=(1, 2, 3),
                     mus=(-2, 0, 3)) -> PropertyResult:
    """Circle reduction on simple arcs keeps endpoints, end indices and relative position.

    Two families: every simple arc with a circle up to ``enumerate_up_to``
    crossings, and every simple circle-free arc up to ``wind_base``
    crossings with its endpoints dragged around the boundary a few laps.
    Dragging the endpoints is a homeomorphism, so the wound arcs stay simple.
    """
    res = PropertyResult("circle reduction")
    for n in range(7, enumerate_up_to + 1):
        for w in reduced_words(n):
            for start in "pq":
                arc = GradedArc(start, w, 1)
                if not contains_circle(arc) or not is_simple(arc):
                    continue
                res.instances += 1
                problem = _circle_postconditions(arc, reduce_circles(arc))
                if problem:
                    res.failures.append(f"{format_arc(arc)}: {problem}")
    for base in all_arcs(wind_base, mus):
        if contains_circle(base) or not is_simple(base):
            continue
        wound = base
        for k in range(1, max(laps) + 1):
            wound = unwind(wound, -1)
            if k not in laps or not contains_circle(wound):
                continue
            res.instances += 1
            problem = _circle_postconditions(wound, reduce_circles(wound))
            if problem:
                res.failures.append(f"{format_arc(wound)}: {problem}")
    return res


def four_types(max_crossings: int = 12) -> PropertyResult:
    """No simple circle-free arc shows all six unprimed or all six primed types."""
    res = PropertyResult("segment types")
    for arc in all_arcs(max_crossings):
        if contains_circle(arc) or not is_simple(arc):
            continue
        res.instances += 1
        if has_all_six(segment_types(arc)):
            res.failures.append(f"{format_arc(arc)}: {segment_types(arc)}")
    return res


def shift_compatibility(max_crossings: int = 5, shifts=range(-3, 4)) -> PropertyResult:
    """X(arc[d]) equals X(arc)[d]."""
    res = PropertyResult("shift compatibility")
    for arc in all_arcs(max_crossings):
        X = arc_to_complex(arc)
        for d in shifts:
            res.instances += 1
            if arc_to_complex(shift_arc(arc, d)) != shift(X, d):
                res.failures.append(f"{format_arc(arc)} shifted by {d}")
    return res


_PROBE_LITERALS = (
    "deg -2: P(3)\ndeg -1: P(2)\ndeg 0: P(1)\nd -2 0 0: 1*x2\nd -1 0 0: 1*x1\n",
    "deg 0: P(2),P(2)\n",
)


def probe_set() -> tuple[ProjComplex, ...]:
    """Ten fixed complexes: the three stalks, five arc images and two literals."""
    arcs = ("p:1,2,3@0", "p:1,3@0", "q:2,1@1", "p:3,1,2@-1", "p:1,2,3,1@0")
    out = [ProjComplex.stalk(i) for i in (1, 2, 3)]
    out += [arc_to_complex(parse_arc(s)) for s in arcs]
    out += [parse_literal(t) for t in _PROBE_LITERALS]
    return tuple(out)


def full_table(X: ProjComplex, Y: ProjComplex, F=DEFAULT_PRIMES) -> tuple[tuple[int, int], ...]:
    lo, hi = hom_window(X, Y)
    return tuple((d, v) for d in range(lo, hi + 1) if (v := hom_dim(X, Y, d, F)))


def reverse_invariance(max_crossings: int = 4, F=DEFAULT_PRIMES) -> PropertyResult:
    """X(arc) and X(reverse(arc)) have the same Hom tables against every probe."""
    res = PropertyResult("reverse invariance")
    probes = probe_set()
    for arc in all_arcs(max_crossings):
        X, Xr = arc_to_complex(arc), arc_to_complex(reverse(arc))
        for P in probes:
            res.instances += 1
            if full_table(X, P, F) != full_table(Xr, P, F) or full_table(P, X, F) != full_table(P, Xr, F):
                res.failures.append(f"{format_arc(arc)} against probe {P!r}")
    return res


def two_prime_agreement(max_crossings: int = 4, F=DEFAULT_PRIMES) -> PropertyResult:
    """Every Hom between arc images up to the bound agrees over all primes."""
    res = PropertyResult("two-prime agreement")
    arcs = [arc_to_complex(a) for a in all_arcs(max_crossings) if a.start == "p"]
    for X in arcs[::3]:
        for Y in arcs:
            lo, hi = hom_window(X, Y)
            for d in range(lo, hi + 1):
                res.instances += 1
                dims = hom_dims(X, Y, d, F)
                if len(set(dims.values())) != 1:
                    res.failures.append(f"{X!r} {Y!r} d={d}: {dims}")
    return res


def run_property_suites(F=DEFAULT_PRIMES) -> list[PropertyResult]:
    return [
        index_symmetry(F=F),
        cancel_law(),
        circle_reduction(),
        four_types(),
        shift_compatibility(),
        reverse_invariance(F=F),
        two_prime_agreement(F=F),
    ]


__all__ = [
    "PropertyResult", "all_arcs", "cancel_law", "circle_reduction", "four_types", "full_table",
    "index_symmetry", "intersection_index", "probe_set", "reverse_invariance",
    "run_property_suites", "shift_compatibility", "two_prime_agreement",
]
