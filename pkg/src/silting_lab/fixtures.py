"""Regression fixtures for the case analysis of simple arcs.

Same-endpoint arcs ("loops") are read from p, oriented so that the start
germ lies right of the end germ (SRE).  Arcs between distinct marked points
("open arcs") are read from q, the end of gamma-tilde = p:1,2,3 that carries
the descending word.  Each fixture is the skeleton of one configuration: the
labels at the marked crossings of a simplest sequence, taken as a word of its
own so that its simplest sequence marks every crossing.

Each fixture checks one of these claims:

  index_difference  the loop is SRE and mu_n - mu_1 equals the stated value
  sle               the loop is SLE, so no SRE loop has this skeleton
  forced_crossing   two segments lie in one face with interleaved sides
  all_six           all six unprimed or all six primed segment types occur, so the
                    configuration is excluded for simple circle-free arcs
  end_shift         mu_n - mu_1 of an open arc equals the stated value
  gamma             the open arc is gamma-tilde up to direction and grading

The exhaustive layer enumerates every simple circle-free arc up to a length
bound and checks that its skeleton is one of the configurations above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .arcs import (
    SRE, GradedArc, contains_circle, format_arc, has_all_six, index_sequence, is_gamma,
    is_simple, relative_position, segment_types, segments_forced_cross,
    simplest_sequence, skeleton,
)


class FixtureFailure(AssertionError):
    def __init__(self, name: str, detail: str):
        super().__init__(f"{name}: {detail}")
        self.name = name
        self.detail = detail


@dataclass(frozen=True)
class CaseFixture:
    name: str
    arc: GradedArc
    claim: str
    expected: object = True
    segments: tuple[int, ...] = ()


@dataclass(frozen=True)
class FixtureResult:
    name: str
    arc: str
    claim: str
    expected: object
    observed: object
    passed: bool

    def as_record(self) -> dict:
        return {
            "name": self.name, "arc": self.arc, "claim": self.claim,
            "expected": self.expected, "observed": self.observed, "passed": self.passed,
        }


def _loop(word, claim, expected=True, segments=()):
    name = f"loop {','.join(map(str, word))} {claim}"
    return CaseFixture(name, GradedArc("p", tuple(word), 0), claim, expected, tuple(segments))


def _open(word, claim, expected=True, segments=()):
    name = f"open {','.join(map(str, word))} {claim}"
    return CaseFixture(name, GradedArc("q", tuple(word), 2), claim, expected, tuple(segments))


# Skeletons of loops with mu_n - mu_1 > 0 under SRE.
LOOP_POSITIVE = {
    (1, 2): 1,
    (1, 2, 3, 1): 1,
    (1, 2, 3, 1, 2, 3): 3,
    (1, 3): 1,
    (2, 3): 1,
    (3, 1, 2, 3): 1,
}

# Skeletons of open arcs that survive the case analysis, with mu_n - mu_1.
OPEN_ALLOWED = {
    (1, 2, 3): 2,
    (1, 3, 2, 1, 3): 0,
    (3, 1, 2, 3, 1): 0,
    (3, 2, 1): -2,  # only gamma-tilde itself
}

CASE_FIXTURES: tuple[CaseFixture, ...] = (
    # loops whose second marked label is a1
    _loop((1, 2), "index_difference", 1),
    _loop((1, 2, 3, 1), "index_difference", 1),
    _loop((1, 2, 3, 1, 2, 3), "index_difference", 3),
    _loop((1, 2, 3, 1, 2, 3, 1), "all_six"),
    _loop((1, 3), "index_difference", 1),
    _loop((1, 3, 2, 1), "sle"),
    _loop((1, 3, 2, 1, 3, 2), "forced_crossing", segments=(6, 4)),
    _loop((1, 3, 2, 1, 3, 2, 1), "all_six"),
    # loops whose second marked label is a2
    _loop((2, 1), "sle"),
    _loop((2, 1, 3), "forced_crossing", segments=(2, 0)),
    _loop((2, 3), "index_difference", 1),
    _loop((2, 3, 1), "forced_crossing", segments=(2, 0)),
    # loops whose second marked label is a3
    _loop((3, 1), "sle"),
    _loop((3, 1, 2, 3), "index_difference", 1),
    _loop((3, 1, 2, 3, 1, 2), "sle"),
    _loop((3, 1, 2, 3, 1, 2, 3), "all_six"),
    _loop((3, 2), "sle"),
    _loop((3, 2, 1, 3), "sle"),
    _loop((3, 2, 1, 3, 2, 1), "sle"),
    _loop((3, 2, 1, 3, 2, 1, 3), "all_six"),
    # open arcs whose second marked label is a1
    _open((1, 2, 3), "end_shift", 2),
    _open((1, 2, 3, 1, 2), "forced_crossing", segments=(5, 3)),
    _open((1, 2, 3, 1, 2, 3, 1), "all_six"),
    _open((1, 3, 2), "forced_crossing", segments=(3, 1)),
    _open((1, 3, 2, 1, 3), "end_shift", 0),
    _open((1, 3, 2, 1, 3, 2, 1), "all_six"),
    # open arcs whose second marked label is a2
    _open((2, 1, 3), "forced_crossing", segments=(2, 0)),
    _open((2, 3, 1), "forced_crossing", segments=(2, 0)),
    # open arcs whose second marked label is a3
    _open((3, 2, 1), "gamma"),
    _open((3, 1, 2, 3, 1), "end_shift", 0),
)


def _observe(fx: CaseFixture):
    arc = fx.arc
    if simplest_sequence(arc) != tuple(range(arc.n + 1)):
        return ("not a skeleton", simplest_sequence(arc)), False
    if fx.claim == "index_difference":
        pos = relative_position(arc)
        mus = index_sequence(arc)
        diff = mus[-1] - mus[0]
        return {"position": pos, "difference": diff}, pos == SRE and diff == fx.expected
    if fx.claim == "sle":
        pos = relative_position(arc)
        return pos, pos != SRE
    if fx.claim == "forced_crossing":
        k1, k2 = fx.segments
        crossed = segments_forced_cross(arc, k1, k2)
        simple = is_simple(arc)
        return {"crossed": crossed, "simple": simple}, crossed and not simple
    if fx.claim == "all_six":
        six = has_all_six(segment_types(arc))
        circle = contains_circle(arc)
        simple = is_simple(arc)
        return {"all_six": six, "circle": circle, "simple": simple}, six and (circle or not simple)
    if fx.claim == "end_shift":
        mus = index_sequence(arc)
        diff = mus[-1] - mus[0]
        return diff, diff == fx.expected
    if fx.claim == "gamma":
        g = is_gamma(arc)
        return g, g
    raise ValueError(f"unknown claim {fx.claim!r}")


def run_case_fixtures(fixtures=CASE_FIXTURES) -> list[FixtureResult]:
    out = []
    for fx in fixtures:
        observed, passed = _observe(fx)
        out.append(FixtureResult(fx.name, format_arc(fx.arc), fx.claim, fx.expected, observed, bool(passed)))
    return out


def check_case_fixtures(fixtures=CASE_FIXTURES) -> list[FixtureResult]:
    """Run the fixtures and raise :class:`FixtureFailure` at the first failure."""
    results = run_case_fixtures(fixtures)
    for r in results:
        if not r.passed:
            raise FixtureFailure(r.name, f"expected {r.expected!r}, observed {r.observed!r}")
    return results


# -- exhaustive layer ------------------------------------------------------------

LAYER_CROSSINGS = 12

def reduced_words(n: int) -> Iterator[tuple[int, ...]]:
    """Words of length n over 1..3 without equal neighbours, lexicographically."""
    for w in product((1, 2, 3), repeat=n):
        if all(a != b for a, b in zip(w, w[1:])):
            yield w


@dataclass
class LayerResult:
    name: str
    max_crossings: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_record(self) -> dict:
        return {
            "name": self.name, "max_crossings": self.max_crossings, "checked": self.checked,
            "violations": list(self.violations), "passed": self.passed,
        }


def _layer(name: str, max_crossings: int, start: str, parity: int,
           check: Callable[[GradedArc], str | None]) -> LayerResult:
    res = LayerResult(name, max_crossings)
    for n in range(1, max_crossings + 1):
        if n % 2 != parity:
            continue
        for w in reduced_words(n):
            arc = GradedArc(start, w, 0)
            if contains_circle(arc) or not is_simple(arc):
                continue
            res.checked += 1
            problem = check(arc)
            if problem:
                res.violations.append(f"{format_arc(arc)}: {problem}")
    return res


def _check_loop(arc: GradedArc) -> str | None:
    if relative_position(arc) != SRE:
        return None
    sk = skeleton(arc)
    if sk not in LOOP_POSITIVE:
        return f"SRE loop with unexpected skeleton {sk}"
    mus = index_sequence(arc)
    if mus[-1] - mus[0] != LOOP_POSITIVE[sk]:
        return f"mu_n - mu_1 = {mus[-1] - mus[0]}, expected {LOOP_POSITIVE[sk]}"
    return None


def _check_open(arc: GradedArc) -> str | None:
    sk = skeleton(arc)
    mus = index_sequence(arc)
    if len(sk) == 1:
        return None
    if sk not in OPEN_ALLOWED:
        return f"unexpected skeleton {sk}"
    if sk == (3, 2, 1) and not is_gamma(arc):
        return "skeleton 3,2,1 on an arc other than gamma-tilde"
    if mus[-1] - mus[0] != OPEN_ALLOWED[sk]:
        return f"mu_n - mu_1 = {mus[-1] - mus[0]}, expected {OPEN_ALLOWED[sk]}"
    return None


def loop_layer(max_crossings: int = LAYER_CROSSINGS) -> LayerResult:
    """Every simple circle-free SRE loop has a positive skeleton with the stated index gap."""
    return _layer("loops", max_crossings, "p", 0, _check_loop)


def open_layer(max_crossings: int = LAYER_CROSSINGS) -> LayerResult:
    """Every simple circle-free open arc from q has one of the surviving skeletons."""
    return _layer("open arcs", max_crossings, "q", 1, _check_open)


def run_exhaustive_layers(max_crossings: int = LAYER_CROSSINGS) -> list[LayerResult]:
    return [loop_layer(max_crossings), open_layer(max_crossings)]
