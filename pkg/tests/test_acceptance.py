"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest -v tests/test_acceptance.py`` or directly with
``python3 tests/test_acceptance.py``.
"""

import time

import pytest

from silting_lab.arcs import end_point, format_arc, index_sequence, is_simple, parse_arc
from silting_lab.bridge import arc_to_complex
from silting_lab.cli import main
from silting_lab.complexes import homology_dims, parse_literal
from silting_lab.homotopy import hom_dims, is_presilting
from silting_lab.search import SearchConfig, dumps_report, enumerate_arcs, find_complement, run_search
from silting_lab.properties import run_property_suites
from silting_lab.fixtures import run_case_fixtures, run_exhaustive_layers

GAMMA = parse_arc("p:1,2,3@0")
GAMMA_COMPLEX = "deg -2: P(3)\ndeg -1: P(2)\ndeg 0: P(1)\nd -2 0 0: 1*y2\nd -1 0 0: 1*y1\n"
PRIMES = SearchConfig().primes


def verdict(capsys, number, title, ok, detail, elapsed, limit):
    ok = ok and elapsed < limit
    with capsys.disabled():
        print(f"\ncriterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} ({detail}; {elapsed:.2f}s, limit {limit}s)")
    assert ok, detail


def test_criterion_01_gamma_indices(capsys):
    t0 = time.perf_counter()
    seq = index_sequence(GAMMA)
    verdict(capsys, 1, "gamma-tilde index sequence", seq == (0, 1, 2), f"observed {seq}",
            time.perf_counter() - t0, 1)


def test_criterion_02_gamma_complex(capsys):
    t0 = time.perf_counter()
    X = arc_to_complex(GAMMA)
    ok = X == parse_literal(GAMMA_COMPLEX)
    verdict(capsys, 2, "X(gamma-tilde) is P(3) -y2-> P(2) -y1-> P(1)", ok,
            f"terms {X.terms}", time.perf_counter() - t0, 1)


def test_criterion_03_gamma_presilting(capsys):
    t0 = time.perf_counter()
    X = arc_to_complex(GAMMA)
    dims = {d: hom_dims(X, X, d, PRIMES) for d in range(0, 7)}
    expected = {d: {p.p: (1 if d == 0 else 0) for p in PRIMES} for d in range(0, 7)}
    verdict(capsys, 3, "self Hom of X(gamma-tilde) for d = 0..6 at both primes", dims == expected,
            f"observed {dims}", time.perf_counter() - t0, 5)


def test_criterion_04_gamma_homology(capsys):
    t0 = time.perf_counter()
    h = homology_dims(arc_to_complex(GAMMA))
    verdict(capsys, 4, "homology of X(gamma-tilde)", h == {0: (1, 1, 1)}, f"observed {h}",
            time.perf_counter() - t0, 1)


def test_criterion_05_no_complement(capsys):
    t0 = time.perf_counter()
    cfg = SearchConfig(max_crossings=8, mu_window=(-8, 8))
    records = run_search(cfg)
    found = find_complement(cfg, records)
    candidates = sum(not r["isomorphic_to_gamma"] for r in records)
    verdict(capsys, 5, "no complement of X(gamma-tilde) up to 8 crossings, mu in -8:8", found == [],
            f"{candidates} candidates, complements {[format_arc(a) for a in found]}",
            time.perf_counter() - t0, 600)


def _grid():
    return list(enumerate_arcs(SearchConfig(max_crossings=6, mu_window=(-6, 6))))


def test_criterion_06_classification(capsys):
    t0 = time.perf_counter()
    exceptions, n = [], 0
    for arc in _grid():
        n += 1
        expected = is_simple(arc) and arc.start != end_point(arc)
        if is_presilting(arc_to_complex(arc), PRIMES) != expected:
            exceptions.append(format_arc(arc))
    verdict(capsys, 6, "presilting iff simple with distinct endpoints", not exceptions,
            f"{n} arcs, exceptions {exceptions[:5]}", time.perf_counter() - t0, 300)


def test_criterion_07_same_endpoints(capsys):
    t0 = time.perf_counter()
    loops = [a for a in _grid() if a.start == end_point(a)]
    bad = [format_arc(a) for a in loops if is_presilting(arc_to_complex(a), PRIMES)]
    verdict(capsys, 7, "arcs with equal endpoints are never presilting", bad == [] and loops != [],
            f"{len(loops)} arcs, exceptions {bad[:5]}", time.perf_counter() - t0, 300)


def test_criterion_08_properties(capsys):
    t0 = time.perf_counter()
    suites = run_property_suites(PRIMES)
    small = [s.name for s in suites if s.instances < 500]
    failing = [s.name for s in suites if not s.passed]
    counts = ", ".join(f"{s.name} {s.instances}" for s in suites)
    verdict(capsys, 8, "property suites", not small and not failing,
            f"{counts}; failing {failing}", time.perf_counter() - t0, 600)


def test_criterion_09_case_fixtures(capsys):
    t0 = time.perf_counter()
    results = run_case_fixtures()
    layers = run_exhaustive_layers()
    bad = [r.name for r in results if not r.passed] + [x.name for x in layers if not x.passed]
    verdict(capsys, 9, "case-analysis fixtures and exhaustive layers", not bad,
            f"{len(results)} fixtures, {sum(x.checked for x in layers)} layer arcs, failing {bad}",
            time.perf_counter() - t0, 600)


def test_criterion_10_determinism(capsys, tmp_path):
    t0 = time.perf_counter()
    outs = []
    for workers in (1, 8):
        path = tmp_path / f"report-{workers}.json"
        code = main(["verify-paper", "--workers", str(workers), "--out", str(path)])
        outs.append((code, path.read_bytes()))
    same = outs[0][1] == outs[1][1]
    verdict(capsys, 10, "verify-paper reports byte-identical for 1 and 8 workers",
            same and outs[0][0] == 0 and outs[1][0] == 0,
            f"exit codes {outs[0][0]}, {outs[1][0]}; {len(outs[0][1])} bytes", time.perf_counter() - t0, 1200)


def test_report_text_is_stable():
    cfg = SearchConfig(max_crossings=2, mu_window=(0, 1))
    recs = run_search(cfg)
    assert dumps_report({"arcs": recs}) == dumps_report({"arcs": run_search(cfg)})


if __name__ == "__main__":
    raise SystemExit(pytest.main(["-v", __file__]))
