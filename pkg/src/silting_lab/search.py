"""Exhaustive search over graded arcs and the machine-readable report.

The search runs one task per ungraded canonical arc (start, word).  A task
builds X(arc) at grading 0 and every Hom table it needs once, then reads
off all gradings in the window: X(arc[m]) = X(arc)[m], so

    Hom(X(g), X(arc[m])[d]) = Hom(X(g), X(arc)[m + d])
    Hom(X(arc[m]), X(g)[d]) = Hom(X(arc), X(g)[d - m]).

Tasks are pure.  They are grouped by word prefix for the worker pool and
merged back in enumeration order, so the report does not depend on the
number of workers.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arcs import (
    GradedArc, canonicalize, end_point, format_arc, gamma, index_sequence, is_gamma, is_simple,
    parse_arc,
)
from .bridge import arc_to_complex
from .complexes import homology_dims, parse_literal, to_literal
from .fixtures import FixtureFailure, reduced_words, run_case_fixtures, run_exhaustive_layers
from .gfp import DEFAULT_PRIME, SECOND_PRIME, FieldPrime
from .homotopy import HomTable, hom_dim, hom_dims, hom_window, is_presilting
from .properties import run_property_suites

REPORT_SCHEMA = "silting-lab-report/1"

GAMMA_LITERAL = (
    "deg -2: P(3)\n"
    "deg -1: P(2)\n"
    "deg 0: P(1)\n"
    "d -2 0 0: 1*y2\n"
    "d -1 0 0: 1*y1\n"
)


class ConfigError(ValueError):
    pass


class DmaxCapExceeded(RuntimeError):
    def __init__(self, arc: str, needed: int, cap: int):
        super().__init__(f"{arc} needs shifts up to {needed}, above dmax_cap = {cap}")
        self.arc, self.needed, self.cap = arc, needed, cap


class SearchInterrupted(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    max_crossings: int = 8
    mu_window: tuple[int, int] = (-8, 8)
    prime: int = DEFAULT_PRIME
    second_prime: int = SECOND_PRIME
    dmax_cap: int = 64
    workers: int = 1
    out: str | None = None
    checkpoint: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "mu_window", tuple(self.mu_window))
        if self.max_crossings < 1:
            raise ConfigError("max_crossings must be positive")
        lo, hi = self.mu_window
        if lo > hi:
            raise ConfigError(f"empty mu window {lo}:{hi}")
        if self.prime == self.second_prime:
            raise ConfigError("the two primes must differ")
        try:
            FieldPrime(self.prime)
            FieldPrime(self.second_prime)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.dmax_cap < 1:
            raise ConfigError("dmax_cap must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be positive")

    @property
    def primes(self) -> tuple[FieldPrime, FieldPrime]:
        return (FieldPrime(self.prime), FieldPrime(self.second_prime))

    def echo(self) -> dict:
        """The settings that determine the report (not workers or paths)."""
        return {
            "max_crossings": self.max_crossings,
            "mu_window": list(self.mu_window),
            "prime": self.prime,
            "second_prime": self.second_prime,
            "dmax_cap": self.dmax_cap,
        }


# -- enumeration -------------------------------------------------------------------

def canonical_words(max_crossings: int) -> Iterator[tuple[str, tuple[int, ...]]]:
    """Ungraded canonical arcs: p before q, words in lexicographic order."""
    words = sorted(w for n in range(1, max_crossings + 1) for w in reduced_words(n))
    for start in "pq":
        for w in words:
            arc = GradedArc(start, w, 0)
            # reversal moves the grading by a constant, so canonicity ignores mu1
            if canonicalize(arc).start == start and canonicalize(arc).word == w:
                yield start, w


def enumerate_arcs(cfg: SearchConfig) -> Iterator[GradedArc]:
    """Every canonical arc within the bounds, once each, in report order."""
    lo, hi = cfg.mu_window
    for start, w in canonical_words(cfg.max_crossings):
        for mu in range(lo, hi + 1):
            yield GradedArc(start, w, mu)


# -- per-word task -------------------------------------------------------------------

def _table(X, Y, F) -> dict[int, int]:
    lo, hi = hom_window(X, Y)
    return {d: hom_dim(X, Y, d, F) for d in range(lo, hi + 1)}


def _fingerprint(table: dict[int, int]) -> str:
    return HomTable(tuple(sorted(table.items()))).fingerprint()


def analyze_word(start: str, word: tuple[int, ...], mu_window: tuple[int, int],
                 primes: tuple[int, ...], dmax_cap: int) -> list[dict]:
    """Records for every grading of one ungraded arc."""
    F = tuple(FieldPrime(p) for p in primes)
    base = GradedArc(start, word, 0)
    X = arc_to_complex(base)
    G = arc_to_complex(gamma())
    g_presilting = is_presilting(G, F)
    presilting = is_presilting(X, F)
    simple = is_simple(base)
    self_table = _table(X, X, F)
    gx = _table(G, X, F)  # key k: Hom(X(g), X(base)[k])
    xg = _table(X, G, F)  # key k: Hom(X(base), X(g)[k])
    gx_hi = hom_window(G, X)[1]
    xg_hi = hom_window(X, G)[1]
    width = X.width()
    lo, hi = mu_window
    out = []
    for mu in range(lo, hi + 1):
        arc = GradedArc(start, word, mu)
        text = format_arc(arc)
        needed = max(gx_hi - mu, xg_hi + mu, width - 1)
        if needed > dmax_cap:
            raise DmaxCapExceeded(text, needed, dmax_cap)
        to_arc = {k - mu: v for k, v in gx.items()}
        from_arc = {k + mu: v for k, v in xg.items()}
        pair = (g_presilting and presilting
                and not any(v for d, v in to_arc.items() if d > 0)
                and not any(v for d, v in from_arc.items() if d > 0))
        out.append({
            "arc": text,
            "start": start,
            "end": end_point(arc),
            "crossings": len(word),
            "mu1": mu,
            "last_index": index_sequence(arc)[-1],
            "presilting": presilting,
            "simple": simple,
            "width": width,
            "fingerprint": (f"self[{_fingerprint(self_table)}] gamma>arc[{_fingerprint(to_arc)}] "
                            f"arc>gamma[{_fingerprint(from_arc)}]"),
            "isomorphic_to_gamma": is_gamma(arc) and mu == 0,
            "pair_presilting_with_gamma": pair,
            "max_shift_checked": needed,
        })
    return out


def _run_chunk(chunk, mu_window, primes, dmax_cap):
    return [(start, word, analyze_word(start, word, mu_window, primes, dmax_cap))
            for start, word in chunk]


def _chunks(tasks: list[tuple[str, tuple[int, ...]]]) -> list[list[tuple[str, tuple[int, ...]]]]:
    """Group tasks by start point and the first two letters of the word."""
    groups: dict[tuple, list] = {}
    for start, w in tasks:
        groups.setdefault((start, w[:2]), []).append((start, w))
    return list(groups.values())


# -- checkpoints ------------------------------------------------------------------------

class Checkpoint:
    """Completed canonical arc strings, one per line, plus a sidecar of their records.

    The sidecar ``<path>.records`` starts with the configuration echo and
    holds one JSON record per line.  Records are flushed before their arcs
    are listed as done, so every listed arc has a record.
    """

    def __init__(self, path: str, cfg: SearchConfig):
        self.path = path
        self.sidecar = path + ".records"
        self.echo = cfg.echo()
        self.done: set[str] = set()
        self.records: dict[str, dict] = {}
        if os.path.exists(self.sidecar):
            with open(self.sidecar, encoding="utf-8") as fh:
                header = fh.readline()
                if header and json.loads(header) != self.echo:
                    raise ConfigError(f"checkpoint {path} was written for a different configuration")
                for line in fh:
                    if line.strip():
                        rec = json.loads(line)
                        self.records[rec["arc"]] = rec
        else:
            with open(self.sidecar, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(self.echo, sort_keys=True) + "\n")
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                self.done = {line.strip() for line in fh if line.strip()}
        missing = self.done - set(self.records)
        if missing:
            raise ConfigError(f"checkpoint lists {len(missing)} arcs without records")

    def complete(self, records: list[dict]) -> None:
        with open(self.sidecar, "a", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        with open(self.path, "a", encoding="utf-8") as fh:
            for rec in records:
                fh.write(rec["arc"] + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        for rec in records:
            self.done.add(rec["arc"])
            self.records[rec["arc"]] = rec


# -- search -------------------------------------------------------------------------------

def run_search(cfg: SearchConfig, stop_after: int | None = None) -> list[dict]:
    """Per-arc records for every enumerated arc, in enumeration order.

    ``stop_after`` ends the run with :class:`SearchInterrupted` once that
    many chunks have completed, leaving the checkpoint as an interrupted run
    would.
    """
    lo, hi = cfg.mu_window
    tasks = list(canonical_words(cfg.max_crossings))
    ckpt = Checkpoint(cfg.checkpoint, cfg) if cfg.checkpoint else None
    results: dict[tuple, list[dict]] = {}
    pending = []
    for start, w in tasks:
        names = [format_arc(GradedArc(start, w, mu)) for mu in range(lo, hi + 1)]
        if ckpt and all(n in ckpt.done for n in names):
            results[(start, w)] = [ckpt.records[n] for n in names]
        else:
            pending.append((start, w))
    chunks = _chunks(pending)
    primes = (cfg.prime, cfg.second_prime)
    finished = 0

    def accept(chunk_result):
        nonlocal finished
        for start, w, recs in chunk_result:
            results[(start, w)] = recs
            if ckpt:
                ckpt.complete(recs)
        finished += 1
        if stop_after is not None and finished >= stop_after:
            raise SearchInterrupted(f"stopped after {finished} chunks")

    if cfg.workers == 1 or len(chunks) <= 1:
        for chunk in chunks:
            accept(_run_chunk(chunk, cfg.mu_window, primes, cfg.dmax_cap))
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_run_chunk, c, cfg.mu_window, primes, cfg.dmax_cap) for c in chunks]
            try:
                for fut in as_completed(futures):
                    accept(fut.result())
            except BaseException:
                for fut in futures:
                    fut.cancel()
                raise
    return [rec for key in tasks for rec in results[key]]


def find_complement(cfg: SearchConfig, records: Iterable[dict] | None = None) -> list[GradedArc]:
    """Arcs other than gamma-tilde whose image forms a presilting pair with X(gamma-tilde)."""
    recs = run_search(cfg) if records is None else records
    return [parse_arc(r["arc"]) for r in recs
            if r["pair_presilting_with_gamma"] and not r["isomorphic_to_gamma"]]


# -- report --------------------------------------------------------------------------------

def gamma_fixtures(F) -> dict:
    g = gamma()
    X = arc_to_complex(g)
    expected = parse_literal(GAMMA_LITERAL)
    dims = {str(d): {str(p): v for p, v in hom_dims(X, X, d, F).items()} for d in range(0, 7)}
    hom_ok = all(len(set(v.values())) == 1 for v in dims.values()) and \
        [next(iter(dims[str(d)].values())) for d in range(7)] == [1, 0, 0, 0, 0, 0, 0]
    homology = {str(k): list(v) for k, v in homology_dims(X).items()}
    checks = [
        {"name": "index sequence", "expected": [0, 1, 2], "observed": list(index_sequence(g))},
        {"name": "complex", "expected": GAMMA_LITERAL, "observed": to_literal(X)},
        {"name": "self hom d=0..6", "expected": [1, 0, 0, 0, 0, 0, 0], "observed": dims},
        {"name": "homology", "expected": {"0": [1, 1, 1]}, "observed": homology},
    ]
    checks[0]["passed"] = checks[0]["expected"] == checks[0]["observed"]
    checks[1]["passed"] = X == expected
    checks[2]["passed"] = hom_ok
    checks[3]["passed"] = homology == {"0": [1, 1, 1]}
    return {"checks": checks, "passed": all(c["passed"] for c in checks)}


def classification_section(records: list[dict], max_crossings: int | None = None) -> dict:
    recs = [r for r in records if max_crossings is None or r["crossings"] <= max_crossings]
    exceptions = [r["arc"] for r in recs
                  if r["presilting"] != (r["simple"] and r["start"] != r["end"])]
    return {"arcs": len(recs), "presilting": sum(r["presilting"] for r in recs),
            "exceptions": exceptions, "passed": not exceptions}


def same_endpoint_section(records: list[dict], max_crossings: int | None = None) -> dict:
    recs = [r for r in records if r["start"] == r["end"]
            and (max_crossings is None or r["crossings"] <= max_crossings)]
    exceptions = [r["arc"] for r in recs if r["presilting"]]
    return {"arcs": len(recs), "exceptions": exceptions, "passed": not exceptions}


def complement_section(cfg: SearchConfig, records: list[dict]) -> dict:
    complements = [format_arc(a) for a in find_complement(cfg, records)]
    candidates = sum(not r["isomorphic_to_gamma"] for r in records)
    return {
        "candidates": candidates,
        "complements": complements,
        "passed": not complements,
        "bounds": {
            "max_crossings": cfg.max_crossings,
            "mu_window": list(cfg.mu_window),
            "max_shift_checked": max((r["max_shift_checked"] for r in records), default=0),
            "dmax_cap": cfg.dmax_cap,
            "scope": ("bounded evidence: only arcs within these crossing and grading bounds "
                      "were tested; no complement outside them is excluded by this run"),
        },
    }


def verify_paper(cfg: SearchConfig, stop_after: int | None = None) -> dict:
    """Run every check and return the report as nested plain data."""
    F = cfg.primes
    records = run_search(cfg, stop_after=stop_after)
    properties = [p.as_record() for p in run_property_suites(F)]
    fixtures = [r.as_record() for r in run_case_fixtures()]
    layers = [layer.as_record() for layer in run_exhaustive_layers()]
    report = {
        "schema": REPORT_SCHEMA,
        "config": cfg.echo(),
        "gamma_fixtures": gamma_fixtures(F),
        "properties": {"suites": properties, "passed": all(p["passed"] for p in properties)},
        "classification": classification_section(records),
        "same_endpoint": same_endpoint_section(records),
        "case_fixtures": {
            "fixtures": fixtures, "layers": layers,
            "passed": all(f["passed"] for f in fixtures) and all(x["passed"] for x in layers),
        },
        "complement_search": complement_section(cfg, records),
        "arcs": records,
    }
    report["passed"] = all(report[k]["passed"] for k in SECTIONS)
    return report


SECTIONS = ("gamma_fixtures", "properties", "classification", "same_endpoint",
            "case_fixtures", "complement_search")


def check_report(report: dict) -> None:
    """Raise :class:`FixtureFailure` naming the first failing section."""
    for key in SECTIONS:
        if not report[key]["passed"]:
            raise FixtureFailure(key, _first_failure(report[key]))


def _first_failure(section: dict) -> str:
    for field_name in ("exceptions", "complements"):
        if section.get(field_name):
            return f"{field_name}: {section[field_name][:5]}"
    for field_name in ("checks", "suites", "fixtures", "layers"):
        for item in section.get(field_name, []):
            if not item["passed"]:
                return json.dumps(item, sort_keys=True)[:400]
    return "failed"


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def write_report(report: dict, path: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(dumps_report(report))
    os.replace(tmp, path)


def summarize(report: dict) -> str:
    """Human-readable summary of a report."""
    lines = [f"config: {json.dumps(report['config'], sort_keys=True)}"]
    for key in SECTIONS:
        if key not in report:
            continue
        sec = report[key]
        extra = ""
        if key == "complement_search":
            b = sec["bounds"]
            extra = (f" candidates={sec['candidates']} complements={len(sec['complements'])}"
                     f" crossings<={b['max_crossings']} mu in {b['mu_window'][0]}:{b['mu_window'][1]}"
                     f" shifts<={b['max_shift_checked']}")
        elif "arcs" in sec and isinstance(sec["arcs"], int):
            extra = f" arcs={sec['arcs']} exceptions={len(sec['exceptions'])}"
        lines.append(f"{key}: {'PASS' if sec['passed'] else 'FAIL'}{extra}")
    if "passed" in report:
        lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'}")
    return "\n".join(lines)
