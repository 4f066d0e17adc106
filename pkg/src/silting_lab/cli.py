"""Command-line interface.

Settings come from defaults, then an optional ``--config`` file of
``key = value`` lines, then command-line flags.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .arcs import (
    ArcError, circle_number, circle_number_rev, contains_circle, end_point, format_arc,
    index_sequence, is_gamma, is_simple, parse_arc, relative_position, same_endpoints,
    segment_types, self_index, simplest_sequence,
)
from .bridge import arc_to_complex
from .complexes import ProjComplex, parse_literal, to_literal
from .fixtures import run_case_fixtures, run_exhaustive_layers
from .homotopy import HomTable, hom_dim, hom_window, is_presilting
from .quiver import ParseError
from .search import (
    REPORT_SCHEMA, ConfigError, DmaxCapExceeded, FixtureFailure, SearchConfig,
    SearchInterrupted, check_report, classification_section, complement_section, dumps_report,
    run_search, same_endpoint_section, summarize, verify_paper, write_report,
)

CONFIG_KEYS = ("max_crossings", "mu_window", "prime", "second_prime", "dmax_cap",
               "workers", "out", "checkpoint")


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ConfigError(f"mu window must look like LO:HI, got {text!r}") from None


_CONVERT = {
    "max_crossings": int, "mu_window": parse_window, "prime": int, "second_prime": int,
    "dmax_cap": int, "workers": int, "out": str, "checkpoint": str,
}


def read_config_file(path: str) -> dict:
    """``key = value`` lines; blank lines and ``#`` comments are ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in _CONVERT:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                out[key] = _CONVERT[key](value)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


def build_config(args: argparse.Namespace) -> SearchConfig:
    settings = read_config_file(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return SearchConfig(**settings)


def parse_object(text: str) -> ProjComplex:
    """An arc string, a file holding a complex literal, or an inline literal with ';' line breaks."""
    try:
        return arc_to_complex(parse_arc(text))
    except ArcError:
        pass
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return parse_literal(fh.read())
    if text.lstrip().startswith(("deg", "d ")):
        return parse_literal(text.replace(";", "\n"))
    raise ParseError(f"neither an arc nor a complex literal: {text!r}")


def hom_query(a: str, b: str, dmin: int | None = None, dmax: int | None = None, F=None) -> HomTable:
    X, Y = parse_object(a), parse_object(b)
    lo, hi = hom_window(X, Y)
    dmin = min(lo, 0) if dmin is None else dmin
    dmax = max(hi, 0) if dmax is None else dmax
    return HomTable(tuple((d, hom_dim(X, Y, d, F)) for d in range(dmin, dmax + 1)))


def describe_arc(text: str, F=None) -> dict:
    arc = parse_arc(text)
    X = arc_to_complex(arc)
    info = {
        "arc": format_arc(arc),
        "start": arc.start,
        "end": end_point(arc),
        "index_sequence": list(index_sequence(arc)),
        "circle_number": str(circle_number(arc)),
        "circle_number_reversed": str(circle_number_rev(arc)),
        "contains_circle": contains_circle(arc),
        "simplest_sequence": list(simplest_sequence(arc)),
        "segment_types": list(segment_types(arc)),
        "simple": is_simple(arc),
        "is_gamma": is_gamma(arc),
        "presilting": is_presilting(X, F),
        "complex": to_literal(X),
    }
    if same_endpoints(arc):
        info["relative_position"] = relative_position(arc)
        info["self_index"] = self_index(arc)
    return info


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="file of key = value lines")
    p.add_argument("--max-crossings", dest="max_crossings", type=int)
    p.add_argument("--mu-window", dest="mu_window", type=parse_window, metavar="LO:HI")
    p.add_argument("--prime", type=int)
    p.add_argument("--second-prime", dest="second_prime", type=int)
    p.add_argument("--dmax-cap", dest="dmax_cap", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--checkpoint", help="resumable list of completed arcs")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silting-lab",
        description="Graded arcs, string complexes and Hom computations over the algebra 1=>2=>3.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("verify-paper", "run every fixture, property suite and the complement search"),
        ("find-complement", "search for arcs forming a presilting pair with gamma-tilde"),
        ("classify", "compare presilting against simple with distinct endpoints"),
        ("case-fixtures", "check the case-analysis configurations"),
    ):
        _add_search_flags(sub.add_parser(name, help=text, description=text))
    hom = sub.add_parser("hom", help="Hom dimensions between two arcs or complexes")
    hom.add_argument("a")
    hom.add_argument("b")
    hom.add_argument("--dmin", type=int)
    hom.add_argument("--dmax", type=int)
    _add_search_flags(hom)
    desc = sub.add_parser("describe-arc", help="everything computed about one arc")
    desc.add_argument("arc")
    _add_search_flags(desc)
    return parser


def _emit(cfg: SearchConfig, payload: dict) -> None:
    if cfg.out:
        write_report(payload, cfg.out)


def _cmd_verify(cfg: SearchConfig) -> int:
    t0 = time.perf_counter()
    report = verify_paper(cfg)
    _emit(cfg, report)
    print(summarize(report))
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")
    check_report(report)
    return 0


def _cmd_find(cfg: SearchConfig) -> int:
    records = run_search(cfg)
    section = complement_section(cfg, records)
    _emit(cfg, {"schema": REPORT_SCHEMA, "config": cfg.echo(), "complement_search": section})
    for arc in section["complements"]:
        print(arc)
    b = section["bounds"]
    print(f"{len(section['complements'])} complements among {section['candidates']} candidates "
          f"(crossings <= {b['max_crossings']}, mu in {b['mu_window'][0]}:{b['mu_window'][1]})")
    return 0 if section["passed"] else 1


def _cmd_classify(cfg: SearchConfig) -> int:
    records = run_search(cfg)
    payload = {
        "schema": REPORT_SCHEMA, "config": cfg.echo(),
        "classification": classification_section(records),
        "same_endpoint": same_endpoint_section(records),
        "arcs": records,
    }
    _emit(cfg, payload)
    print(summarize(payload))
    return 0 if payload["classification"]["passed"] and payload["same_endpoint"]["passed"] else 1


def _cmd_fixtures(cfg: SearchConfig) -> int:
    fixtures = run_case_fixtures()
    layers = run_exhaustive_layers()
    for r in fixtures:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.arc}) observed {r.observed}")
    for layer in layers:
        print(f"{'PASS' if layer.passed else 'FAIL'} exhaustive {layer.name}: "
              f"{layer.checked} arcs up to {layer.max_crossings} crossings")
        for v in layer.violations[:10]:
            print(f"  {v}")
    ok = all(r.passed for r in fixtures) and all(x.passed for x in layers)
    _emit(cfg, {"schema": REPORT_SCHEMA, "config": cfg.echo(), "case_fixtures": {
        "fixtures": [r.as_record() for r in fixtures],
        "layers": [x.as_record() for x in layers], "passed": ok}})
    return 0 if ok else 1


def _cmd_hom(cfg: SearchConfig, args) -> int:
    table = hom_query(args.a, args.b, args.dmin, args.dmax, cfg.primes)
    for d, v in table.entries:
        print(f"{d}: {v}")
    _emit(cfg, {"schema": REPORT_SCHEMA, "a": args.a, "b": args.b,
                "table": {str(d): v for d, v in table.entries}})
    return 0


def _cmd_describe(cfg: SearchConfig, args) -> int:
    info = describe_arc(args.arc, cfg.primes)
    for key, value in info.items():
        if key == "complex":
            print("complex:")
            print("  " + value.rstrip("\n").replace("\n", "\n  "))
        else:
            print(f"{key}: {value}")
    _emit(cfg, info)
    return 0


def _join_window(argv: list[str]) -> list[str]:
    # "--mu-window -3:3" would otherwise read -3:3 as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--mu-window":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = make_parser().parse_args(_join_window(argv))
    try:
        cfg = build_config(args)
        if args.command == "verify-paper":
            return _cmd_verify(cfg)
        if args.command == "find-complement":
            return _cmd_find(cfg)
        if args.command == "classify":
            return _cmd_classify(cfg)
        if args.command == "case-fixtures":
            return _cmd_fixtures(cfg)
        if args.command == "hom":
            return _cmd_hom(cfg, args)
        return _cmd_describe(cfg, args)
    except FixtureFailure as exc:
        print(f"FixtureFailure: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, ParseError, ArcError, DmaxCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyboardInterrupt, SearchInterrupted):
        print("interrupted; rerun with the same --checkpoint to resume", file=sys.stderr)
        return 130


__all__ = ["build_config", "describe_arc", "dumps_report", "hom_query", "main", "make_parser",
           "parse_object", "read_config_file"]

if __name__ == "__main__":
    sys.exit(main())
