"""Search a small window for arcs completing gamma-tilde to a presilting pair.

Pass a checkpoint path as the first argument to make the run resumable.
"""

import sys

from silting_lab.search import SearchConfig, complement_section, run_search

cfg = SearchConfig(max_crossings=5, mu_window=(-4, 4),
                   checkpoint=sys.argv[1] if len(sys.argv) > 1 else None)
records = run_search(cfg)
section = complement_section(cfg, records)
print(f"{len(records)} arcs, {section['candidates']} candidates")
print(f"complements: {section['complements']}")
print(f"largest shift checked: {section['bounds']['max_shift_checked']}")
print(section["bounds"]["scope"])

# the arcs nearest to being a complement: presilting, but paired with a positive shift
near = [r["arc"] for r in records if r["presilting"] and not r["pair_presilting_with_gamma"]]
print(f"{len(near)} presilting arcs fail the pair condition, e.g. {near[:5]}")
