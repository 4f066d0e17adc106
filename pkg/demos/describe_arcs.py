"""Describe a few arcs: same-endpoint loops, a non-simple arc and one with a circle."""

from silting_lab.cli import describe_arc

for text in ("p:1,2@0", "p:2,1@0", "q:2,1,3@0", "p:1,2,3,1,2,3,1@0"):
    info = describe_arc(text)
    keys = ("end", "simple", "contains_circle", "presilting", "relative_position", "self_index")
    print(text, {k: info[k] for k in keys if k in info})
    print("  simplest sequence", info["simplest_sequence"], "segment types", info["segment_types"])
