"""Exhaustive simplicity test over every order of the crossing points."""

from itertools import combinations, permutations, product

from silting_lab.arcs import BOUNDARY, LABELS, _chords_by_face, _interleave, same_endpoints


def is_simple_exhaustive(arc) -> bool:
    faces = _chords_by_face(arc)
    points = {lab: [k for k in range(1, arc.n + 1) if arc.word[k - 1] == lab] for lab in LABELS}
    germ_orders = ((0, 1), (1, 0)) if same_endpoints(arc) else ((0, 0),)
    for orders in product(*(permutations(points[lab]) for lab in LABELS)):
        rank = {k: r for order in orders for r, k in enumerate(order)}
        for germs in germ_orders:
            def pos(pt, sign):
                kind, v = pt
                return (BOUNDARY, germs[v]) if kind == "end" else (arc.word[v - 1], sign * rank[v])
            if all(not _interleave((pos(a1, s), pos(b1, s)), (pos(a2, s), pos(b2, s)))
                   for face, chords in faces.items()
                   for s in [1 if face == "p" else -1]
                   for (a1, b1), (a2, b2) in combinations(chords, 2)):
                return True
    return False
