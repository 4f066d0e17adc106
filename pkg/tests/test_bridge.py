import pytest

from silting_lab.arcs import NoSharedEndpoint, gamma, is_simple, parse_arc, reverse, shift_arc
from silting_lab.bridge import (
    CORNER_ARROWS, EndpointCheckFailed, arc_to_complex, candidate_tables, check_complex,
    table_is_consistent, verify_endpoint_hom,
)
from silting_lab.complexes import ProjComplex, parse_literal, shift, validate_complex
from silting_lab.homotopy import hom_dim
from silting_lab.properties import all_arcs, full_table, probe_set

GAMMA = "deg -2: P(3)\ndeg -1: P(2)\ndeg 0: P(1)\nd -2 0 0: 1*y2\nd -1 0 0: 1*y1\n"


def test_exactly_two_corner_tables_are_consistent():
    good = [t for t in candidate_tables() if table_is_consistent(t)]
    assert len(good) == 2
    assert CORNER_ARROWS in good


def test_gamma_image_selects_the_table():
    expected = parse_literal(GAMMA)
    matches = [t for t in candidate_tables()
               if table_is_consistent(t) and arc_to_complex(gamma(), t) == expected]
    assert matches == [CORNER_ARROWS]


def test_gamma_image_structure():
    assert arc_to_complex(gamma()) == parse_literal(GAMMA)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_single_crossing_is_a_stalk(i):
    assert arc_to_complex(parse_arc(f"p:{i}@0")) == ProjComplex.stalk(i)
    assert arc_to_complex(parse_arc(f"q:{i}@2")) == ProjComplex.stalk(i, degree=-2)


def test_long_segment_gets_length_two_label():
    X = arc_to_complex(parse_arc("p:1,3@0"))
    assert X.terms == ((-1, (3,)), (0, (1,)))
    ((_, combo),) = X.entries
    ((path, coeff),) = combo
    assert coeff == 1 and len(path) == 2 and str(path) in ("x1,y2", "y1,x2")


def test_every_short_arc_image_is_a_complex():
    for arc in all_arcs(6, (0,)):
        validate_complex(check_complex(arc))


def test_reverse_gives_an_isomorphic_complex():
    probes = probe_set()
    for arc in all_arcs(4, (0, -2)):
        X, Xr = arc_to_complex(arc), arc_to_complex(reverse(arc))
        assert [(k, sorted(v)) for k, v in X.terms] == [(k, sorted(v)) for k, v in Xr.terms]
        assert full_table(X, Xr) == full_table(X, X)
        assert all(full_table(P, X) == full_table(P, Xr) for P in probes)


def test_endpoint_checks():
    g = gamma()
    assert verify_endpoint_hom(g, g, "p") == 0
    assert verify_endpoint_hom(parse_arc("p:1@0"), parse_arc("p:1@-1")) == 1
    with pytest.raises(NoSharedEndpoint):
        verify_endpoint_hom(parse_arc("p:1,2@0"), parse_arc("q:1,2@0"))


def test_endpoint_checks_against_gamma_batch():
    g = gamma()
    checked = 0
    for arc in all_arcs(6, (-1, 0, 2)):
        if arc.start != "p":
            continue
        for a, b in ((g, arc), (arc, g)):
            try:
                verify_endpoint_hom(a, b)
            except NoSharedEndpoint:
                continue
            checked += 1
    assert checked > 500


def test_endpoint_failure_carries_the_pair():
    err = EndpointCheckFailed(gamma(), gamma(), "p", 3)
    assert err.pair[2:] == ("p", 3)


def test_fingerprints_separate_short_arcs():
    """Distinct canonical arcs up to four crossings have distinct Hom tables against the probes."""
    probes = probe_set()
    seen = {}
    for arc in all_arcs(4, (0, 1)):
        X = arc_to_complex(arc)
        key = tuple((full_table(X, P), full_table(P, X)) for P in probes)
        canon = min(arc, reverse(arc))
        assert seen.setdefault(key, canon) == canon, (arc, seen[key])


def test_shift_compatibility_examples():
    arc = parse_arc("q:2,3,1,3@1")
    for d in (-2, 1, 3):
        assert arc_to_complex(shift_arc(arc, d)) == shift(arc_to_complex(arc), d)


def test_simple_arcs_have_one_dimensional_endomorphisms():
    checked = 0
    for arc in all_arcs(6):
        if is_simple(arc):
            X = arc_to_complex(arc)
            assert hom_dim(X, X, 0) == 1, arc
            checked += 1
    assert checked == 130
