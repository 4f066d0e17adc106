from silting_lab.arcs import GradedArc, shift_arc
from silting_lab.properties import (
    all_arcs, cancel_law, circle_reduction, four_types, index_symmetry, intersection_index,
    probe_set, reverse_invariance, shift_compatibility, two_prime_agreement,
)


def test_all_arcs_counts():
    assert len(list(all_arcs(3))) == 2 * (3 + 6 + 12)
    assert len(list(all_arcs(1, (0, 1)))) == 12


def test_intersection_indices_sum_to_one():
    a = GradedArc("p", (1, 2), 0)
    b = shift_arc(GradedArc("p", (1, 3), 0), 2)
    assert intersection_index(a, b, "p") + intersection_index(b, a, "p") == 1


def test_probe_set_has_ten_members():
    probes = probe_set()
    assert len(probes) == 10 and len(set(probes)) == 10


def test_index_symmetry_small():
    res = index_symmetry(max_crossings=2, mus=(0, 1))
    assert res.passed, res.failures
    assert res.instances > 0


def test_cancel_law_small():
    res = cancel_law(6)
    assert res.passed and res.instances == 2 * sum(3 * 2 ** (n - 1) for n in range(1, 7))


def test_circle_reduction_small():
    res = circle_reduction(enumerate_up_to=8, wind_base=4, laps=(1, 2), mus=(0,))
    assert res.passed, res.failures
    assert res.instances > 0


def test_four_types_small():
    res = four_types(6)
    assert res.passed and res.instances > 0


def test_shift_compatibility_small():
    res = shift_compatibility(3, range(-2, 3))
    assert res.passed and res.instances == 2 * 21 * 5


def test_reverse_invariance_small():
    res = reverse_invariance(2)
    assert res.passed and res.instances == 2 * 9 * 10


def test_two_prime_agreement_small():
    res = two_prime_agreement(2)
    assert res.passed and res.instances > 0


def test_result_record_shape():
    rec = four_types(2).as_record()
    assert set(rec) == {"name", "instances", "failures", "passed"}
