import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from silting_lab.gfp import FieldPrime, nullity_mod_p, rank_mod_p


def sympy_rank(rows, p):
    K = GF(p)
    return DomainMatrix([[K(int(v)) for v in row] for row in rows], (len(rows), len(rows[0])), K).rank()


matrices = st.integers(1, 7).flatmap(lambda r: st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=300)
@given(matrices, st.sampled_from([2, 3, 5, 32003]))
def test_rank_matches_sympy(rows, p):
    assert rank_mod_p(np.array(rows), p) == sympy_rank(rows, p)


def test_rank_depends_on_characteristic():
    m = [[1, 1], [1, -1]]
    assert rank_mod_p(m, 2) == 1
    assert rank_mod_p(m, 32003) == 2


def test_empty_and_nullity():
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 5) == 0
    assert nullity_mod_p(np.zeros((0, 0)), 4, 5) == 4
    assert nullity_mod_p([[1, 2, 3]], 3, 5) == 2


def test_field_prime_validation():
    assert FieldPrime().p == 32003
    for bad in (1, 4, 32001 * 3):
        with pytest.raises(ValueError):
            FieldPrime(bad)
