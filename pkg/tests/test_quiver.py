from collections import deque

import pytest
from hypothesis import given, strategies as st

from silting_lab.quiver import (
    AlgebraError, NotComposable, ParseError, UnknownVertex, lambda_fixed, lazy, parse_algebra,
)

A = lambda_fixed()
ARROWS = {"x1": (1, 2), "y1": (1, 2), "x2": (2, 3), "y2": (2, 3)}
RELATIONS = {("x1", "x2"), ("y1", "y2")}


def naive_paths(i, j):
    """Breadth-first enumeration of arrow sequences, filtering any relation factor."""
    found = [()] if i == j else []
    queue = deque([(i, ())])
    while queue:
        v, seq = queue.popleft()
        for name, (s, t) in ARROWS.items():
            if s != v:
                continue
            nxt = seq + (name,)
            if any(nxt[k:k + 2] in RELATIONS for k in range(len(nxt) - 1)):
                continue
            if t == j:
                found.append(nxt)
            queue.append((t, nxt))
    return found


def test_lambda_shape():
    assert A.vertices == (1, 2, 3)
    assert len(A.quiver.arrows) == 4
    assert A.relations == frozenset(RELATIONS)


def test_length_two_paths():
    two = {tuple(p.arrows) for p in A.nonzero_paths() if len(p) == 2}
    assert two == {("x1", "y2"), ("y1", "x2")}


def test_paths_from_vertex_one():
    assert [str(p) for p in A.paths_from(1)] == ["e1", "x1", "y1", "x1,y2", "y1,x2"]


@pytest.mark.parametrize("i,j,expected", [
    (1, 1, ["e1"]), (1, 3, ["x1,y2", "y1,x2"]), (3, 1, []), (2, 3, ["x2", "y2"]),
])
def test_path_basis_examples(i, j, expected):
    assert [str(p) for p in A.path_basis(i, j)] == expected


@pytest.mark.parametrize("i", [1, 2, 3])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_path_basis_matches_naive_enumeration(i, j):
    assert sorted(tuple(p.arrows) for p in A.path_basis(i, j)) == sorted(naive_paths(i, j))


def test_total_dimension_matches_naive_count():
    assert A.dimension() == sum(len(naive_paths(i, j)) for i in (1, 2, 3) for j in (1, 2, 3))


def test_path_basis_unknown_vertex():
    with pytest.raises(UnknownVertex):
        A.path_basis(1, 7)


def test_compose_examples():
    assert A.compose(A.path("y1"), A.path("y2")) is None
    assert A.compose(lazy(1), A.path("x1")) == A.path("x1")
    assert str(A.compose(A.path("x1"), A.path("y2"))) == "x1,y2"


def test_compose_not_composable():
    with pytest.raises(NotComposable):
        A.compose(A.path("x2"), A.path("x1"))


paths = st.sampled_from(A.nonzero_paths())


@given(paths, paths, paths)
def test_compose_associative_on_nonzero(p, q, r):
    if p.target != q.source or q.target != r.source:
        return
    pq = A.compose(p, q)
    qr = A.compose(q, r)
    left = None if pq is None else A.compose(pq, r)
    right = None if qr is None else A.compose(p, qr)
    assert left == right


@given(paths)
def test_lazy_paths_are_identities(p):
    assert A.compose(lazy(p.source), p) == p
    assert A.compose(p, lazy(p.target)) == p


def test_parse_algebra_roundtrip():
    B = parse_algebra(A.to_text())
    assert B == A
    assert parse_algebra(B.to_text()) == B


def test_parse_algebra_errors():
    with pytest.raises(ParseError):
        parse_algebra("vertex 1\nbogus line\n")
    with pytest.raises(UnknownVertex):
        parse_algebra("vertex 1\narrow a 1 2\n")
    with pytest.raises(AlgebraError):
        parse_algebra("vertex 1\narrow a 1 1\n")  # a loop without relations is infinite


def test_path_parse_errors():
    with pytest.raises(ParseError):
        A.path("z9")
    with pytest.raises(NotComposable):
        A.path("x2,x1")
