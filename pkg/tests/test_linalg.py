from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grig.linalg import (
    Mat,
    NoSolution,
    Subspace,
    ff_rref,
    inverse,
    kernel_basis,
    rank,
    rat_str,
    solve,
    to_rat,
)
from oracles import naive_rank

small = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Mat(rows, c)


@given(matrices())
def test_rank_matches_naive_elimination(m):
    assert rank(m) == naive_rank([list(r) for r in m.data], m.ncols)


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.T)


@given(matrices())
def test_kernel_vectors_are_killed_and_independent(m):
    ker = kernel_basis(m)
    assert len(ker) == m.ncols - rank(m)
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    if ker:
        assert naive_rank([list(v) for v in ker], m.ncols) == len(ker)


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_system(m, x):
    x = x[: m.ncols]
    b = m.apply(x)
    y = solve(m, b)
    assert m.apply(y) == b


def test_solve_inconsistent_raises():
    m = Mat([[1, 0], [1, 0]], 2)
    with pytest.raises(NoSolution):
        solve(m, [1, 2])


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_roundtrip(rows):
    m = Mat(rows, len(rows))
    if rank(m) < m.nrows:
        with pytest.raises(Exception):
            inverse(m)
        return
    assert m @ inverse(m) == Mat.identity(m.nrows)


def test_rref_is_fraction_free_integer_rows():
    rows, pivots, d = ff_rref([[2, 4, 6], [1, 1, 1]], 3)
    assert pivots == [0, 1]
    assert all(isinstance(x, int) for r in rows for x in r)
    # each row carries the common pivot value d at its own pivot, 0 at the others
    assert [[r[p] for p in pivots] for r in rows] == [[d, 0], [0, d]]


@given(matrices())
def test_rref_rows_span_the_row_space(m):
    rows, pivots, d = ff_rref(m.data, m.ncols)
    assert len(rows) == naive_rank([list(r) for r in m.data], m.ncols)
    both = [list(r) for r in m.data] + [list(r) for r in rows]
    assert naive_rank(both, m.ncols) == len(rows)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=0, max_size=5))
@settings(max_examples=60)
def test_subspace_coords_roundtrip(vectors):
    s = Subspace(vectors, 4)
    assert s.dim == naive_rank(vectors, 4) if vectors else s.dim == 0
    for v in vectors:
        assert s.contains(v)
        assert s.vector(s.coords(v)) == tuple(to_rat(x) for x in v)
        assert all(x == 0 for x in s.reduce(v))
    assert len(s.complement_indices()) == 4 - s.dim


def test_subspace_rejects_outside_vector():
    s = Subspace([[1, 0, 0]], 3)
    assert not s.contains([0, 1, 0])


@pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", Fraction(-1, 2)), ("4/2", 2), (" 5 ", 5)])
def test_rational_literals(text, value):
    assert to_rat(text) == value


@pytest.mark.parametrize("value,text", [(Fraction(1, 3), "1/3"), (Fraction(4, 2), "2"), (-7, "-7")])
def test_rational_printing(value, text):
    assert rat_str(value) == text


def test_block_and_stack_helpers():
    a = Mat([[1, 2]], 2)
    b = Mat([[3]], 1)
    d = Mat.block_diag([a, b])
    assert d.shape == (2, 3)
    assert d.data == ((1, 2, 0), (0, 0, 3))
    assert Mat.hstack([a, Mat([[5]], 1)]).data == ((1, 2, 5),)
    assert Mat.vstack([a, a]).shape == (2, 2)
    assert Mat.identity(2).kron(a).shape == (2, 4)
