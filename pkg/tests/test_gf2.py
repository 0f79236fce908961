from hypothesis import given
from hypothesis import strategies as st

from evenorient import gf2


def matrices(max_rows=10, max_cols=10):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.tuples(st.just(c), st.lists(st.integers(0, (1 << c) - 1), max_size=max_rows))
    )


def _apply(rows, x):
    return [gf2.dot(r, x) for r in rows]


@given(matrices())
def test_rref_is_reduced(case):
    ncols, rows = case
    reduced, pivots = gf2.rref(rows, ncols)
    assert len(reduced) == len(pivots) == gf2.rank(rows, ncols)
    for i, (row, col) in enumerate(zip(reduced, pivots)):
        assert row >> col & 1
        assert row & ((1 << col) - 1) == 0
        for j, other in enumerate(reduced):
            if j != i:
                assert not other >> col & 1


@given(matrices(), st.data())
def test_solve_consistent_systems(case, data):
    ncols, rows = case
    x0 = data.draw(st.integers(0, (1 << ncols) - 1))
    rhs = _apply(rows, x0)
    x = gf2.solve(rows, rhs, ncols)
    assert x is not None and _apply(rows, x) == rhs


@given(matrices())
def test_null_space_spans_and_detects_inconsistency(case):
    ncols, rows = case
    basis = gf2.left_null_space(rows, ncols)
    assert len(basis) == len(rows) - gf2.rank(rows, ncols)
    for y in basis:
        acc = 0
        for i in gf2.bits_of(y):
            acc ^= rows[i]
        assert acc == 0
    # a right-hand side is solvable iff it is orthogonal to every null vector
    for rhs_mask in range(min(1 << len(rows), 64)):
        rhs = [rhs_mask >> i & 1 for i in range(len(rows))]
        solvable = gf2.solve(rows, rhs, ncols) is not None
        assert solvable == all(gf2.dot(y, rhs_mask) == 0 for y in basis)


def test_bits_of():
    assert gf2.bits_of(0b101001) == [0, 3, 5]
    assert gf2.bits_of(0) == []
