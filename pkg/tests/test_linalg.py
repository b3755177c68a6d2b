"""Exact integer matrix rank."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from knotslice.linalg import rank, rank_exact


def _rank_oracle(entries, nrows, ncols):
    """Plain Gaussian elimination over the rationals."""
    rows = [[Fraction(0)] * ncols for _ in range(nrows)]
    for r, c, v in entries:
        rows[r][c] += v
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        for i in range(nrows):
            if i != rk and rows[i][col]:
                f = rows[i][col] / rows[rk][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def test_rank_hand_cases():
    assert rank([], 3, 3) == 0
    assert rank([(0, 0, 1), (1, 1, 1)], 2, 2) == 2
    assert rank([(0, 0, 2), (1, 0, 4)], 2, 1) == 1
    # rows proportional over Q
    assert rank([(0, 0, 2), (0, 1, 6), (1, 0, 3), (1, 1, 9)], 2, 2) == 1


matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, m - 1),
                      st.integers(-40, 40)),
            max_size=12,
        ).map(lambda d: (d, n, m))
    )
)


@given(matrices)
@settings(max_examples=120)
def test_rank_matches_rational_elimination(case):
    entries, nrows, ncols = case
    expected = _rank_oracle(entries, nrows, ncols)
    assert rank(entries, nrows, ncols) == expected
    assert rank_exact(entries, nrows, ncols) == expected


def test_rank_large_entries():
    big = 2**40
    entries = [(0, 0, big), (0, 1, 1), (1, 0, big * 3), (1, 1, 3)]
    assert rank(entries, 2, 2) == 1
