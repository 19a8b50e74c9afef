"""Exact rank: worked examples plus an exhaustive minor-based oracle."""

from fractions import Fraction
from itertools import combinations, product

import pytest

from monadforge import rank_exact


def test_zero_matrix():
    assert rank_exact([[0, 0, 0]] * 3) == 0
    assert rank_exact([[0, 0, 0]] * 3, q=2) == 0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_identity_pattern(k):
    eye = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    assert rank_exact(eye) == k
    assert rank_exact(eye, q=3) == k


def test_dependent_rows_over_q():
    assert rank_exact([[1, 2], [2, 4]]) == 1


def test_fraction_entries():
    # det of the top 2x2 block is 1/2 - 1/6 != 0; row3 = row1 + row2
    m = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(1, 2), Fraction(1, 1)],
        [Fraction(1, 1), Fraction(4, 3)],
    ]
    assert rank_exact(m) == 2


def test_rank_needs_rectangular_input():
    with pytest.raises(ValueError):
        rank_exact([[1, 2], [3]])


def test_large_integer_entries_stay_exact():
    big = 10**30
    # det = big*(2*big + 3) - 2*big*(big + 1) = big != 0
    m = [[big, 2 * big], [big + 1, 2 * big + 3]]
    assert rank_exact(m) == 2
    assert rank_exact([[big, 2 * big], [3 * big, 6 * big]]) == 1


# -- exhaustive oracle: largest nonvanishing minor over F_2 ----------------


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j, c in enumerate(mat[0]):
        if c:
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            total += (-1) ** j * c * _det(minor)
    return total


def _minor_rank_f2(m, rows, cols):
    for size in range(min(rows, cols), 0, -1):
        for rsel in combinations(range(rows), size):
            for csel in combinations(range(cols), size):
                sub = [[m[i][j] for j in csel] for i in rsel]
                if _det(sub) % 2:
                    return size
    return 0


def test_rank_matches_minor_oracle_exhaustively_over_f2():
    for rows, cols in product(range(1, 5), repeat=2):
        cells = rows * cols
        for bits in range(1 << cells):
            m = [
                [(bits >> (i * cols + j)) & 1 for j in range(cols)]
                for i in range(rows)
            ]
            assert rank_exact(m, q=2) == _minor_rank_f2(m, rows, cols), m
