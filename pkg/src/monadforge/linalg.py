"""Exact rank computation over the rationals and prime fields."""

from __future__ import annotations

from math import lcm


def rank_exact(matrix, q: int | None = None) -> int:
    """Rank of a scalar matrix, computed without rounding.

    Over the rationals (``q is None``) entries may be ints or Fractions;
    rows are scaled to integers and reduced by fraction-free (Bareiss)
    elimination.  Over a prime field pass the modulus ``q``.
    """
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    if any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("ragged matrix")
    if q is None:
        return _rank_bareiss([_integer_row(row) for row in rows])
    return _rank_mod_p([[int(c) % q for c in row] for row in rows], q)


def _integer_row(row) -> list[int]:
    scale = lcm(*(c.denominator for c in row)) if row else 1
    return [int(c * scale) for c in row]


def _rank_bareiss(m: list[list[int]]) -> int:
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        lead = m[row][col]
        for i in range(row + 1, nrows):
            head = m[i][col]
            for j in range(col + 1, ncols):
                # Bareiss update: division by the previous pivot is exact.
                m[i][j] = (m[i][j] * lead - head * m[row][j]) // prev
            m[i][col] = 0
        prev = lead
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _rank_mod_p(m: list[list[int]], q: int) -> int:
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, q)
        for i in range(row + 1, nrows):
            if not m[i][col]:
                continue
            factor = (m[i][col] * inv) % q
            m[i] = [(a - factor * b) % q for a, b in zip(m[i], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
