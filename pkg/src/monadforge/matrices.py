"""Matrices of homogeneous forms: symbolic products and exact evaluation."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import MultiPoly
from .points import ProjectivePoint
from .spaces import MultiDegree, SpaceSpec


@dataclass(frozen=True)
class LinearMatrix:
    """Matrix whose nonzero entries are homogeneous of one fixed multidegree."""

    space: SpaceSpec
    entries: tuple[tuple[MultiPoly, ...], ...]
    entry_degree: MultiDegree

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "entry_degree", self.space.check_degree(self.entry_degree))
        if not entries or not entries[0]:
            raise ValueError("matrix extents must be positive")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for p in row:
                if not isinstance(p, MultiPoly) or p.space != self.space:
                    raise ValueError("entries must be polynomials on the matrix's space")
                if p and not p.is_homogeneous(self.entry_degree):
                    raise ValueError(
                        f"entry {p} is not homogeneous of degree {self.entry_degree}"
                    )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def entry_texts(self) -> list[list[str]]:
        return [[str(p) for p in row] for row in self.entries]


def mat_mul(m: LinearMatrix, n: LinearMatrix) -> tuple[tuple[MultiPoly, ...], ...]:
    """Exact symbolic product; returns a raw grid of polynomials."""
    if m.space != n.space:
        raise ValueError("operands live on different ambient spaces")
    if m.cols != n.rows:
        raise ValueError(f"extent mismatch: {m.rows}x{m.cols} times {n.rows}x{n.cols}")
    zero = MultiPoly.zero(m.space)
    out = []
    for i in range(m.rows):
        row = []
        for j in range(n.cols):
            acc = zero
            for t in range(m.cols):
                left = m.entries[i][t]
                right = n.entries[t][j]
                if left and right:
                    acc = acc + left * right
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def grid_is_zero(grid) -> bool:
    return all(p.is_zero for row in grid for p in row)


def evaluate_matrix(matrix: LinearMatrix, point: ProjectivePoint) -> list[list]:
    """Entry-wise evaluation in the point's field (exact)."""
    if point.space != matrix.space:
        raise ValueError("point does not live on the matrix's space")
    return [[p.evaluate(point) for p in row] for row in matrix.entries]
