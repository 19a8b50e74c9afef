"""Coordinate tables for the multidegree-(1,...,1) embedding into P^N.

The ``N + 1 = prod(a_i + 1)`` monomials of multidegree (1,...,1) are listed
in strictly increasing lexicographic order of their digit strings, with the
first factor most significant.  Splitting the list in half identifies them
with the homogeneous coordinates ``x_0..x_mu, y_0..y_mu`` of ``P^{2mu+1}``,
which requires N odd, i.e. at least one odd factor dimension.

Two split conventions are shipped:

* ``clean`` (default): ``x_i`` is the monomial at lex index ``i`` and
  ``y_i`` the one at ``mu + 1 + i``.  When the first factor is a P^1 the
  x-half is exactly the first-digit-0 block, which is what makes
  ``x_p*y_q`` and ``x_q*y_p`` substitute to the same monomial.
* ``paper``: the y-half starts one position earlier (``y_i`` at lex index
  ``mu + i``) and the final monomial wraps around to ``x_mu``.  Kept as an
  opt-in variant for comparison; the first-digit collapse property does not
  hold for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .matrices import LinearMatrix
from .poly import MultiPoly
from .spaces import SpaceSpec

TABLE_CONVENTIONS = ("clean", "paper")


def enumerate_monomials(space: SpaceSpec) -> tuple[MultiPoly, ...]:
    """All multidegree-(1,...,1) monomials in mixed-radix (lex) order.

    The entry at index ``d_1*B_2*...*B_r + ... + d_r`` (bases
    ``B_i = a_i + 1``) is the product of coordinate ``d_i`` of each factor.
    """
    digit_ranges = [range(a + 1) for a in space.dims]
    return tuple(
        MultiPoly.monomial_from_digits(space, digits)
        for digits in itertools.product(*digit_ranges)
    )


@dataclass(frozen=True)
class SegreTable:
    """Bijection between P^{2mu+1} coordinates and monomials on the product."""

    space: SpaceSpec
    mu: int
    x_block: tuple[MultiPoly, ...]
    y_block: tuple[MultiPoly, ...]
    convention: str

    def __post_init__(self) -> None:
        if len(self.x_block) != self.mu + 1 or len(self.y_block) != self.mu + 1:
            raise ValueError("each coordinate block must hold mu + 1 monomials")

    @property
    def source_space(self) -> SpaceSpec:
        return segre_source_space(self.mu)

    def image(self, flat_index: int) -> MultiPoly:
        """Monomial image of source coordinate ``flat_index``."""
        if 0 <= flat_index <= self.mu:
            return self.x_block[flat_index]
        if self.mu < flat_index <= 2 * self.mu + 1:
            return self.y_block[flat_index - self.mu - 1]
        raise ValueError(f"coordinate index {flat_index} out of range")

    def rows(self) -> list[tuple[int, str, str]]:
        """(index, source coordinate, monomial) triples for display."""
        out = []
        for i, mono in enumerate(self.x_block):
            out.append((i, f"x_{i}", str(mono)))
        for i, mono in enumerate(self.y_block):
            out.append((self.mu + 1 + i, f"y_{i}", str(mono)))
        return out


def segre_source_space(mu: int) -> SpaceSpec:
    """The target P^{2mu+1}, as a one-factor space; coordinate ``j`` is
    ``x_j`` for ``j <= mu`` and ``y_{j-mu-1}`` above."""
    return SpaceSpec((2 * mu + 1,))


def source_coord_label(mu: int, flat_index: int) -> str:
    if flat_index <= mu:
        return f"x_{flat_index}"
    return f"y_{flat_index - mu - 1}"


def segre_table(space: SpaceSpec, convention: str = "clean") -> SegreTable:
    if convention not in TABLE_CONVENTIONS:
        raise ValueError(f"unknown table convention {convention!r}")
    monomials = enumerate_monomials(space)
    total = len(monomials)
    if total % 2:
        raise ValueError("ambient projective dimension N is even; banded construction undefined")
    mu = total // 2 - 1
    if convention == "clean":
        x_block = monomials[: mu + 1]
        y_block = monomials[mu + 1 :]
    else:
        # y-half shifted down one slot; last monomial wraps to x_mu.
        x_block = monomials[:mu] + (monomials[-1],)
        y_block = monomials[mu : 2 * mu + 1]
    return SegreTable(space, mu, x_block, y_block, convention)


def substitute_poly(p: MultiPoly, table: SegreTable) -> MultiPoly:
    """Ring homomorphism sending each source coordinate to its monomial."""
    if p.space != table.source_space:
        raise ValueError("polynomial does not live on the table's source space")
    target = table.space
    acc = MultiPoly.zero(target)
    for exps, coef in p.terms.items():
        term = MultiPoly.constant(target, coef)
        for flat, e in enumerate(exps):
            if e:
                term = term * table.image(flat) ** e
        acc = acc + term
    return acc


def substitute(matrix: LinearMatrix, table: SegreTable) -> LinearMatrix:
    """Apply :func:`substitute_poly` entry-wise.

    A degree-d entry on P^{2mu+1} becomes a multidegree-(d,...,d) form.
    """
    degree = matrix.entry_degree[0]
    grid = tuple(
        tuple(substitute_poly(p, table) for p in row) for row in matrix.entries
    )
    return LinearMatrix(table.space, grid, table.space.ones(degree))
