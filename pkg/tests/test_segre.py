"""Monomial enumeration, coordinate tables and substitution."""

import itertools
from math import prod

import pytest

from monadforge import (
    MultiPoly,
    SpaceSpec,
    enumerate_monomials,
    mu_param,
    segre_source_space,
    segre_table,
    substitute_poly,
)


def mono(space, *digits):
    return MultiPoly.monomial_from_digits(space, digits)


def test_enumeration_p1():
    space = SpaceSpec((1,))
    monos = enumerate_monomials(space)
    assert monos == (mono(space, 0), mono(space, 1))


def test_enumeration_123_has_24_in_mixed_radix_order():
    space = SpaceSpec((1, 2, 3))
    monos = enumerate_monomials(space)
    assert len(monos) == 24
    assert monos[5] == mono(space, 0, 1, 1)
    # independent oracle: rebuild each index from its mixed-radix digits
    bases = [a + 1 for a in space.dims]
    for index, m in enumerate(monos):
        digits = []
        rest = index
        for weight in (prod(bases[1:]), bases[2], 1):
            digits.append(rest // weight)
            rest %= weight
        assert m == mono(space, *digits)


def test_enumeration_135_first_row():
    space = SpaceSpec((1, 3, 5))
    monos = enumerate_monomials(space)
    assert len(monos) == 48
    assert monos[0] == mono(space, 0, 0, 0)


def test_table_splits_cleanly():
    space = SpaceSpec((1, 2, 3))
    table = segre_table(space)
    assert table.mu == 11
    assert table.y_block[11] == mono(space, 1, 2, 3)
    assert table.x_block[5] == mono(space, 0, 1, 1)


def test_table_p1():
    space = SpaceSpec((1,))
    table = segre_table(space)
    assert table.x_block == (mono(space, 0),)
    assert table.y_block == (mono(space, 1),)


def test_even_ambient_rejected():
    with pytest.raises(ValueError, match="even"):
        segre_table(SpaceSpec((2, 2)))


def test_paper_convention_rows():
    # the shifted split puts y_0 on the last first-digit-0 monomial and
    # wraps the final monomial around to x_mu
    space = SpaceSpec((1, 3, 5))
    table = segre_table(space, "paper")
    mu = table.mu
    assert mu == 23
    assert table.y_block[0] == mono(space, 0, 3, 5)
    assert table.y_block[1] == mono(space, 1, 0, 0)
    assert table.x_block[0] == mono(space, 0, 0, 0)
    assert table.x_block[mu] == mono(space, 1, 3, 5)


@pytest.mark.parametrize("convention", ["clean", "paper"])
def test_blocks_partition_all_monomials(convention):
    for dims in [(1,), (1, 1), (1, 2), (3,), (1, 2, 3)]:
        space = SpaceSpec(dims)
        table = segre_table(space, convention)
        seen = set(table.x_block) | set(table.y_block)
        assert len(seen) == len(table.x_block) + len(table.y_block)
        assert seen == set(enumerate_monomials(space))


def test_mu_matches_closed_form_for_graded_family():
    for l, m, n in itertools.product(range(4), repeat=3):
        if l + m + n == 0:
            continue
        dims = (1,) * l + (3,) * m + (5,) * n
        table = segre_table(SpaceSpec(dims))
        assert table.mu == mu_param(l, m, n)


# -- substitution ----------------------------------------------------------


def test_substitute_single_coordinate():
    space = SpaceSpec((1, 2, 3))
    table = segre_table(space)
    source = table.source_space
    x0 = MultiPoly.variable(source, 0, 0)
    assert substitute_poly(x0, table) == mono(space, 0, 0, 0)


def test_substitute_is_ring_homomorphism():
    space = SpaceSpec((1, 2))
    table = segre_table(space)
    source = table.source_space
    p = MultiPoly.variable(source, 0, 0) + 2 * MultiPoly.variable(source, 0, 4)
    q = MultiPoly.variable(source, 0, 1) - MultiPoly.variable(source, 0, 3)
    assert substitute_poly(p * q, table) == substitute_poly(p, table) * substitute_poly(q, table)
    assert substitute_poly(p + q, table) == substitute_poly(p, table) + substitute_poly(q, table)


def test_substitute_kills_antisymmetric_pairs_on_11():
    space = SpaceSpec((1, 1))
    table = segre_table(space)
    source = table.source_space
    x0 = MultiPoly.variable(source, 0, 0)
    x1 = MultiPoly.variable(source, 0, 1)
    y0 = MultiPoly.variable(source, 0, 2)
    y1 = MultiPoly.variable(source, 0, 3)
    assert substitute_poly(x0 * y1 - x1 * y0, table).is_zero


def test_substitute_zero():
    space = SpaceSpec((1, 1))
    table = segre_table(space)
    zero = MultiPoly.zero(table.source_space)
    assert substitute_poly(zero, table).is_zero


@pytest.mark.parametrize("dims", [(1, 1), (1, 2), (1, 3)])
def test_antisymmetric_collapse_exhaustive_when_first_factor_is_p1(dims):
    # the two halves differ only in the first-factor digit, so x_p*y_q and
    # x_q*y_p share their image monomial; checked for all pairs
    space = SpaceSpec(dims)
    table = segre_table(space)
    for p in range(table.mu + 1):
        for q in range(table.mu + 1):
            assert table.x_block[p] * table.y_block[q] == table.x_block[q] * table.y_block[p]


def test_wrong_source_space_rejected():
    space = SpaceSpec((1, 1))
    table = segre_table(space)
    bigger = segre_source_space(5)
    with pytest.raises(ValueError):
        substitute_poly(MultiPoly.variable(bigger, 0, 11), table)
