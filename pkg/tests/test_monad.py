"""Parameters, existence conditions, banded matrices and monad assembly."""

import itertools
from math import prod

import pytest

from monadforge import (
    LinearMatrix,
    MultiPoly,
    SpaceSpec,
    ambient_dim,
    build_banded,
    build_monad,
    display_summary,
    family_space,
    floystad_check,
    grid_is_zero,
    mat_mul,
    monad_euler,
    mu_param,
    segre_source_space,
)


# -- numeric parameters ----------------------------------------------------


def test_mu_param_values():
    assert mu_param(1, 1, 1) == 23  # 2*4*6/2 - 1
    assert mu_param(1, 0, 0) == 0
    assert mu_param(2, 1, 1) == 47  # 4*4*6/2 - 1


def test_mu_param_rejects_empty_family():
    with pytest.raises(ValueError):
        mu_param(0, 0, 0)


def test_ambient_dim():
    assert ambient_dim(SpaceSpec((1, 2, 3))) == 23
    assert ambient_dim(SpaceSpec((1,))) == 1
    assert ambient_dim(SpaceSpec((1, 3, 5))) == 47


def test_mu_param_agrees_with_product_formula():
    for l, m, n in itertools.product(range(4), repeat=3):
        if l + m + n == 0:
            continue
        space = family_space(l, m, n)
        assert ambient_dim(space) == 2 * mu_param(l, m, n) + 1


def test_floystad_verdicts():
    v = floystad_check(1, 48, 1, 9)
    assert v.satisfied and v.condition_2 and v.via == "condition-2"
    v = floystad_check(1, 2, 1, 1)
    assert v.satisfied and v.condition_1 and not v.condition_2
    assert v.via == "condition-1"
    v = floystad_check(1, 2, 1, 3)
    assert not v.satisfied and v.via == "none"


def test_existence_chain_for_graded_family():
    # middle rank dominates 2k + dim X whenever at least two factors exist;
    # the single-factor cases only meet the first condition (with equality)
    for l, m, n in itertools.product(range(5), repeat=3):
        total = l + m + n
        if total == 0:
            continue
        space = family_space(l, m, n)
        mu = mu_param(l, m, n)
        for k in (1, 2, 3):
            beta = 2 * mu + 2 * k
            verdict = floystad_check(k, beta, k, space.dim)
            assert verdict.satisfied
            if total >= 2:
                assert 2 * mu >= space.dim
                assert verdict.condition_2
            else:
                assert verdict.condition_1


# -- banded matrices ---------------------------------------------------------


def xy_vars(n):
    source = segre_source_space(n)
    x = [MultiPoly.variable(source, 0, j) for j in range(n + 1)]
    y = [MultiPoly.variable(source, 0, n + 1 + j) for j in range(n + 1)]
    return source, x, y


@pytest.mark.parametrize("band", ["reversed", "paper-literal"])
def test_banded_n1_k1(band):
    source, x, y = xy_vars(1)
    a, b = build_banded(1, 1, band)
    assert b.entries == ((x[0], x[1], y[0], y[1]),)
    if band == "paper-literal":
        assert a.entries == ((-y[0],), (-y[1],), (x[0],), (x[1],))
    else:
        assert a.entries == ((-y[1],), (-y[0],), (x[1],), (x[0],))
    assert grid_is_zero(mat_mul(b, a))


def test_banded_shapes():
    a, b = build_banded(3, 2)
    assert (a.rows, a.cols) == (10, 2)
    assert (b.rows, b.cols) == (2, 10)
    assert a.entry_degree == (1,)


def test_reversed_band_composition_vanishes_for_all_small_cases():
    for n in range(5):
        for k in range(1, 5):
            a, b = build_banded(n, k, "reversed")
            assert grid_is_zero(mat_mul(b, a)), (n, k)


def test_paper_band_composition_survives_for_k2():
    source, x, y = xy_vars(1)
    a, b = build_banded(1, 2, "paper-literal")
    product = mat_mul(b, a)
    assert product[0][0].is_zero and product[1][1].is_zero
    assert product[0][1] == x[0] * y[1] - x[1] * y[0]


def test_band_string_alias():
    a1, b1 = build_banded(2, 2, "paper")
    a2, b2 = build_banded(2, 2, "paper-literal")
    assert a1 == a2 and b1 == b2
    with pytest.raises(ValueError):
        build_banded(2, 2, "diagonal")


# -- monad assembly -----------------------------------------------------------


def test_build_monad_135():
    mon = build_monad(SpaceSpec((1, 3, 5)), 1)
    assert mon.params.beta == 48
    assert (mon.map_a.rows, mon.map_a.cols) == (48, 1)
    assert (mon.map_b.rows, mon.map_b.cols) == (1, 48)
    assert mon.map_a.entry_degree == (1, 1, 1)
    assert mon.term_degrees() == ((-1, -1, -1), (0, 0, 0), (1, 1, 1))


def test_build_monad_123_k1_middle_rank():
    # beta = 2*mu + 2k with mu = 11
    mon = build_monad(SpaceSpec((1, 2, 3)), 1)
    assert mon.params.beta == 24
    assert mon.params.mu == 11
    assert mon.params.beta == 2 * mon.params.mu + 2 * mon.params.k


def test_build_monad_rejects_even_ambient():
    with pytest.raises(ValueError, match="even"):
        build_monad(SpaceSpec((2, 2)), 1)
    with pytest.raises(ValueError):
        build_monad(SpaceSpec((1, 3)), 0)


def test_monad_entries_are_multidegree_ones():
    mon = build_monad(SpaceSpec((1, 2)), 2)
    for row in mon.map_a.entries:
        for p in row:
            assert p.is_zero or p.multidegree() == (1, 1)


# -- display bookkeeping -------------------------------------------------------


def test_display_summary_135_k1():
    mon = build_monad(SpaceSpec((1, 3, 5)), 1)
    summary = display_summary(mon)
    assert summary.cohomology.rank == 46
    assert summary.cohomology.c1 == (0, 0, 0)
    assert summary.kernel.rank == 47
    assert summary.kernel.c1 == (-1, -1, -1)
    assert summary.cokernel.c1 == (1, 1, 1)
    assert not summary.degenerate


def test_display_summary_135_k2_kernel_c1():
    mon = build_monad(SpaceSpec((1, 3, 5)), 2)
    assert display_summary(mon).kernel.c1 == (-2, -2, -2)


def test_display_degenerate_on_p1():
    mon = build_monad(SpaceSpec((1,)), 1)
    summary = display_summary(mon)
    assert summary.cohomology.rank == 0
    assert summary.degenerate


def test_display_rank_additivity_random_spaces():
    for dims, k in [((1, 3), 1), ((1, 2, 3), 2), ((1, 3, 5), 3)]:
        mon = build_monad(SpaceSpec(dims), k)
        s = display_summary(mon)
        p = mon.params
        assert s.kernel.rank == p.beta - p.gamma
        assert s.cokernel.rank == p.beta - p.alpha
        assert s.cohomology.rank == p.beta - p.alpha - p.gamma
        # c1 additivity along both short exact sequences
        for left, middle, right in [
            (s.sub_term, s.kernel, s.cohomology),
            (s.sub_term, s.middle_term, s.cokernel),
        ]:
            assert tuple(
                l + r for l, r in zip(left.c1, right.c1)
            ) == middle.c1


def test_monad_euler_on_13():
    # chi(E) = beta*chi(O) - k*chi(O(-1,-1)) - k*chi(O(1,1)) = 8 - 0 - 8
    mon = build_monad(SpaceSpec((1, 3)), 1)
    assert monad_euler(mon) == 0


def test_identity_times_matrix_is_matrix():
    mon = build_monad(SpaceSpec((1, 1)), 1)
    space = mon.space
    one = MultiPoly.constant(space, 1)
    zero = MultiPoly.zero(space)
    eye = LinearMatrix(
        space,
        tuple(
            tuple(one if i == j else zero for j in range(mon.map_b.rows))
            for i in range(mon.map_b.rows)
        ),
        space.zero_degree(),
    )
    assert mat_mul(eye, mon.map_b) == mon.map_b.entries


def test_shape_law_1x2_times_2x1():
    space = SpaceSpec((1, 1))
    a = MultiPoly.variable(space, 0, 0) * MultiPoly.variable(space, 1, 0)
    b = MultiPoly.variable(space, 0, 1) * MultiPoly.variable(space, 1, 1)
    row = LinearMatrix(space, ((a, b),), (1, 1))
    col = LinearMatrix(space, ((b,), (a,)), (1, 1))
    product = mat_mul(row, col)
    assert len(product) == 1 and len(product[0]) == 1
    assert product[0][0].multidegree() == (2, 2)
