"""Construction of banded linear monads and their pullbacks to the product.

The source objects live on P^{2n+1}: a k x (2n+2k) matrix B = [B1 | B2]
whose bands carry consecutive x- and y-coordinates, and a (2n+2k) x k
matrix A stacking the negated y-band over the x-band.  Substituting the
multidegree-(1,...,1) monomial table turns (A, B) into the maps of a
three-term complex of twisted sums of line bundles on the product.

Band conventions:

* ``reversed`` (default): both bands of A run their variables backwards,
  entry (t, j) = v_{n-t+j}.  Then B*A = 0 identically on P^{2n+1} for
  every k, so the pulled-back composition vanishes on any product.
* ``paper-literal``: A's bands descend in the same order as B's.  The
  composition then survives on P^{2n+1} for k >= 2, but collapses to zero
  after substitution whenever the first factor is a P^1 (with the clean
  table split), because x_p*y_q and x_q*y_p share one image monomial.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import prod

from .cohomology import euler_characteristic
from .intersection import BundleSummary
from .matrices import LinearMatrix
from .poly import MultiPoly
from .segre import SegreTable, segre_source_space, segre_table, substitute
from .spaces import MultiDegree, SpaceSpec

BAND_CONVENTIONS = ("reversed", "paper-literal")


def _normalize_band(convention: str) -> str:
    if convention == "paper":
        return "paper-literal"
    if convention not in BAND_CONVENTIONS:
        raise ValueError(f"unknown band convention {convention!r}")
    return convention


def mu_param(l: int, m: int, n: int) -> int:
    """Half the Segre coordinate count, minus one, for the graded family
    (P^1)^l x (P^3)^m x (P^5)^n: 2^(l+2m+n-1) * 3^n - 1."""
    if min(l, m, n) < 0 or l + m + n == 0:
        raise ValueError("group sizes must be nonnegative and not all zero")
    return 2 ** (l + 2 * m + n - 1) * 3**n - 1


def ambient_dim(space: SpaceSpec) -> int:
    """Projective dimension N of the multidegree-(1,...,1) embedding target."""
    return prod(a + 1 for a in space.dims) - 1


def family_space(l: int, m: int, n: int) -> SpaceSpec:
    """Dimension vector (1,..,1,3,..,3,5,..,5) with l, m, n repetitions."""
    if min(l, m, n) < 0 or l + m + n == 0:
        raise ValueError("group sizes must be nonnegative and not all zero")
    return SpaceSpec((1,) * l + (3,) * m + (5,) * n)


@dataclass(frozen=True)
class FloystadVerdict:
    """Which of the two linear-monad existence conditions hold."""

    satisfied: bool
    condition_1: bool
    condition_2: bool
    via: str

    def to_jsonable(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "condition_1": self.condition_1,
            "condition_2": self.condition_2,
            "via": self.via,
        }


def floystad_check(a: int, b: int, c: int, nu: int) -> FloystadVerdict:
    """Existence test for a linear monad with term ranks (a, b, c) on a
    nu-dimensional ambient: (1) b >= 2c + nu - 1 and b >= a + c, or
    (2) b >= a + c + nu."""
    if min(a, b, c) < 1 or nu < 1:
        raise ValueError("ranks and ambient dimension must be positive")
    cond1 = b >= 2 * c + nu - 1 and b >= a + c
    cond2 = b >= a + c + nu
    if cond2:
        via = "condition-2"
    elif cond1:
        via = "condition-1"
    else:
        via = "none"
    return FloystadVerdict(cond1 or cond2, cond1, cond2, via)


def build_banded(n: int, k: int, band_convention: str = "reversed") -> tuple[LinearMatrix, LinearMatrix]:
    """The banded pair (A, B) of linear forms on P^{2n+1}.

    B is k x (2n+2k) with row i of each half carrying x_0..x_n
    (resp. y_0..y_n) from column i on; A is (2n+2k) x k.
    """
    convention = _normalize_band(band_convention)
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    source = segre_source_space(n)
    x = [MultiPoly.variable(source, 0, j) for j in range(n + 1)]
    y = [MultiPoly.variable(source, 0, n + 1 + j) for j in range(n + 1)]
    zero = MultiPoly.zero(source)
    width = n + k

    def a_band(values, t, j):
        s = t - j
        if 0 <= s <= n:
            return values[n - s] if convention == "reversed" else values[s]
        return zero

    b_rows = []
    for i in range(k):
        row = [x[t - i] if 0 <= t - i <= n else zero for t in range(width)]
        row += [y[t - i] if 0 <= t - i <= n else zero for t in range(width)]
        b_rows.append(tuple(row))
    a_rows = [tuple(-a_band(y, t, j) for j in range(k)) for t in range(width)]
    a_rows += [tuple(a_band(x, t, j) for j in range(k)) for t in range(width)]
    matrix_a = LinearMatrix(source, tuple(a_rows), (1,))
    matrix_b = LinearMatrix(source, tuple(b_rows), (1,))
    return matrix_a, matrix_b


@dataclass(frozen=True)
class MonadParams:
    space: SpaceSpec
    alpha: int
    beta: int
    gamma: int
    mu: int
    ambient: int

    def __post_init__(self) -> None:
        if self.ambient != 2 * self.mu + 1:
            raise ValueError("ambient dimension must equal 2*mu + 1")
        if min(self.alpha, self.beta, self.gamma) < 1:
            raise ValueError("term ranks must be positive")

    @property
    def k(self) -> int:
        if self.alpha != self.gamma:
            raise ValueError("k is only defined when the end ranks agree")
        return self.alpha

    def to_jsonable(self) -> dict:
        return {
            "dims": list(self.space.dims),
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "mu": self.mu,
            "ambient": self.ambient,
        }


@dataclass(frozen=True)
class Monad:
    """The pulled-back pair: map_a is beta x alpha, map_b is gamma x beta,
    with all entries of multidegree (1,...,1)."""

    params: MonadParams
    map_a: LinearMatrix
    map_b: LinearMatrix
    band_convention: str
    table_convention: str
    existence_on_x: FloystadVerdict
    existence_on_ambient: FloystadVerdict

    @property
    def space(self) -> SpaceSpec:
        return self.params.space

    def term_degrees(self) -> tuple[MultiDegree, MultiDegree, MultiDegree]:
        space = self.space
        return (space.ones(-1), space.zero_degree(), space.ones(1))


def build_monad(
    space: SpaceSpec,
    k: int,
    band_convention: str = "reversed",
    table_convention: str = "clean",
    table: SegreTable | None = None,
) -> Monad:
    """Banded monad with end ranks k and middle rank 2*mu + 2k on the
    product; requires an odd ambient dimension (some odd factor)."""
    if k < 1:
        raise ValueError("the end-term multiplicity k must be >= 1")
    if table is None:
        table = segre_table(space, table_convention)
    mu = table.mu
    big_n = 2 * mu + 1
    beta = 2 * mu + 2 * k
    on_x = floystad_check(k, beta, k, space.dim)
    on_ambient = floystad_check(k, beta, k, big_n)
    if not on_x.satisfied:
        raise ValueError(
            f"existence conditions fail at nu = dim X = {space.dim} for ranks ({k}, {beta}, {k})"
        )
    if not on_ambient.satisfied:
        warnings.warn(
            "existence conditions fail at the embedding ambient level; continuing",
            RuntimeWarning,
            stacklevel=2,
        )
    banded_a, banded_b = build_banded(mu, k, band_convention)
    params = MonadParams(space=space, alpha=k, beta=beta, gamma=k, mu=mu, ambient=big_n)
    return Monad(
        params=params,
        map_a=substitute(banded_a, table),
        map_b=substitute(banded_b, table),
        band_convention=_normalize_band(band_convention),
        table_convention=table.convention,
        existence_on_x=on_x,
        existence_on_ambient=on_ambient,
    )


@dataclass(frozen=True)
class DisplaySummary:
    """Ranks and first Chern classes read off the display diagram."""

    sub_term: BundleSummary
    middle_term: BundleSummary
    quot_term: BundleSummary
    kernel: BundleSummary
    cokernel: BundleSummary
    cohomology: BundleSummary
    degenerate: bool

    def to_jsonable(self) -> dict:
        def unpack(b: BundleSummary) -> dict:
            return {"rank": b.rank, "c1": list(b.c1)}

        return {
            "sub_term": unpack(self.sub_term),
            "middle_term": unpack(self.middle_term),
            "quot_term": unpack(self.quot_term),
            "kernel": unpack(self.kernel),
            "cokernel": unpack(self.cokernel),
            "cohomology": unpack(self.cohomology),
            "degenerate": self.degenerate,
        }


def display_summary(mon: Monad) -> DisplaySummary:
    """Additivity along the display: rank and c1 of the kernel, cokernel
    and middle-homology bundles."""
    p = mon.params
    space = p.space
    sub = BundleSummary(p.alpha, space.ones(-p.alpha))
    middle = BundleSummary(p.beta, space.zero_degree())
    quot = BundleSummary(p.gamma, space.ones(p.gamma))
    kernel = BundleSummary(p.beta - p.gamma, tuple(-q for q in quot.c1))
    cokernel = BundleSummary(p.beta - p.alpha, tuple(-s for s in sub.c1))
    rank_e = p.beta - p.alpha - p.gamma
    c1_e = tuple(kc - sc for kc, sc in zip(kernel.c1, sub.c1))
    cohomology = BundleSummary(rank_e, c1_e)
    return DisplaySummary(sub, middle, quot, kernel, cokernel, cohomology, rank_e == 0)


def monad_euler(mon: Monad) -> int:
    """Euler characteristic of the middle-homology bundle, via the display."""
    p = mon.params
    space = p.space
    chi_kernel = p.beta * euler_characteristic(space, space.zero_degree()) - p.gamma * euler_characteristic(space, space.ones(1))
    return chi_kernel - p.alpha * euler_characteristic(space, space.ones(-1))
