"""Line-bundle cohomology on products of projective spaces.

Everything reduces to the closed form on one projective factor and the
graded tensor decomposition across factors:

* on P^n:  h^0(O(d)) = C(n+d, n) for d >= 0,
           h^n(O(d)) = C(-d-1, n) for d <= -n-1,
           all other groups vanish;
* on a product: the h-vector is the convolution (over cohomological
  degree) of the factor h-vectors.

All dimensions are unbounded integers; nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .spaces import MultiDegree, SpaceSpec


@dataclass(frozen=True)
class CohomTable:
    """Vector of cohomology dimensions h^0..h^top."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("cohomology dimensions are nonnegative")

    def __getitem__(self, t: int) -> int:
        return self.values[t]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def euler(self) -> int:
        return sum(v if t % 2 == 0 else -v for t, v in enumerate(self.values))

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(t for t, v in enumerate(self.values) if v)


@lru_cache(maxsize=None)
def bott_vector(n: int, d: int) -> CohomTable:
    """h-vector of O(d) on P^n (cached; safe for concurrent readers)."""
    if n < 1:
        raise ValueError("projective factor dimension must be >= 1")
    values = [0] * (n + 1)
    if d >= 0:
        values[0] = comb(n + d, n)
    elif -d - n - 1 >= 0:
        values[n] = comb(-d - 1, n)
    return CohomTable(tuple(values))


def kunneth_table(space: SpaceSpec, twist: MultiDegree) -> CohomTable:
    """h-vector of O(twist) on the product, by convolution over factors."""
    twist = space.check_degree(twist)
    acc = [1]
    for a, d in zip(space.dims, twist):
        factor = bott_vector(a, d).values
        out = [0] * (len(acc) + len(factor) - 1)
        for s, u in enumerate(acc):
            if not u:
                continue
            for t, v in enumerate(factor):
                if v:
                    out[s + t] += u * v
        acc = out
    return CohomTable(tuple(acc))


def euler_characteristic(space: SpaceSpec, twist: MultiDegree) -> int:
    return kunneth_table(space, twist).euler()


@dataclass(frozen=True)
class VanishingReport:
    """Outcome of the positive-group-sum vanishing check for O(-twist)."""

    space: SpaceSpec
    positive_twist: MultiDegree
    group_sums: tuple[tuple[str, int], ...]
    table: CohomTable
    vanishing: tuple[bool, ...]
    counterexample_degrees: tuple[int, ...]

    @property
    def has_counterexample(self) -> bool:
        return bool(self.counterexample_degrees)


def check_vanishing(space: SpaceSpec, positive_twist: MultiDegree) -> VanishingReport:
    """Audit the claim h^p(O(-f_1,...,-h_n)) = 0 for p < dim X - 1.

    ``positive_twist`` carries the positive data (f, g, h); every factor
    group must sum positive, else the hypothesis is violated and we raise.
    Degrees below ``dim X - 1`` with nonzero cohomology are reported as
    counterexamples to the claimed range rather than silently accepted.
    """
    positive_twist = space.check_degree(positive_twist)
    sums = []
    for label, members in space.groups().items():
        total = sum(positive_twist[i] for i in members)
        if total <= 0:
            raise ValueError(
                f"group {label!r} sums to {total}; every group sum must be positive"
            )
        sums.append((label, total))
    table = kunneth_table(space, tuple(-t for t in positive_twist))
    vanishing = tuple(v == 0 for v in table)
    bad = tuple(t for t, v in enumerate(table) if v and t < space.dim - 1)
    return VanishingReport(space, positive_twist, tuple(sums), table, vanishing, bad)


def h0_wedge_linebundle_sum(
    space: SpaceSpec, twist: MultiDegree, multiplicity: int, power: int
) -> int:
    """h^0 of the ``power``-th exterior power of ``O(twist)^multiplicity``.

    The exterior power of a sum of copies of one line bundle splits as
    O(power * twist) repeated C(multiplicity, power) times.
    """
    if not 1 <= power <= multiplicity:
        raise ValueError(f"power {power} out of range 1..{multiplicity}")
    twist = space.check_degree(twist)
    scaled = tuple(power * d for d in twist)
    return comb(multiplicity, power) * kunneth_table(space, scaled)[0]
