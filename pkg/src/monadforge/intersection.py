"""Intersection numbers against the polarization O(1,...,1).

The numerical intersection ring of the product is Z[H_1..H_r] truncated by
H_i^(a_i+1) = 0; the polarization class is L = H_1 + ... + H_r and the top
monomial H_1^{a_1}...H_r^{a_r} evaluates to 1.  Degrees, slopes and the
normalization window are all computed exactly (integers and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from .spaces import MultiDegree, SpaceSpec


class NormalizationError(RuntimeError):
    """The normalized degree fell outside its window: formula bug upstream."""


class ChowTruncation:
    """Truncated polynomial ring carrying the intersection product."""

    def __init__(self, space: SpaceSpec):
        self.space = space
        self._powers: dict[int, dict[tuple[int, ...], int]] = {}

    def one(self) -> dict[tuple[int, ...], int]:
        return {self.space.zero_degree(): 1}

    def hyperplane(self, factor: int) -> dict[tuple[int, ...], int]:
        exps = [0] * self.space.num_factors
        exps[factor] = 1
        return {tuple(exps): 1}

    def divisor_class(self, coefficients: MultiDegree) -> dict[tuple[int, ...], int]:
        coefficients = self.space.check_degree(coefficients)
        out: dict[tuple[int, ...], int] = {}
        for i, c in enumerate(coefficients):
            if c:
                exps = tuple(1 if j == i else 0 for j in range(self.space.num_factors))
                out[exps] = c
        return out

    def multiply(self, u, v) -> dict[tuple[int, ...], int]:
        caps = self.space.dims
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in u.items():
            for e2, c2 in v.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e > cap for e, cap in zip(exps, caps)):
                    continue
                new = out.get(exps, 0) + c1 * c2
                if new:
                    out[exps] = new
                else:
                    out.pop(exps, None)
        return out

    def polarization(self) -> dict[tuple[int, ...], int]:
        return self.divisor_class(self.space.ones())

    def polarization_power(self, e: int) -> dict[tuple[int, ...], int]:
        if e not in self._powers:
            if e == 0:
                self._powers[e] = self.one()
            else:
                self._powers[e] = self.multiply(self.polarization_power(e - 1), self.polarization())
        return self._powers[e]

    def top_coefficient(self, u) -> int:
        return u.get(self.space.dims, 0)

    def top_self_intersection(self) -> int:
        """L^{dim X}; always positive for a nonempty product."""
        return self.top_coefficient(self.polarization_power(self.space.dim))


@lru_cache(maxsize=None)
def _chow(space: SpaceSpec) -> ChowTruncation:
    return ChowTruncation(space)


@dataclass(frozen=True)
class BundleSummary:
    """Rank and first Chern class: all the slope bookkeeping needs."""

    rank: int
    c1: MultiDegree

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", tuple(int(d) for d in self.c1))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")


def delta_L(space: SpaceSpec, divisor: MultiDegree) -> int:
    """Degree of O(divisor): top coefficient of divisor . L^{dim X - 1}."""
    divisor = space.check_degree(divisor)
    ring = _chow(space)
    product = ring.multiply(ring.divisor_class(divisor), ring.polarization_power(space.dim - 1))
    return ring.top_coefficient(product)


def degree_L(space: SpaceSpec, bundle: BundleSummary) -> int:
    return delta_L(space, bundle.c1)


def slope_L(space: SpaceSpec, bundle: BundleSummary) -> Fraction:
    if bundle.rank < 1:
        raise ValueError("slope needs rank >= 1")
    return Fraction(degree_L(space, bundle), bundle.rank)


@dataclass(frozen=True)
class Normalization:
    shift: int
    normalized_c1: MultiDegree
    normalized_degree: int
    window: tuple[int, int]


def normalize_L(space: SpaceSpec, bundle: BundleSummary) -> Normalization:
    """Twist down by the first factor until the degree lands in (we assert)
    the window [1 - d*rank, 0], where d is the degree of the first
    hyperplane class."""
    if bundle.rank < 1:
        raise ValueError("normalization needs rank >= 1")
    first = tuple(1 if i == 0 else 0 for i in range(space.num_factors))
    d = delta_L(space, first)
    if d <= 0:
        raise ValueError("first-factor hyperplane degree must be positive")
    shift = ceil(slope_L(space, bundle) / d)
    normalized_c1 = tuple(
        c - shift * bundle.rank if i == 0 else c for i, c in enumerate(bundle.c1)
    )
    degree = delta_L(space, normalized_c1)
    window = (1 - d * bundle.rank, 0)
    if not window[0] <= degree <= window[1]:
        raise NormalizationError(
            f"normalized degree {degree} escaped window {window}"
        )
    return Normalization(shift, normalized_c1, degree, window)


@dataclass(frozen=True)
class HoppeThreshold:
    """Whether a twist incurs a section-vanishing obligation."""

    delta: int
    bound: Fraction
    strict: bool
    weak: bool


def hoppe_threshold(
    space: SpaceSpec, bundle: BundleSummary, s: int, twist: MultiDegree
) -> HoppeThreshold:
    """Compare delta_L(twist) against -s * slope.

    ``strict`` marks twists whose vanishing the stability criterion
    demands; ``weak`` the semistability variant (<=).
    """
    if not 1 <= s <= bundle.rank - 1:
        raise ValueError(f"exterior power index {s} out of range 1..{bundle.rank - 1}")
    delta = delta_L(space, twist)
    bound = -s * slope_L(space, bundle)
    return HoppeThreshold(delta, bound, delta < bound, delta <= bound)
