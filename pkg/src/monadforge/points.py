"""Projective points over Q and prime fields, with exhaustive enumeration.

Points are stored in canonical form (the first nonzero coordinate of every
factor equals 1) so exhaustive sweeps over F_q never double-count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from random import Random
from typing import Iterator

from .spaces import SpaceSpec


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


def _simplify(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


@dataclass(frozen=True)
class ProjectivePoint:
    """One homogeneous coordinate tuple per factor; ``q is None`` means Q."""

    space: SpaceSpec
    coords: tuple[tuple, ...]
    q: int | None = None

    def __post_init__(self) -> None:
        if self.q is not None and not is_prime(self.q):
            raise ValueError(f"field order {self.q} is not prime")
        if len(self.coords) != self.space.num_factors:
            raise ValueError("one coordinate tuple per factor required")
        canonical = []
        for factor, raw in enumerate(self.coords):
            raw = tuple(raw)
            if len(raw) != self.space.dims[factor] + 1:
                raise ValueError(
                    f"factor {factor} needs {self.space.dims[factor] + 1} coordinates"
                )
            if self.q is not None:
                raw = tuple(int(c) % self.q for c in raw)
            lead = next((c for c in raw if c != 0), None)
            if lead is None:
                raise ValueError(f"factor {factor} coordinates are identically zero")
            if lead == 1:
                canonical.append(raw)
            elif self.q is not None:
                inv = pow(lead, -1, self.q)
                canonical.append(tuple((c * inv) % self.q for c in raw))
            else:
                canonical.append(tuple(_simplify(Fraction(c) / lead) for c in raw))
        object.__setattr__(self, "coords", tuple(canonical))

    @property
    def flat_values(self) -> tuple:
        return tuple(itertools.chain.from_iterable(self.coords))

    def to_jsonable(self):
        return [[c if isinstance(c, int) else str(c) for c in factor] for factor in self.coords]


def point_count(space: SpaceSpec, q: int) -> int:
    """Number of F_q-points: the product of (q^(a_i+1) - 1)/(q - 1)."""
    total = 1
    for a in space.dims:
        total *= (q ** (a + 1) - 1) // (q - 1)
    return total


def _factor_representatives(a: int, q: int) -> list[tuple[int, ...]]:
    reps = []
    for lead in range(a + 1):
        for tail in itertools.product(range(q), repeat=a - lead):
            reps.append((0,) * lead + (1,) + tail)
    return reps


def enumerate_points(space: SpaceSpec, q: int) -> Iterator[ProjectivePoint]:
    """Every F_q-point of the product exactly once, in canonical form."""
    if not is_prime(q):
        raise ValueError(f"field order {q} is not prime")
    factors = [_factor_representatives(a, q) for a in space.dims]
    for combo in itertools.product(*factors):
        yield ProjectivePoint(space, combo, q)


def random_rational_point(space: SpaceSpec, rng: Random, bound: int = 9) -> ProjectivePoint:
    """Pseudo-random rational point; deterministic given the rng state."""
    coords = []
    for a in space.dims:
        while True:
            raw = tuple(rng.randint(-bound, bound) for _ in range(a + 1))
            if any(raw):
                break
        coords.append(raw)
    return ProjectivePoint(space, tuple(coords))
