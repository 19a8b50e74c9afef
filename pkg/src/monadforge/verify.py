"""Machine checks of the monad axioms: zero composition and fiberwise rank.

The composition check is symbolic and exact.  Fiberwise maximal rank over
an infinite field cannot be decided by sampling, so the verifier offers an
exhaustive sweep over all F_q-points (small primes) plus seeded random
rational sampling, and its verdicts say "verified at desk scale" /
"no counterexample found" -- never "proven".

Point scanning is data-parallel: workers share only immutable inputs and
failure lists are merged and sorted canonically, so reports do not depend
on scheduling order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Iterable

from .linalg import rank_exact
from .matrices import evaluate_matrix, grid_is_zero, mat_mul
from .monad import Monad
from .points import ProjectivePoint, enumerate_points, point_count, random_rational_point

DEFAULT_POINT_BUDGET = 10_000_000

VERDICT_DESK_SCALE = "verified at desk scale"
VERDICT_NO_COUNTEREXAMPLE = "no counterexample found"
VERDICT_COUNTEREXAMPLE = "counterexample found"


class BudgetExceededError(RuntimeError):
    """Exhaustive sweep would exceed the point budget; use random sampling."""


@dataclass(frozen=True)
class FiberFailure:
    point: ProjectivePoint
    matrix: str
    rank: int
    expected: int

    def sort_key(self):
        return (self.matrix, self.point.coords)

    def to_jsonable(self) -> dict:
        return {
            "matrix": self.matrix,
            "rank": self.rank,
            "expected": self.expected,
            "point": self.point.to_jsonable(),
        }


@dataclass(frozen=True)
class VerificationReport:
    composition_zero: bool
    expected_rank_a: int
    expected_rank_b: int
    generic_rank_a: int
    generic_rank_b: int
    fiber_failures: tuple[FiberFailure, ...]
    points_checked: int
    fields: tuple[str, ...]
    seed: int | None = None
    exhaustive: bool = False

    @property
    def valid(self) -> bool:
        return (
            self.composition_zero
            and not self.fiber_failures
            and self.generic_rank_a == self.expected_rank_a
            and self.generic_rank_b == self.expected_rank_b
        )

    @property
    def verdict(self) -> str:
        if not self.composition_zero or self.fiber_failures:
            return VERDICT_COUNTEREXAMPLE
        return VERDICT_DESK_SCALE if self.exhaustive else VERDICT_NO_COUNTEREXAMPLE

    def to_jsonable(self) -> dict:
        return {
            "composition_zero": self.composition_zero,
            "ranks": {
                "A": {"expected": self.expected_rank_a, "generic": self.generic_rank_a},
                "B": {"expected": self.expected_rank_b, "generic": self.generic_rank_b},
            },
            "fields": list(self.fields),
            "failures": [f.to_jsonable() for f in self.fiber_failures],
            "points_checked": self.points_checked,
            "seed": self.seed,
            "verdict": self.verdict,
        }


def composition_product(mon: Monad):
    return mat_mul(mon.map_b, mon.map_a)


def check_composition_zero(mon: Monad) -> bool:
    """True iff every entry of map_b . map_a is the zero polynomial."""
    return grid_is_zero(composition_product(mon))


def _scan(mon: Monad, points: Iterable[ProjectivePoint], q: int | None, workers: int):
    alpha, gamma = mon.params.alpha, mon.params.gamma

    def check(pt: ProjectivePoint):
        rank_a = rank_exact(evaluate_matrix(mon.map_a, pt), q)
        rank_b = rank_exact(evaluate_matrix(mon.map_b, pt), q)
        return pt, rank_a, rank_b

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(check, points)
            outcomes = list(results)
    else:
        outcomes = [check(pt) for pt in points]

    generic_a = generic_b = 0
    failures: list[FiberFailure] = []
    for pt, rank_a, rank_b in outcomes:
        generic_a = max(generic_a, rank_a)
        generic_b = max(generic_b, rank_b)
        if rank_a < alpha:
            failures.append(FiberFailure(pt, "A", rank_a, alpha))
        if rank_b < gamma:
            failures.append(FiberFailure(pt, "B", rank_b, gamma))
    failures.sort(key=lambda f: f.sort_key())
    return generic_a, generic_b, tuple(failures), len(outcomes)


def exhaustive_fiber_check(
    mon: Monad,
    q: int,
    budget: int = DEFAULT_POINT_BUDGET,
    workers: int = 1,
) -> VerificationReport:
    """Rank check at every F_q-point of the product."""
    total = point_count(mon.space, q)
    if total > budget:
        raise BudgetExceededError(
            f"{total} F_{q}-points exceed the budget of {budget}; "
            "use random_fiber_check instead"
        )
    generic_a, generic_b, failures, checked = _scan(
        mon, enumerate_points(mon.space, q), q, workers
    )
    return VerificationReport(
        composition_zero=check_composition_zero(mon),
        expected_rank_a=mon.params.alpha,
        expected_rank_b=mon.params.gamma,
        generic_rank_a=generic_a,
        generic_rank_b=generic_b,
        fiber_failures=failures,
        points_checked=checked,
        fields=(f"F{q}",),
        exhaustive=True,
    )


def random_fiber_check(
    mon: Monad,
    samples: int,
    seed: int = 0,
    workers: int = 1,
) -> VerificationReport:
    """Rank check at seeded pseudo-random rational points (deterministic)."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = Random(seed)
    points = [random_rational_point(mon.space, rng) for _ in range(samples)]
    generic_a, generic_b, failures, checked = _scan(mon, points, None, workers)
    return VerificationReport(
        composition_zero=check_composition_zero(mon),
        expected_rank_a=mon.params.alpha,
        expected_rank_b=mon.params.gamma,
        generic_rank_a=generic_a,
        generic_rank_b=generic_b,
        fiber_failures=failures,
        points_checked=checked,
        fields=("Q",),
        seed=seed,
    )


def merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    """Commutative merge: verdicts must not depend on sweep order."""
    if not reports:
        raise ValueError("nothing to merge")
    failures = sorted(
        (f for r in reports for f in r.fiber_failures), key=lambda f: f.sort_key()
    )
    seeds = [r.seed for r in reports if r.seed is not None]
    return VerificationReport(
        composition_zero=all(r.composition_zero for r in reports),
        expected_rank_a=reports[0].expected_rank_a,
        expected_rank_b=reports[0].expected_rank_b,
        generic_rank_a=max(r.generic_rank_a for r in reports),
        generic_rank_b=max(r.generic_rank_b for r in reports),
        fiber_failures=tuple(failures),
        points_checked=sum(r.points_checked for r in reports),
        fields=tuple(f for r in reports for f in r.fields),
        seed=seeds[0] if seeds else None,
        exhaustive=any(r.exhaustive for r in reports),
    )
