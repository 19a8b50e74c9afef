"""Products of projective spaces and their multigraded bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

MultiDegree = tuple[int, ...]


@dataclass(frozen=True)
class SpaceSpec:
    """A product of projective spaces ``P^{a_1} x ... x P^{a_r}``.

    ``dims`` lists the factor dimensions in order.  ``group_labels``
    optionally tags each factor with a group name; by default factors are
    grouped by equal dimension, which recovers the usual "all the P^1
    factors, all the P^3 factors, ..." bookkeeping.
    """

    dims: tuple[int, ...]
    group_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        dims = tuple(int(a) for a in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("a product of projective spaces needs at least one factor")
        if any(a < 1 for a in dims):
            raise ValueError(f"every factor dimension must be >= 1, got {dims}")
        if self.group_labels is not None:
            labels = tuple(str(g) for g in self.group_labels)
            if len(labels) != len(dims):
                raise ValueError("group_labels must tag every factor")
            object.__setattr__(self, "group_labels", labels)

    @property
    def num_factors(self) -> int:
        return len(self.dims)

    @property
    def picard_rank(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        """Dimension of the product variety."""
        return sum(self.dims)

    @property
    def coord_counts(self) -> tuple[int, ...]:
        """Number of homogeneous coordinates per factor, ``a_i + 1``."""
        return tuple(a + 1 for a in self.dims)

    @property
    def total_coords(self) -> int:
        return sum(self.coord_counts)

    def coord_offset(self, factor: int) -> int:
        """Position of coordinate (factor, 0) in the flattened variable order."""
        return sum(self.coord_counts[:factor])

    def coord_position(self, flat: int) -> tuple[int, int]:
        """Inverse of :meth:`coord_offset` composed with an index shift."""
        if flat < 0:
            raise ValueError(f"flat coordinate index {flat} out of range")
        for factor, count in enumerate(self.coord_counts):
            if flat < count:
                return factor, flat
            flat -= count
        raise ValueError("flat coordinate index out of range")

    def check_degree(self, degree) -> MultiDegree:
        out = tuple(int(d) for d in degree)
        if len(out) != self.num_factors:
            raise ValueError(
                f"multidegree of length {len(out)} does not match {self.num_factors} factors"
            )
        return out

    def ones(self, value: int = 1) -> MultiDegree:
        return (value,) * self.num_factors

    def zero_degree(self) -> MultiDegree:
        return (0,) * self.num_factors

    def groups(self) -> dict[str, tuple[int, ...]]:
        """Ordered partition of the factors, keyed by label.

        Without explicit labels, factors of equal dimension share a group.
        """
        labels = self.group_labels or tuple(f"p{a}" for a in self.dims)
        out: dict[str, list[int]] = {}
        for i, label in enumerate(labels):
            out.setdefault(label, []).append(i)
        return {label: tuple(ix) for label, ix in out.items()}

    def describe(self) -> str:
        return " x ".join(f"P^{a}" for a in self.dims)


@dataclass(frozen=True)
class Variable:
    """One homogeneous coordinate of one factor."""

    factor: int
    index: int

    def validate(self, space: SpaceSpec) -> None:
        if not 0 <= self.factor < space.num_factors:
            raise ValueError(f"factor {self.factor} out of range for dims {space.dims}")
        if not 0 <= self.index <= space.dims[self.factor]:
            raise ValueError(
                f"coordinate index {self.index} out of range for P^{space.dims[self.factor]}"
            )

    def flat_index(self, space: SpaceSpec) -> int:
        self.validate(space)
        return space.coord_offset(self.factor) + self.index

    @property
    def name(self) -> str:
        return f"x{self.factor}_{self.index}"
