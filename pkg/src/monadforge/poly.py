"""Exact sparse polynomials graded by per-factor degree.

Coefficients are unbounded Python integers and all arithmetic is exact;
there is no floating point anywhere in this module.  Terms live in the
flattened exponent lattice of all homogeneous coordinates, ordered by
(factor, coordinate index).  Instances are immutable after construction and
safe to share between threads.

The plain-text syntax names variables ``x<factor>_<index>`` and joins terms
with `` + `` / `` - ``; :meth:`MultiPoly.parse` round-trips the printer
bit-exactly.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .spaces import MultiDegree, SpaceSpec, Variable

_VAR_TOKEN = re.compile(r"^x(\d+)_(\d+)(?:\^(\d+))?$")
_INT_TOKEN = re.compile(r"^\d+$")
_TERM_SPLIT = re.compile(r"[+-]?[^+-]+")

_UNSET = object()


@lru_cache(maxsize=None)
def coord_names(space: SpaceSpec) -> tuple[str, ...]:
    return tuple(
        Variable(f, i).name
        for f in range(space.num_factors)
        for i in range(space.dims[f] + 1)
    )


class MultiPoly:
    """Sparse multivariate polynomial with exact integer coefficients."""

    __slots__ = ("space", "_terms", "_mdeg")

    def __init__(self, space: SpaceSpec, terms: dict[tuple[int, ...], int]):
        width = space.total_coords
        clean: dict[tuple[int, ...], int] = {}
        for exps, coef in terms.items():
            coef = int(coef)
            if coef == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != width or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {space.describe()}")
            clean[exps] = coef
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_mdeg", _UNSET)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, space: SpaceSpec) -> "MultiPoly":
        return cls(space, {})

    @classmethod
    def constant(cls, space: SpaceSpec, value: int) -> "MultiPoly":
        value = int(value)
        if value == 0:
            return cls.zero(space)
        return cls(space, {(0,) * space.total_coords: value})

    @classmethod
    def variable(cls, space: SpaceSpec, factor: int, index: int) -> "MultiPoly":
        pos = Variable(factor, index).flat_index(space)
        exps = [0] * space.total_coords
        exps[pos] = 1
        return cls(space, {tuple(exps): 1})

    @classmethod
    def monomial_from_digits(cls, space: SpaceSpec, digits, coeff: int = 1) -> "MultiPoly":
        """Product of one coordinate per factor, picked by digit."""
        if len(digits) != space.num_factors:
            raise ValueError("one digit per factor required")
        exps = [0] * space.total_coords
        for factor, digit in enumerate(digits):
            exps[Variable(factor, digit).flat_index(space)] += 1
        return cls(space, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        """Term map (do not mutate)."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: descending lex on exponent vectors."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def term_multidegree(self, exps: tuple[int, ...]) -> MultiDegree:
        offs = 0
        out = []
        for count in self.space.coord_counts:
            out.append(sum(exps[offs : offs + count]))
            offs += count
        return tuple(out)

    def multidegree(self) -> MultiDegree | None:
        """Shared per-factor degree of all terms; None when zero or mixed."""
        if self._mdeg is _UNSET:
            value: MultiDegree | None = None
            for exps in self._terms:
                deg = self.term_multidegree(exps)
                if value is None:
                    value = deg
                elif deg != value:
                    value = None
                    break
            object.__setattr__(self, "_mdeg", value)
        return self._mdeg

    def is_homogeneous(self, degree: MultiDegree | None = None) -> bool:
        if self.is_zero:
            return True
        mdeg = self.multidegree()
        if mdeg is None:
            return False
        return degree is None or tuple(degree) == mdeg

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.space != self.space:
                raise ValueError("operands live on different ambient spaces")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.space, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for exps, coef in other._terms.items():
            new = acc.get(exps, 0) + coef
            if new:
                acc[exps] = new
            else:
                acc.pop(exps, None)
        return MultiPoly(self.space, acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.space, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = acc.get(exps, 0) + c1 * c2
                if new:
                    acc[exps] = new
                else:
                    acc.pop(exps, None)
        return MultiPoly(self.space, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if exponent == 0:
            return MultiPoly.constant(self.space, 1)
        if exponent == 1:
            return self
        out = self
        for _ in range(exponent - 1):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.space, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.space, frozenset(self._terms.items())))

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point):
        """Exact value at a :class:`~monadforge.points.ProjectivePoint`.

        Arithmetic happens in the point's field: integers mod q for prime
        fields, int/Fraction arithmetic over the rationals.
        """
        if point.space != self.space:
            raise ValueError("point does not live on this polynomial's space")
        values = point.flat_values
        total = 0
        for exps, coef in self._terms.items():
            term = coef
            for value, e in zip(values, exps):
                if e:
                    term *= value**e
            total += term
        if point.q is not None:
            return total % point.q
        return total

    # -- text format -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = coord_names(self.space)
        pieces: list[tuple[str, str]] = []
        for exps, coef in self.sorted_terms():
            body = "*".join(
                names[pos] if e == 1 else f"{names[pos]}^{e}"
                for pos, e in enumerate(exps)
                if e
            )
            mag = abs(coef)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append(("-" if coef < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.space.dims}, {self})"

    @classmethod
    def parse(cls, space: SpaceSpec, text: str) -> "MultiPoly":
        """Parse the plain-text syntax emitted by ``str``."""
        compact = "".join(text.split())
        if not compact:
            raise ValueError("empty polynomial text")
        if compact == "0":
            return cls.zero(space)
        acc: dict[tuple[int, ...], int] = {}
        width = space.total_coords
        for chunk in _TERM_SPLIT.findall(compact):
            sign = 1
            body = chunk
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            if not body:
                raise ValueError(f"dangling sign in {text!r}")
            coef = sign
            exps = [0] * width
            for token in body.split("*"):
                if _INT_TOKEN.match(token):
                    coef *= int(token)
                    continue
                m = _VAR_TOKEN.match(token)
                if not m:
                    raise ValueError(f"unrecognized token {token!r} in {text!r}")
                factor, index = int(m.group(1)), int(m.group(2))
                power = int(m.group(3)) if m.group(3) else 1
                exps[Variable(factor, index).flat_index(space)] += power
            key = tuple(exps)
            new = acc.get(key, 0) + coef
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        return cls(space, acc)
