"""Macaulay2-readable export so an independent system can re-check a monad."""

from __future__ import annotations

from .monad import Monad
from .poly import MultiPoly
from .spaces import SpaceSpec


def _m2_variable(space: SpaceSpec, flat: int) -> str:
    factor, index = space.coord_position(flat)
    return f"x_({factor},{index})"


def _m2_poly(p: MultiPoly) -> str:
    if p.is_zero:
        return "0"
    space = p.space
    pieces = []
    for exps, coef in p.sorted_terms():
        body = "*".join(
            _m2_variable(space, pos) if e == 1 else f"{_m2_variable(space, pos)}^{e}"
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
        out += f"{sign}{text}"
    return out


def _m2_matrix(name: str, entries) -> str:
    rows = ",\n  ".join(
        "{" + ", ".join(_m2_poly(p) for p in row) + "}" for row in entries
    )
    return f"{name} = matrix {{\n  {rows}\n}};"


def macaulay2_script(mon: Monad) -> str:
    """Script declaring the multigraded ring and both maps, asserting that
    the composition vanishes and that the generic ranks are maximal."""
    space = mon.space
    if mon.map_a.rows == 0 or mon.map_a.cols == 0:
        raise ValueError("monad has no matrix entries to export")
    gens = []
    degrees = []
    for factor, a in enumerate(space.dims):
        for index in range(a + 1):
            gens.append(f"x_({factor},{index})")
            degrees.append(
                "{" + ",".join("1" if g == factor else "0" for g in range(space.num_factors)) + "}"
            )
    lines = [
        f"-- linear monad on {space.describe()} "
        f"(k = {mon.params.k}, band = {mon.band_convention}, table = {mon.table_convention})",
        "R = QQ[" + ", ".join(gens) + ", Degrees => {" + ", ".join(degrees) + "}];",
        _m2_matrix("Abar", mon.map_a.entries),
        _m2_matrix("Bbar", mon.map_b.entries),
        "assert(Bbar * Abar == 0);",
        f"assert(rank Abar == {mon.params.alpha});",
        f"assert(rank Bbar == {mon.params.gamma});",
        '<< "composition zero and generic ranks verified" << endl;',
    ]
    return "\n".join(lines) + "\n"
