"""Command-line entry point wiring every module into reproducible runs.

Subcommands: build, verify, cohom, degree, certify, segre-table, export.
Reports embed the tool version and the resolved configuration; given the
same configuration (seed included) the JSON output is byte-identical.
Exit codes: 0 verified/ok, 1 mathematical counterexample, 2 resource
budget exceeded, 3 usage error.  MONADFORGE_THREADS caps worker threads.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .certify import (
    certificate_json,
    hoppe_obligations,
    kernel_section_count,
    simplicity_certificate,
    stability_certificate,
)
from .cohomology import check_vanishing, euler_characteristic, kunneth_table
from .export import macaulay2_script
from .intersection import BundleSummary, degree_L, delta_L, hoppe_threshold, normalize_L, slope_L
from .monad import build_monad, display_summary
from .segre import segre_table
from .spaces import SpaceSpec
from .verify import (
    DEFAULT_POINT_BUDGET,
    BudgetExceededError,
    exhaustive_fiber_check,
    merge_reports,
    random_fiber_check,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in str(text).split(","))
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


def _labels(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in str(text).split(","))


@dataclass
class RunConfig:
    command: str
    dims: tuple[int, ...] | None = None
    groups: tuple[str, ...] | None = None
    k: int | None = None
    band: str | None = None
    table: str | None = None
    fields: tuple[int, ...] | None = None
    samples: int | None = None
    seed: int | None = None
    radius: int | None = None
    budget: int | None = None
    twist: tuple[int, ...] | None = None
    c1: tuple[int, ...] | None = None
    rank: int | None = None
    s: int | None = None
    what: str | None = None
    format: str = "text"
    output: str | None = None

    def to_jsonable(self) -> dict:
        return {
            key: (list(value) if isinstance(value, tuple) else value)
            for key, value in asdict(self).items()
            if value is not None
        }


def load_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` lines mirroring the flags; # starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


_CONVERTERS = {
    "dims": _ints,
    "groups": _labels,
    "k": int,
    "band": str,
    "table": str,
    "q": _ints,
    "samples": int,
    "seed": int,
    "radius": int,
    "budget": int,
    "twist": _ints,
    "c1": _ints,
    "rank": int,
    "s": int,
    "what": str,
    "format": str,
    "output": str,
    "cas_script": str,
}


def _resolve(args: argparse.Namespace, key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    filevals = getattr(args, "_config_values", {})
    config_key = key.replace("_", "-")
    for candidate in (key, config_key):
        if candidate in filevals:
            return _CONVERTERS[key](filevals[candidate])
    return default


def _workers() -> int:
    raw = os.environ.get("MONADFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _space(args: argparse.Namespace) -> SpaceSpec:
    dims = _resolve(args, "dims")
    if dims is None:
        raise UsageError("--dims is required")
    groups = _resolve(args, "groups")
    return SpaceSpec(dims, groups)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _envelope(config: RunConfig, payload: dict) -> str:
    doc = {"tool": "monadforge", "tool_version": __version__, "config": config.to_jsonable()}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2)


def _monad_from(args: argparse.Namespace, config: RunConfig):
    space = SpaceSpec(config.dims, config.groups)
    return build_monad(space, config.k, config.band, config.table)


# -- subcommand handlers -----------------------------------------------


def cmd_build(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="build",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        k=_resolve(args, "k", 1),
        band=_resolve(args, "band", "reversed"),
        table=_resolve(args, "table", "clean"),
        format=_resolve(args, "format", "text"),
        output=_resolve(args, "output"),
    )
    if config.dims is None:
        raise UsageError("--dims is required")
    mon = _monad_from(args, config)
    summary = display_summary(mon)
    cas_path = _resolve(args, "cas_script")
    if cas_path:
        with open(cas_path, "w", encoding="utf-8") as handle:
            handle.write(macaulay2_script(mon))
    if config.format == "json":
        payload = {
            "params": mon.params.to_jsonable(),
            "band_convention": mon.band_convention,
            "table_convention": mon.table_convention,
            "existence": {
                "on_x": mon.existence_on_x.to_jsonable(),
                "on_ambient": mon.existence_on_ambient.to_jsonable(),
            },
            "map_a": {
                "rows": mon.map_a.rows,
                "cols": mon.map_a.cols,
                "entry_degree": list(mon.map_a.entry_degree),
                "entries": mon.map_a.entry_texts(),
            },
            "map_b": {
                "rows": mon.map_b.rows,
                "cols": mon.map_b.cols,
                "entry_degree": list(mon.map_b.entry_degree),
                "entries": mon.map_b.entry_texts(),
            },
            "display": summary.to_jsonable(),
        }
        _emit(_envelope(config, payload), config.output)
    else:
        p = mon.params
        lines = [
            f"monad on {mon.space.describe()}  "
            f"(k = {p.k}, band = {mon.band_convention}, table = {mon.table_convention})",
            f"mu = {p.mu}  N = {p.ambient}  ranks = ({p.alpha}, {p.beta}, {p.gamma})",
            f"existence at nu = dim X = {mon.space.dim}: {mon.existence_on_x.via}",
            f"existence at nu = N = {p.ambient}: {mon.existence_on_ambient.via}",
            f"cohomology bundle: rank {summary.cohomology.rank}, c1 = {summary.cohomology.c1}",
            f"A ({mon.map_a.rows} x {mon.map_a.cols}):",
        ]
        lines += [
            "  [" + ", ".join(str(e) for e in row) + "]" for row in mon.map_a.entries
        ]
        lines.append(f"B ({mon.map_b.rows} x {mon.map_b.cols}):")
        lines += [
            "  [" + ", ".join(str(e) for e in row) + "]" for row in mon.map_b.entries
        ]
        _emit("\n".join(lines), config.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="verify",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        k=_resolve(args, "k", 1),
        band=_resolve(args, "band", "reversed"),
        table=_resolve(args, "table", "clean"),
        fields=_resolve(args, "q", (2, 3)),
        samples=_resolve(args, "samples", 0),
        seed=_resolve(args, "seed", 0),
        budget=_resolve(args, "budget", DEFAULT_POINT_BUDGET),
        format=_resolve(args, "format", "text"),
        output=_resolve(args, "output"),
    )
    if config.dims is None:
        raise UsageError("--dims is required")
    mon = _monad_from(args, config)
    workers = _workers()
    reports = [
        exhaustive_fiber_check(mon, q, budget=config.budget, workers=workers)
        for q in config.fields
    ]
    if config.samples:
        reports.append(random_fiber_check(mon, config.samples, config.seed, workers=workers))
    if not reports:
        raise UsageError("nothing to verify: provide --q and/or --samples")
    merged = merge_reports(reports)
    if config.format == "json":
        _emit(_envelope(config, {"report": merged.to_jsonable()}), config.output)
    else:
        lines = [
            f"verify {mon.space.describe()}  (k = {mon.params.k}, "
            f"band = {mon.band_convention}, table = {mon.table_convention})",
            f"composition_zero: {merged.composition_zero}",
            f"fields: {', '.join(merged.fields)}   points checked: {merged.points_checked}",
            f"generic ranks: A {merged.generic_rank_a}/{merged.expected_rank_a}, "
            f"B {merged.generic_rank_b}/{merged.expected_rank_b}",
            f"failures: {len(merged.fiber_failures)}",
            f"verdict: {merged.verdict}",
        ]
        _emit("\n".join(lines), config.output)
    return EXIT_OK if merged.valid else EXIT_COUNTEREXAMPLE


def cmd_cohom(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="cohom",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        twist=_resolve(args, "twist"),
        format=_resolve(args, "format", "text"),
        output=_resolve(args, "output"),
    )
    if config.dims is None or config.twist is None:
        raise UsageError("--dims and --twist are required")
    space = SpaceSpec(config.dims, config.groups)
    table = kunneth_table(space, config.twist)
    chi = table.euler()
    if config.format == "json":
        payload = {"h": list(table.values), "chi": chi}
        _emit(_envelope(config, payload), config.output)
    else:
        nonzero = ", ".join(f"h{t} = {table[t]}" for t in table.nonzero_degrees()) or "all zero"
        _emit(
            f"space {space.describe()}  twist {config.twist}\n"
            f"h = {list(table.values)}\n"
            f"nonzero: {nonzero}\n"
            f"chi = {chi}",
            config.output,
        )
    return EXIT_OK


def cmd_degree(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="degree",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        c1=_resolve(args, "c1"),
        rank=_resolve(args, "rank"),
        s=_resolve(args, "s"),
        twist=_resolve(args, "twist"),
        format=_resolve(args, "format", "text"),
        output=_resolve(args, "output"),
    )
    if config.dims is None or config.c1 is None or config.rank is None:
        raise UsageError("--dims, --c1 and --rank are required")
    space = SpaceSpec(config.dims, config.groups)
    bundle = BundleSummary(config.rank, config.c1)
    degree = degree_L(space, bundle)
    slope = slope_L(space, bundle)
    normalization = normalize_L(space, bundle)
    threshold = None
    if config.s is not None and config.twist is not None:
        threshold = hoppe_threshold(space, bundle, config.s, config.twist)
    if config.format == "json":
        payload = {
            "degree": degree,
            "slope": str(slope),
            "normalization": {
                "shift": normalization.shift,
                "normalized_c1": list(normalization.normalized_c1),
                "normalized_degree": normalization.normalized_degree,
                "window": list(normalization.window),
            },
        }
        if threshold is not None:
            payload["threshold"] = {
                "delta": threshold.delta,
                "bound": str(threshold.bound),
                "strict": threshold.strict,
                "weak": threshold.weak,
            }
        _emit(_envelope(config, payload), config.output)
    else:
        lines = [
            f"space {space.describe()}   rank = {bundle.rank}  c1 = {bundle.c1}",
            f"deg_L = {degree}   slope = {slope}",
            f"normalization: shift {normalization.shift}, c1 -> {normalization.normalized_c1}, "
            f"deg {normalization.normalized_degree} in window {normalization.window}",
        ]
        if threshold is not None:
            lines.append(
                f"threshold(s={config.s}, twist={config.twist}): delta = {threshold.delta}, "
                f"bound = {threshold.bound}, strict = {threshold.strict}, weak = {threshold.weak}"
            )
        _emit("\n".join(lines), config.output)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="certify",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        k=_resolve(args, "k", 1),
        band=_resolve(args, "band", "reversed"),
        table=_resolve(args, "table", "clean"),
        radius=_resolve(args, "radius", 2),
        what=_resolve(args, "what", "stability"),
        format=_resolve(args, "format", "json"),
        output=_resolve(args, "output"),
    )
    if config.dims is None:
        raise UsageError("--dims is required")
    if config.what not in ("stability", "simplicity", "hoppe"):
        raise UsageError(f"unknown certificate kind {config.what!r}")
    mon = _monad_from(args, config)
    if config.what == "stability":
        cert = stability_certificate(mon, config.radius)
        ok = cert.ok
    elif config.what == "simplicity":
        cert = simplicity_certificate(mon)
        ok = cert.ok
    else:
        summary = display_summary(mon)
        cert = hoppe_obligations(
            mon.space,
            summary.kernel,
            config.radius,
            kernel_h0=kernel_section_count(mon),
        )
        ok = True
    if config.format == "json":
        _emit(_envelope(config, {"certificate": cert.to_jsonable()}), config.output)
    else:
        verdict = getattr(cert, "verdict", "informational")
        _emit(f"{config.what} certificate on {mon.space.describe()}: {verdict}", config.output)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_segre_table(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="segre-table",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        table=_resolve(args, "table", "clean"),
        format=_resolve(args, "format", "text"),
        output=_resolve(args, "output"),
    )
    if config.dims is None:
        raise UsageError("--dims is required")
    space = SpaceSpec(config.dims, config.groups)
    table = segre_table(space, config.table)
    rows = table.rows()
    if config.format == "json":
        payload = {
            "mu": table.mu,
            "convention": table.convention,
            "rows": [
                {"index": index, "pn_coord": coord, "monomial": monomial}
                for index, coord, monomial in rows
            ],
        }
        _emit(_envelope(config, payload), config.output)
    else:
        coord_width = max(len(c) for _, c, _ in rows)
        lines = [
            f"{space.describe()} -> P^{2 * table.mu + 1}   "
            f"(mu = {table.mu}, convention = {table.convention})"
        ]
        lines += [
            f"{index:>4}  {coord:<{coord_width}}  {monomial}"
            for index, coord, monomial in rows
        ]
        _emit("\n".join(lines), config.output)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="export",
        dims=_resolve(args, "dims"),
        groups=_resolve(args, "groups"),
        k=_resolve(args, "k", 1),
        band=_resolve(args, "band", "reversed"),
        table=_resolve(args, "table", "clean"),
        output=_resolve(args, "output"),
    )
    if config.dims is None:
        raise UsageError("--dims is required")
    mon = _monad_from(args, config)
    _emit(macaulay2_script(mon), config.output)
    return EXIT_OK


# -- parser wiring -------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, *, monad: bool = False) -> None:
    sub.add_argument("--dims", type=_ints, help="factor dimensions, e.g. 1,3,5")
    sub.add_argument("--groups", type=_labels, help="one group label per factor")
    sub.add_argument("--config", help="flat key = value config file")
    sub.add_argument("--format", choices=("text", "json"))
    sub.add_argument("--output", help="write the report here instead of stdout")
    if monad:
        sub.add_argument("--k", type=int, help="end-term multiplicity (default 1)")
        sub.add_argument("--band", choices=("reversed", "paper"), help="band convention")
        sub.add_argument("--table", choices=("clean", "paper"), help="table split convention")


def build_parser() -> _Parser:
    parser = _Parser(prog="monadforge", description=__doc__)
    parser.add_argument("--version", action="version", version=f"monadforge {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("build", help="construct a banded monad")
    _add_common(sub, monad=True)
    sub.add_argument("--cas-script", dest="cas_script", help="also write a Macaulay2 script here")
    sub.set_defaults(func=cmd_build)

    sub = commands.add_parser("verify", help="check composition and fiberwise ranks")
    _add_common(sub, monad=True)
    sub.add_argument("--q", type=_ints, help="primes to sweep exhaustively, e.g. 2,3")
    sub.add_argument("--samples", type=int, help="random rational sample count")
    sub.add_argument("--seed", type=int, help="seed for random sampling")
    sub.add_argument("--budget", type=int, help="max points per exhaustive sweep")
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("cohom", help="h-vector and Euler characteristic of a twist")
    _add_common(sub)
    sub.add_argument("--twist", type=_ints, help="per-factor twist, e.g. -2,-4,-6")
    sub.set_defaults(func=cmd_cohom)

    sub = commands.add_parser("degree", help="degree, slope, normalization, thresholds")
    _add_common(sub)
    sub.add_argument("--c1", type=_ints, help="first Chern class")
    sub.add_argument("--rank", type=int)
    sub.add_argument("--s", type=int, help="exterior power index for the threshold")
    sub.add_argument("--twist", type=_ints, help="twist for the threshold")
    sub.set_defaults(func=cmd_degree)

    sub = commands.add_parser("certify", help="stability/simplicity/hoppe certificates")
    _add_common(sub, monad=True)
    sub.add_argument("--radius", type=int, help="twist box radius (default 2)")
    sub.add_argument("--what", choices=("stability", "simplicity", "hoppe"))
    sub.set_defaults(func=cmd_certify)

    sub = commands.add_parser("segre-table", help="print the coordinate-monomial table")
    _add_common(sub)
    sub.add_argument("--table", choices=("clean", "paper"), help="table split convention")
    sub.set_defaults(func=cmd_segre_table)

    sub = commands.add_parser("export", help="emit a Macaulay2 cross-check script")
    _add_common(sub, monad=True)
    sub.set_defaults(func=cmd_export)
    return parser


_VALUE_FLAGS = {"--twist", "--c1", "--dims", "--q"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--twist -2,-4,-6`` as ``--twist=-2,-4,-6`` so argparse does
    not mistake the leading-minus value for an option."""
    out = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if token in _VALUE_FLAGS and nxt and len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
            out.append(f"{token}={nxt}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _glue_negative_values(list(argv))
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            args._config_values = load_config_file(args.config)
        else:
            args._config_values = {}
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
