"""Command-line interface.

Subcommands
-----------
expand
    Normal-order a power of (multiplier * derivative) and print the
    coefficient of each derivative power, or the fully specialized
    polynomial when --at-d is given.
triangle
    Stream the rows of a coefficient family in text, csv or json lines.
enumerate
    Stream combinatorial objects with their statistics as json lines
    (or a compact text form).
verify
    Run one named check or the whole registry; exit 0 only if all pass.
series
    Compare a series identity through a truncation order.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All
diagnostics go to stderr; identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, List, Optional

from .checks import check_ids, render_report, results_to_json, run_all, run_check
from .combinat import (
    CAPS as OBJECT_CAPS,
    list_partitions,
    permutations,
    signed_permutations,
    stirling_lists,
    stirling_permutations,
)
from .forests import CAPS as FOREST_CAPS, grow_forests
from .grammar import PRESETS, Grammar
from .normal_form import normal_order_power
from .poly import ParseError, Polynomial, parse, variable
from .series import verify_catalan_egf
from .triangles import FAMILIES, FAMILY_NAMES, family_row

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Invalid arguments beyond what argparse can see."""


def _parse_grammar(text: str) -> Grammar:
    if "->" in text:
        return Grammar.from_text(text)
    return Grammar.preset(text)


def _entry_str(value) -> str:
    if isinstance(value, Polynomial):
        return value.render()
    return str(value)


def _entry_json(value):
    if isinstance(value, Polynomial):
        return value.render()
    return value


# -- expand ----------------------------------------------------------------


def _cmd_expand(args: argparse.Namespace, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    grammar = _parse_grammar(args.grammar)
    w = parse(args.w)
    nf = normal_order_power(w, grammar, args.n)
    if args.at_d is not None:
        poly = nf.specialize(variable(args.at_d))
        if args.format == "json":
            print(json.dumps(poly.to_json_dict(), sort_keys=True), file=out)
        else:
            print(poly.render(), file=out)
        return 0
    if args.format == "json":
        print(json.dumps(nf.to_json_dict(), sort_keys=True), file=out)
    else:
        print(nf.render(), file=out)
    return 0


# -- triangle --------------------------------------------------------------


def _cmd_triangle(args: argparse.Namespace, out) -> int:
    spec = FAMILIES.get(args.family)
    if spec is None:
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(FAMILY_NAMES)}")
    if args.n < spec.start:
        raise UsageError(f"family {args.family!r} starts at n = {spec.start}")
    levels = range(spec.start, args.n + 1)
    if args.format == "csv":
        print("family,n,k,l,j,entry", file=out)
        for n in levels:
            row = family_row(args.family, n)
            for idx in sorted(row):
                value = row[idx]
                cells = {"k": "", "l": "", "j": ""}
                for name, i in zip(spec.indices, idx):
                    cells[name] = str(i)
                print(
                    f"{args.family},{n},{cells['k']},{cells['l']},{cells['j']},{_entry_str(value)}",
                    file=out,
                )
        return 0
    if args.format == "json":
        for n in levels:
            row = family_row(args.family, n)
            for idx in sorted(row):
                record = {
                    "family": args.family,
                    "n": n,
                    "index": {name: i for name, i in zip(spec.indices, idx)},
                    "entry": _entry_json(row[idx]),
                }
                print(json.dumps(record, sort_keys=True), file=out)
        return 0
    for n in levels:
        row = family_row(args.family, n)
        parts = []
        for idx in sorted(row):
            key = ",".join(str(i) for i in (n, *idx))
            parts.append(f"({key})={_entry_str(row[idx])}")
        print(",".join(parts), file=out)
    return 0


# -- enumerate -------------------------------------------------------------

_OBJECT_GENERATORS = {
    "permutations": permutations,
    "signed-permutations": signed_permutations,
    "stirling-permutations": stirling_permutations,
    "list-partitions": list_partitions,
    "stirling-lists": stirling_lists,
}

_OBJECT_CAP_KEYS = {
    "permutations": "permutations",
    "signed-permutations": "signed_permutations",
    "stirling-permutations": "stirling_permutations",
    "list-partitions": "list_partitions",
    "stirling-lists": "stirling_lists",
}

_FOREST_OBJECTS = {
    "binary-forests": "binary",
    "full-binary-forests": "full-binary",
    "ternary-forests": "ternary",
    "full-ternary-forests": "full-ternary",
}

OBJECT_NAMES = tuple(sorted(_OBJECT_GENERATORS)) + tuple(sorted(_FOREST_OBJECTS))


def _cmd_enumerate(args: argparse.Namespace, out) -> int:
    if args.format == "csv":
        raise UsageError("enumerate supports text and json output only")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    wanted: Optional[List[str]] = None
    if args.stats is not None:
        wanted = [s.strip() for s in args.stats.split(",") if s.strip()]
        if not wanted:
            raise UsageError("--stats must name at least one statistic")
    if args.objects in _FOREST_OBJECTS:
        flavor = _FOREST_OBJECTS[args.objects]
        cap = FOREST_CAPS[flavor]
        if args.n > cap:
            raise UsageError(f"{args.objects} is capped at n = {cap}")
        if wanted is not None:
            raise UsageError("--stats applies to statistic-bearing objects, not forests")
        for forest in grow_forests(flavor, args.n):
            if args.format == "json":
                record = {
                    "object": forest.encode(),
                    "trees": forest.k,
                    "leaves": dict(zip(("x", "y", "z"), forest.leaves)),
                }
                print(json.dumps(record, sort_keys=True), file=out)
            else:
                lx, ly, lz = forest.leaves
                print(
                    f"{forest.encode()} trees={forest.k} x={lx} y={ly} z={lz}",
                    file=out,
                )
        return 0
    gen = _OBJECT_GENERATORS[args.objects]
    cap = OBJECT_CAPS[_OBJECT_CAP_KEYS[args.objects]]
    if args.n > cap:
        raise UsageError(f"{args.objects} is capped at n = {cap}")
    first = True
    for record in gen(args.n):
        stats = record.stats
        if wanted is not None:
            if first:
                missing = [s for s in wanted if s not in stats]
                if missing:
                    known = ", ".join(sorted(stats))
                    raise UsageError(
                        f"unknown statistic(s) {', '.join(missing)}; known: {known}"
                    )
            stats = {s: stats[s] for s in wanted}
        first = False
        if args.format == "json":
            print(
                json.dumps({"object": record.object_id, "stats": stats}, sort_keys=True),
                file=out,
            )
        else:
            shown = " ".join(f"{s}={v}" for s, v in sorted(stats.items()))
            print(f"{record.object_id} {shown}".rstrip(), file=out)
    return 0


# -- verify ----------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace, out) -> int:
    if args.format == "csv":
        raise UsageError("verify supports text and json output only")
    try:
        if args.check is not None:
            results = [run_check(args.check, args.n_max)]
        else:
            if args.n_max is not None:
                raise UsageError("--n-max applies to a single --check run")
            results = run_all(args.profile)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]) if exc.args else str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(results_to_json(results), indent=2, sort_keys=True), file=out)
    else:
        print(render_report(results), file=out)
    return 0 if all(r.passed for r in results) else 1


# -- series ----------------------------------------------------------------


def _cmd_series(args: argparse.Namespace, out) -> int:
    if args.format == "csv":
        raise UsageError("series supports text and json output only")
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    try:
        report = verify_catalan_egf(args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        payload = {
            "identity": report.identity,
            "order": report.order,
            "matched": report.matched,
            "first_mismatch": report.first_mismatch,
        }
        if not report.matched:
            payload["lhs"] = report.lhs.render()
            payload["rhs"] = report.rhs.render()
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(report.render(), file=out)
    return 0 if report.matched else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normord",
        description="Normal ordering of grammar-induced derivative operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="normal-order a power of multiplier * derivative")
    p.add_argument("--w", required=True, help="multiplier polynomial, e.g. 'x' or 'x*y'")
    p.add_argument(
        "--grammar",
        required=True,
        help="inline rules 'x->y;y->y' or a preset name "
        f"({', '.join(sorted(PRESETS))})",
    )
    p.add_argument("--n", type=int, required=True, help="operator power")
    p.add_argument(
        "--at-d",
        metavar="SYMBOL",
        help="substitute this symbol for the derivative slot and print one polynomial",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("triangle", help="stream coefficient rows of a family")
    p.add_argument("--family", required=True, help=f"one of: {', '.join(FAMILY_NAMES)}")
    p.add_argument("--n", type=int, required=True, help="largest level to print")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("enumerate", help="stream combinatorial objects with statistics")
    p.add_argument("--objects", required=True, choices=OBJECT_NAMES)
    p.add_argument("--n", type=int, required=True, help="object size")
    p.add_argument("--stats", help="comma-separated subset of statistics to print")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the identity check registry")
    p.add_argument("--check", help=f"run one check id; known: {', '.join(check_ids())}")
    p.add_argument("--n-max", type=int, help="largest level for a single --check run")
    p.add_argument("--profile", choices=("quick", "full"), default="full")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("series", help="compare a series identity through an order")
    p.add_argument("--identity", choices=("catalan-egf",), default="catalan-egf")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_series)

    return parser


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
