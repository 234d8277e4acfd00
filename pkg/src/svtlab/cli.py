"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 cap/budget refusal, 3 sentinel
failure (hlv/grade/MV returned False).  Errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import analysis, cache, cech, graphs
from .cech import EngineLimits
from .fields import FieldSpec
from .ideals import (
    CapExceededError,
    ContextMismatchError,
    IdealDomainError,
    SquareFreeIdeal,
    SquareFreeMonomial,
    VariableContext,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPS = 2
EXIT_SENTINEL = 3


class InputError(ValueError):
    pass


def parse_ideal_document(doc: dict) -> SquareFreeIdeal:
    """JSON schema: {"variables": [...], "ideal": {"generators": [[...]]}}
    or {"variables": [...], "ideal": {"intersection_of_primes": [[...]]}}."""
    try:
        context = VariableContext(tuple(doc["variables"]))
        spec = doc["ideal"]
        if "generators" in spec:
            return SquareFreeIdeal.from_variable_lists(context, spec["generators"])
        if "intersection_of_primes" in spec:
            return SquareFreeIdeal.intersection_of_primes(
                context, spec["intersection_of_primes"]
            )
        raise InputError(
            "ideal needs either 'generators' or 'intersection_of_primes'"
        )
    except CapExceededError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(str(e)) from e


def load_ideal(path: str) -> SquareFreeIdeal:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e
    return parse_ideal_document(doc)


def ideal_echo(I: SquareFreeIdeal) -> dict:
    return {
        "variables": list(I.context.names),
        "generators": I.generator_lists(),
    }


def _limits_from_args(args) -> EngineLimits:
    return EngineLimits(
        max_vars=args.max_vars,
        max_generators=args.max_generators,
        max_matrix_cells=args.cell_budget,
    )


def _emit(payload: dict, args):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _table_with_cache(I, field, limits, args):
    """(table, cache_state) honoring --no-cache and the cache directory."""
    if args.no_cache:
        return cech.local_cohomology_table(I, field, limits), "off"
    cache_dir = args.cache_dir or cache.default_cache_dir()
    hit = cache.lookup(cache_dir, I, field)
    if hit is not None:
        return hit, "hit"
    table = cech.local_cohomology_table(I, field, limits)
    cache.store(cache_dir, I, field, table)
    return table, "miss"


def cmd_analyze(args) -> int:
    I = load_ideal(args.input)
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    table, state = _table_with_cache(I, field, limits, args)
    report = analysis.svt_check(I, field, limits, table=table)
    report.cache_state = state
    payload = report.to_json()
    payload["sentinels"] = {
        "hlv": analysis.hlv_check(I, field, limits, table=table),
        "grade": analysis.grade_check(I, field, limits, table=table),
    }
    _emit(payload, args)
    if not all(payload["sentinels"].values()):
        return EXIT_SENTINEL
    return EXIT_OK


def cmd_cohomology(args) -> int:
    I = load_ideal(args.input)
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    table, state = _table_with_cache(I, field, limits, args)
    _emit(
        {
            "ideal": ideal_echo(I),
            "field": field.label(),
            "cache": state,
            "table": table.entries(),
        },
        args,
    )
    return EXIT_OK


def cmd_svt(args) -> int:
    I = load_ideal(args.input)
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    table, state = _table_with_cache(I, field, limits, args)
    report = analysis.svt_check(I, field, limits, table=table)
    report.cache_state = state
    payload = report.to_json()
    del payload["table"]
    _emit(payload, args)
    return EXIT_OK


def cmd_graph(args) -> int:
    I = load_ideal(args.input)
    G = graphs.theta_graph(I) if args.kind == "theta" else graphs.gamma_graph(I)
    dot = graphs.to_dot(G)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    _emit(
        {
            "ideal": ideal_echo(I),
            "kind": G.kind,
            "vertices": [p.label() for p in G.vertices],
            "edges": sorted([list(e) for e in G.edges]),
            "connected": graphs.is_connected(G),
        },
        args,
    )
    return EXIT_OK


def cmd_surjectivity(args) -> int:
    I = load_ideal(args.input)
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    names = [s for s in args.monomial.split(",") if s]
    if not names:
        raise InputError("--monomial needs at least one variable name")
    x = SquareFreeMonomial.from_names(I.context, names)
    table, state = _table_with_cache(I, field, limits, args)
    surjective = cech.is_multiplication_surjective(
        I, args.degree, x, field, limits, table=table
    )
    divisible = cech.is_divisible(I, args.degree, field, limits, table=table)
    _emit(
        {
            "ideal": ideal_echo(I),
            "field": field.label(),
            "cache": state,
            "degree": args.degree,
            "monomial": list(names),
            "surjective": surjective,
            "divisible": divisible,
        },
        args,
    )
    return EXIT_OK


def cmd_mv(args) -> int:
    I = load_ideal(args.input)
    J = load_ideal(args.second)
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    ok = analysis.mayer_vietoris_check(I, J, field, limits)
    _emit(
        {
            "first": ideal_echo(I),
            "second": ideal_echo(J),
            "field": field.label(),
            "mayer_vietoris_consistent": ok,
        },
        args,
    )
    return EXIT_OK if ok else EXIT_SENTINEL


def cmd_sweep(args) -> int:
    field = FieldSpec.parse(args.field)
    limits = _limits_from_args(args)
    summary = analysis.random_svt_sweep(
        args.vars, args.generator_bound, args.trials, args.seed, field, limits
    )
    payload = summary.to_json()
    if args.log:
        with open(args.log, "a") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")
    _emit(payload, args)
    return EXIT_OK if summary.failures == 0 else EXIT_SENTINEL


def cmd_cache(args) -> int:
    cache_dir = args.cache_dir or cache.default_cache_dir()
    if args.clear:
        removed = cache.clear(cache_dir)
        _emit({"dir": cache_dir, "removed": removed}, args)
    else:
        _emit(cache.stats(cache_dir), args)
    return EXIT_OK


def _add_common(p, with_field=True, with_cache=True):
    if with_field:
        p.add_argument(
            "--field",
            default="rationals",
            help="coefficient field: 'rationals' or a prime p",
        )
    p.add_argument("--output", help="write the JSON result here instead of stdout")
    p.add_argument("--max-vars", type=int, default=EngineLimits.max_vars)
    p.add_argument("--max-generators", type=int, default=EngineLimits.max_generators)
    p.add_argument("--cell-budget", type=int, default=EngineLimits.max_matrix_cells)
    if with_cache:
        p.add_argument("--cache-dir", help="cache directory (default: $SVTLAB_CACHE_DIR)")
        p.add_argument("--no-cache", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svtlab",
        description="graded local cohomology workbench for square-free monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report of one ideal")
    p.add_argument("--input", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cohomology", help="graded local cohomology table")
    p.add_argument("--input", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("svt", help="vanishing/connectedness verdicts only")
    p.add_argument("--input", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_svt)

    p = sub.add_parser("graph", help="theta or gamma connectivity graph")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", choices=["theta", "gamma"], required=True)
    p.add_argument("--dot", help="write a DOT file here")
    _add_common(p, with_field=False, with_cache=False)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("surjectivity", help="surjectivity of a monomial on H^i")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--monomial", required=True, help="comma-separated variable names")
    _add_common(p)
    p.set_defaults(func=cmd_surjectivity)

    p = sub.add_parser("mv", help="Mayer-Vietoris consistency for two ideals")
    p.add_argument("--input", required=True)
    p.add_argument("--second", required=True)
    _add_common(p, with_cache=False)
    p.set_defaults(func=cmd_mv)

    p = sub.add_parser("sweep", help="randomized vanishing-equivalence sweep")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--generator-bound", type=int, default=4)
    p.add_argument("--log", help="append the summary to this JSONL file")
    _add_common(p, with_cache=False)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cache", help="inspect or clear the table cache")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--clear", action="store_true")
    group.add_argument("--stats", action="store_true")
    p.add_argument("--cache-dir")
    p.add_argument("--output")
    p.set_defaults(func=cmd_cache)

    return parser


def _error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapExceededError as e:
        _error("cap_exceeded", str(e))
        return EXIT_CAPS
    except (InputError, IdealDomainError, ContextMismatchError, ValueError) as e:
        _error("input_error", str(e))
        return EXIT_INPUT
    except OSError as e:
        _error("io_error", str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
