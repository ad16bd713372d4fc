"""Command-line interface.

Subcommands: catalog, capacity, breakeven, matrix, curves, sweep, serve.
Results go to stdout, diagnostics to stderr. Exit codes: 0 on success,
1 on domain or validation errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .breakeven import (
    SWEEP_PARAMETERS,
    break_even_matrix,
    cost_curves,
    solve_break_even,
    sweep,
)
from .catalog import Catalog, CatalogError, load_catalog_file, serialize_catalog, validate_catalog
from .dataset import builtin_catalog
from .engine import DomainError, WorkloadProfile
from .money import money_str, to_money
from .reporting import (
    RenderSpec,
    render_scenario_csv,
    describe_workload,
    render_breakeven_matrix,
    render_capacity_table,
    render_curves,
    render_sweep,
    scenario_document,
    workload_document,
)
from . import jsondoc

CATALOG_ENV_VAR = "LLM_TCO_CATALOG"


def _decimal_arg(text: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _add_catalog_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builtin", action="store_true",
                   help="use the bundled reference catalog")
    p.add_argument("--catalog", metavar="PATH",
                   help=f"catalog JSON file (default: ${CATALOG_ENV_VAR}, "
                        "then the bundled catalog)")


def _add_workload_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hours-per-day", type=_decimal_arg, default=Decimal(8))
    p.add_argument("--days-per-month", type=_decimal_arg, default=Decimal(22))
    p.add_argument("--electricity-rate", type=_decimal_arg, default=Decimal("0.15"),
                   help="USD per kWh")
    p.add_argument("--output-share", type=_fraction_arg, default=Fraction(2, 3),
                   help="fraction of tokens that are output, e.g. 2/3 or 0.5")
    p.add_argument("--demand", type=int, default=None,
                   help="required tokens per month (default: run at capacity)")


def _add_render_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("paper", "csv", "json"), default="paper")
    p.add_argument("--precision", choices=("paper", "full"), default="paper")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="llm-tco",
        description="Break-even analysis of self-hosted LLM serving vs commercial APIs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="inspect and validate a catalog")
    p.add_argument("path", nargs="?", help="catalog JSON file")
    _add_catalog_flags(p)
    p.add_argument("--validate", action="store_true", help="print the violation count")
    p.add_argument("--format", choices=("paper", "json"), default="paper")

    p = sub.add_parser("capacity", help="hardware, electricity, and capacity per deployment")
    _add_catalog_flags(p)
    _add_workload_flags(p)
    _add_render_flags(p)

    p = sub.add_parser("breakeven", help="single-scenario break-even report")
    p.add_argument("--model", required=True, metavar="ID")
    p.add_argument("--api", required=True, metavar="ID")
    _add_catalog_flags(p)
    _add_workload_flags(p)
    _add_render_flags(p)

    p = sub.add_parser("matrix", help="full deployment x offering break-even matrix")
    _add_catalog_flags(p)
    _add_workload_flags(p)
    _add_render_flags(p)

    p = sub.add_parser("curves", help="cumulative cost series for one scenario")
    p.add_argument("--model", required=True, metavar="ID")
    p.add_argument("--api", required=True, metavar="ID")
    p.add_argument("--horizon", type=_decimal_arg, required=True, help="months")
    p.add_argument("--step", type=_decimal_arg, required=True, help="months")
    _add_catalog_flags(p)
    _add_workload_flags(p)
    _add_render_flags(p)

    p = sub.add_parser("sweep", help="re-solve a scenario over a parameter grid")
    p.add_argument("--model", required=True, metavar="ID")
    p.add_argument("--api", required=True, metavar="ID")
    p.add_argument("--param", required=True, choices=SWEEP_PARAMETERS)
    p.add_argument("--from", dest="start", type=_decimal_arg, required=True)
    p.add_argument("--to", dest="stop", type=_decimal_arg, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    _add_catalog_flags(p)
    _add_workload_flags(p)
    _add_render_flags(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--cors-origin", action="append", default=None,
                   metavar="ORIGIN", help="allowed CORS origin (repeatable; default *)")
    _add_catalog_flags(p)

    return parser


def _load(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Catalog:
    path = getattr(args, "path", None) or args.catalog
    if path and args.builtin:
        parser.error("--builtin conflicts with an explicit catalog path")
    if args.builtin:
        return builtin_catalog()
    if not path:
        path = os.environ.get(CATALOG_ENV_VAR)
    if not path:
        return builtin_catalog()
    return load_catalog_file(path)


def _workload(args: argparse.Namespace, parser: argparse.ArgumentParser) -> WorkloadProfile:
    try:
        return WorkloadProfile(
            hours_per_day=args.hours_per_day,
            days_per_month=args.days_per_month,
            electricity_rate=args.electricity_rate,
            output_share=args.output_share,
            demand=args.demand,
        )
    except DomainError as exc:
        parser.error(str(exc))  # exits 2


def _render_spec(args: argparse.Namespace) -> RenderSpec:
    return RenderSpec(format=args.format, precision=getattr(args, "precision", "paper"))


def _emit_workload_note(w: WorkloadProfile, fmt: str) -> None:
    # paper output embeds the workload in the document header; machine
    # formats get it as a diagnostic so the payload stays parseable
    if fmt != "paper":
        print(f"workload: {describe_workload(w)}", file=sys.stderr)


def _names(catalog: Catalog) -> tuple[dict, dict]:
    return ({o.id: o.name for o in catalog.offerings},
            {d.id: d.name for d in catalog.deployments})


def _cmd_catalog(args, parser) -> int:
    catalog = _load(args, parser)
    violations = validate_catalog(catalog)
    if args.format == "json":
        print(serialize_catalog(catalog), end="")
    else:
        print(f"catalog: schema v{catalog.schema_version}, {len(catalog.gpus)} gpus, "
              f"{len(catalog.deployments)} deployments, {len(catalog.offerings)} offerings")
        for group, items in (("gpus", catalog.gpus), ("deployments", catalog.deployments),
                             ("offerings", catalog.offerings)):
            names = ", ".join(item.id for item in items)
            print(f"  {group}: {names if names else '(none)'}")
    if args.validate or violations:
        print(f"{len(violations)} violations")
        for v in violations:
            print(f"  {v}", file=sys.stderr)
    return 1 if violations else 0


def _cmd_capacity(args, parser) -> int:
    catalog = _load(args, parser)
    w = _workload(args, parser)
    _emit_workload_note(w, args.format)
    print(render_capacity_table(catalog, w, _render_spec(args)), end="")
    return 0


def _scenario(args, parser, catalog: Catalog):
    try:
        spec = catalog.deployment(args.model)
    except KeyError:
        raise DomainError(f"unknown model id: {args.model}")
    try:
        offering = catalog.offering(args.api)
    except KeyError:
        raise DomainError(f"unknown api id: {args.api}")
    return spec, offering


def _cmd_breakeven(args, parser) -> int:
    catalog = _load(args, parser)
    w = _workload(args, parser)
    spec, offering = _scenario(args, parser, catalog)
    result = solve_break_even(spec, offering, w)
    if args.format == "json":
        doc = {"schema_version": 1, "workload": workload_document(w),
               "scenario": scenario_document(result)}
        print(jsondoc.dumps(doc), end="")
        return 0
    if args.format == "csv":
        _emit_workload_note(w, args.format)
        print(render_scenario_csv(result, _render_spec(args)), end="")
        return 0
    doc = scenario_document(result)
    print(f"workload: {describe_workload(w)}")
    print(f"scenario: {spec.name} vs {offering.name}")
    print(f"hardware             ${money_str(result.hardware)}")
    print(f"monthly electricity  ${money_str(result.monthly_electricity)}")
    print(f"monthly api cost     ${money_str(result.monthly_api_cost)}")
    print(f"capacity             {result.capacity} tokens/month"
          + (f" ({result.replicas} replicas)" if result.replicas != 1 else ""))
    print(f"status               {result.status.value}")
    if result.t_star is not None:
        print(f"t*                   {doc['display']['t_star']} months")
        print(f"tier                 {result.tier.label}")
    else:
        note = " (no hardware outlay to recoup)" if result.zero_hardware else ""
        print(f"t*                   never{note}")
    if result.gap is not None:
        detail = ", ".join(f"{b} {'+' if d >= 0 else ''}{d}"
                           for b, d in result.gap.per_benchmark.items())
        print(f"gap                  {doc['display']['mean_gap']} ({detail})")
    return 0


def _cmd_matrix(args, parser) -> int:
    catalog = _load(args, parser)
    w = _workload(args, parser)
    matrix = break_even_matrix(catalog, w)
    _emit_workload_note(w, args.format)
    offering_names, deployment_names = _names(catalog)
    print(render_breakeven_matrix(matrix, _render_spec(args),
                                  offering_names, deployment_names), end="")
    return 0


def _cmd_curves(args, parser) -> int:
    catalog = _load(args, parser)
    w = _workload(args, parser)
    spec, offering = _scenario(args, parser, catalog)
    series = cost_curves(spec, offering, w, args.horizon, args.step)
    _emit_workload_note(w, args.format)
    print(render_curves(series, _render_spec(args)), end="")
    return 0


def _cmd_sweep(args, parser) -> int:
    catalog = _load(args, parser)
    w = _workload(args, parser)
    spec, offering = _scenario(args, parser, catalog)
    grid = _grid(args.start, args.stop, args.steps)
    results = sweep(spec, offering, w, args.param, grid)
    _emit_workload_note(w, args.format)
    print(render_sweep(args.param, results, w, _render_spec(args)), end="")
    return 0


def _grid(start: Decimal, stop: Decimal, steps: int) -> list[Decimal]:
    if steps == 1:
        return [start]
    from fractions import Fraction as F
    pitch = (F(stop) - F(start)) / (steps - 1)
    return [to_money(F(start) + pitch * i) for i in range(steps)]


def _cmd_serve(args, parser) -> int:
    import uvicorn

    from .service import create_app

    catalog = _load(args, parser)
    app = create_app(catalog, cors_origins=args.cors_origin or ["*"])
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "catalog": _cmd_catalog,
    "capacity": _cmd_capacity,
    "breakeven": _cmd_breakeven,
    "matrix": _cmd_matrix,
    "curves": _cmd_curves,
    "sweep": _cmd_sweep,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except (CatalogError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
