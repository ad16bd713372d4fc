"""Rendering of capacity tables, break-even matrices, curves, and sweeps.

Three formats: "paper" (aligned plain-text tables with display rounding),
"csv" (machine-readable, lossless at full precision), and "json"
(structured documents mirroring the in-memory types; shared verbatim with
the HTTP service).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from typing import Any, Iterable, Sequence

from . import jsondoc
from .breakeven import (
    BreakEvenResult,
    CostCurveSeries,
    ScenarioMatrix,
    Status,
)
from .catalog import Catalog
from .engine import WorkloadProfile, electricity_monthly, hardware_cost, monthly_capacity
from .money import MICRO, money_str, round_cents

FORMATS = ("paper", "csv", "json")
PRECISIONS = ("paper", "full")


@dataclass(frozen=True)
class RenderSpec:
    format: str = "paper"
    precision: str = "paper"
    columns: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.precision not in PRECISIONS:
            raise ValueError(f"unknown precision {self.precision!r}")


# --- display formatting -----------------------------------------------------

_CENT = Decimal("0.01")
_TENTH = Decimal("0.1")


def format_months(t: Decimal) -> str:
    """Month figures at display precision.

    Values settle onto the cent grid first (half-up), then onto tenths the
    way a tenths-formatted binary double lands there; sub-3-month figures
    between 2 and 3 keep the cent grid when tenth-rounding would move them
    by 0.04 or more. This matches the display precision of the reference
    tables the bundled catalog reproduces, including their half-tick
    quirks.
    """
    q2 = t.quantize(_CENT, rounding=ROUND_HALF_UP)
    tenth = f"{float(q2):.1f}"
    if Decimal(2) <= q2 < Decimal(3) and abs(q2 - Decimal(tenth)) >= Decimal("0.04"):
        return str(q2)
    return tenth


def format_gap(mean_delta: Decimal) -> str:
    """Signed percentage-point delta at two decimals, e.g. "+0.45%"."""
    q = mean_delta.quantize(_CENT, rounding=ROUND_HALF_UP)
    sign = "+" if q >= 0 else ""
    return f"{sign}{q}%"


def format_usd_cents(value: Decimal) -> str:
    return f"${round_cents(value)}"


def format_usd_k(value: Decimal) -> str:
    """Thousands shorthand for hardware: 240000 -> "$240k"."""
    return f"${format_plain(value / 1000)}k"


def format_tokens_millions(tokens: int | Decimal) -> str:
    millions = (Decimal(tokens) / 10**6).quantize(_TENTH, rounding=ROUND_HALF_UP)
    return f"{millions}M"


def format_plain(value: Decimal | int) -> str:
    """Minimal decimal text: no exponent, no trailing zeros."""
    text = format(Decimal(value), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"


def format_money_machine(value: Decimal) -> str:
    """At least micro-dollar precision, never truncating real digits."""
    quantized = value.quantize(MICRO, rounding=ROUND_HALF_UP)
    return str(quantized) if quantized == value else str(value)


def describe_workload(w: WorkloadProfile) -> str:
    parts = [
        f"{format_plain(w.hours_per_day)} h/day x {format_plain(w.days_per_month)} days/month"
        f" ({format_plain(w.hours_per_month)} h)",
        f"electricity ${w.electricity_rate}/kWh",
        f"output share {w.output_share}",
    ]
    if w.demand is not None:
        parts.append(f"demand {w.demand} tokens/month")
    return ", ".join(parts)


def _table(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    all_rows = [list(headers)] + [list(r) for r in rows]
    widths = [max(len(row[i]) for row in all_rows) for i in range(len(headers))]
    lines = []
    for row in all_rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(row)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _csv_line(fields: Iterable[str]) -> str:
    return ",".join(fields)


# --- capacity table ---------------------------------------------------------

_CAPACITY_COLUMNS = ("hardware", "electricity", "throughput", "capacity")


def render_capacity_table(catalog: Catalog, w: WorkloadProfile, r: RenderSpec) -> str:
    """One row per deployment: hardware cost, monthly electricity,
    throughput, and monthly token capacity, in catalog order."""
    columns = r.columns or _CAPACITY_COLUMNS
    rows = []
    for spec in catalog.deployments:
        hw = hardware_cost(spec)
        elec = electricity_monthly(spec, w)
        cap = monthly_capacity(spec, w)
        rows.append((spec, hw, elec, cap))

    if r.format == "paper":
        headed = {
            "hardware": "hardware",
            "electricity": "electricity/mo",
            "throughput": "tokens/sec",
            "capacity": "capacity/mo",
        }
        body = []
        for spec, hw, elec, cap in rows:
            cells = {
                "hardware": format_usd_k(hw),
                "electricity": format_usd_cents(elec),
                "throughput": format_plain(spec.throughput),
                "capacity": format_tokens_millions(cap),
            }
            body.append([spec.name] + [cells[c] for c in columns])
        title = f"capacity and cost summary ({describe_workload(w)})"
        table = _table(["model"] + [headed[c] for c in columns], body)
        return f"{title}\n\n{table}\n"

    if r.format == "csv":
        full = r.precision == "full"
        header = ["deployment_id", "name"] + [
            {"hardware": "hardware_usd", "electricity": "electricity_usd_per_month",
             "throughput": "throughput_tokens_per_sec",
             "capacity": "capacity_tokens_per_month"}[c]
            for c in columns
        ]
        lines = [_csv_line(header)]
        for spec, hw, elec, cap in rows:
            cells = {
                "hardware": format_money_machine(hw) if full else str(round_cents(hw)),
                "electricity": format_money_machine(elec) if full else str(round_cents(elec)),
                "throughput": format_plain(spec.throughput),
                "capacity": format_plain(cap),
            }
            lines.append(_csv_line([spec.id, spec.name] + [cells[c] for c in columns]))
        return "\n".join(lines) + "\n"

    doc = {
        "schema_version": catalog.schema_version,
        "workload": workload_document(w),
        "rows": [
            {
                "deployment_id": spec.id,
                "name": spec.name,
                "hardware": money_str(hw),
                "electricity_per_month": money_str(elec),
                "throughput_tokens_per_sec": jsondoc.RawNumber(spec.throughput),
                "capacity_tokens_per_month": _token_number(cap),
            }
            for spec, hw, elec, cap in rows
        ],
    }
    return jsondoc.dumps(doc)


def parse_capacity_csv(text: str) -> list[dict[str, Any]]:
    lines = [line for line in text.splitlines() if line]
    header = lines[0].split(",")
    out = []
    for line in lines[1:]:
        fields = dict(zip(header, line.split(",")))
        out.append({
            "deployment_id": fields["deployment_id"],
            "name": fields["name"],
            "hardware": Decimal(fields["hardware_usd"]),
            "electricity": Decimal(fields["electricity_usd_per_month"]),
            "throughput": Decimal(fields["throughput_tokens_per_sec"]),
            "capacity": Decimal(fields["capacity_tokens_per_month"]),
        })
    return out


# --- break-even matrix ------------------------------------------------------

def _cell_text(cell: BreakEvenResult) -> str:
    if cell.status is Status.NEVER:
        text = "never"
    else:
        text = format_months(cell.t_star)
    if cell.gap is not None:
        text += f" ({format_gap(cell.gap.mean_delta)})"
    return text


def format_range(rng: tuple[Decimal, Decimal] | None) -> str:
    if rng is None:
        return "never"
    return f"{format_months(rng[0])}-{format_months(rng[1])}"


def render_breakeven_matrix(matrix: ScenarioMatrix, r: RenderSpec,
                            offering_names: dict[str, str] | None = None,
                            deployment_names: dict[str, str] | None = None) -> str:
    """Rows are deployments, columns are offerings plus the per-row range."""
    offering_names = offering_names or {}
    deployment_names = deployment_names or {}
    offering_ids = [o for o in matrix.offering_ids
                    if r.columns is None or o in r.columns]

    if r.format == "paper":
        headers = ["model"] + [offering_names.get(o, o) for o in offering_ids] + ["range"]
        body = []
        for row in matrix.rows:
            cells = [c for c in row.cells if c.offering_id in offering_ids]
            body.append([deployment_names.get(row.deployment_id, row.deployment_id)]
                        + [_cell_text(c) for c in cells]
                        + [format_range(row.t_star_range)])
        title = f"break-even months by model and offering ({describe_workload(matrix.workload)})"
        return f"{title}\n\n{_table(headers, body)}\n"

    if r.format == "csv":
        full = r.precision == "full"
        lines = [_csv_line(SCENARIO_CSV_HEADER)]
        for row in matrix.rows:
            lines.extend(_csv_line(scenario_csv_row(cell, full))
                         for cell in row.cells if cell.offering_id in offering_ids)
        return "\n".join(lines) + "\n"

    return jsondoc.dumps(matrix_document(matrix))


SCENARIO_CSV_HEADER = (
    "deployment_id", "offering_id", "status", "t_star", "tier",
    "hardware_usd", "monthly_electricity_usd", "monthly_api_cost_usd",
    "capacity_tokens_per_month", "replicas", "zero_hardware",
    "mean_gap_pp", "per_benchmark_gaps",
)


def scenario_csv_row(cell: BreakEvenResult, full: bool) -> list[str]:
    if cell.t_star is None:
        t_text = ""
    elif full:
        t_text = str(cell.t_star)
    else:
        t_text = format_months(cell.t_star)
    money = format_money_machine if full else (lambda v: str(round_cents(v)))
    gaps = ""
    mean = ""
    if cell.gap is not None:
        mean = str(cell.gap.mean_delta) if full \
            else str(cell.gap.mean_delta.quantize(_CENT, rounding=ROUND_HALF_UP))
        gaps = ";".join(f"{b}:{format_plain(d)}"
                        for b, d in cell.gap.per_benchmark.items())
    return [
        cell.deployment_id, cell.offering_id, cell.status.value, t_text,
        cell.tier.value if cell.tier is not None else "",
        money(cell.hardware), money(cell.monthly_electricity),
        money(cell.monthly_api_cost), format_plain(cell.capacity),
        str(cell.replicas), str(cell.zero_hardware).lower(), mean, gaps,
    ]


def render_scenario_csv(cell: BreakEvenResult, r: RenderSpec) -> str:
    """Single-scenario result as one CSV data row (matrix-cell columns)."""
    return (_csv_line(SCENARIO_CSV_HEADER) + "\n"
            + _csv_line(scenario_csv_row(cell, r.precision == "full")) + "\n")


def parse_matrix_csv(text: str) -> list[dict[str, Any]]:
    lines = [line for line in text.splitlines() if line]
    header = lines[0].split(",")
    out = []
    for line in lines[1:]:
        fields = dict(zip(header, line.split(",")))
        gaps = {}
        if fields["per_benchmark_gaps"]:
            for pair in fields["per_benchmark_gaps"].split(";"):
                bench, delta = pair.split(":")
                gaps[bench] = Decimal(delta)
        out.append({
            "deployment_id": fields["deployment_id"],
            "offering_id": fields["offering_id"],
            "status": fields["status"],
            "t_star": Decimal(fields["t_star"]) if fields["t_star"] else None,
            "tier": fields["tier"] or None,
            "hardware": Decimal(fields["hardware_usd"]),
            "monthly_electricity": Decimal(fields["monthly_electricity_usd"]),
            "monthly_api_cost": Decimal(fields["monthly_api_cost_usd"]),
            "capacity": Decimal(fields["capacity_tokens_per_month"]),
            "replicas": int(fields["replicas"]),
            "zero_hardware": fields["zero_hardware"] == "true",
            "mean_gap": Decimal(fields["mean_gap_pp"]) if fields["mean_gap_pp"] else None,
            "per_benchmark_gaps": gaps,
        })
    return out


# --- cost curves ------------------------------------------------------------

def render_curves(series: CostCurveSeries, r: RenderSpec) -> str:
    if r.format == "paper":
        headers = ["months", "local cost", "api cost"]
        body = [[format_plain(t), format_usd_cents(local), format_usd_cents(api)]
                for t, local, api in series.points]
        title = (f"cumulative cost, {series.deployment_id} vs {series.offering_id}"
                 f" (horizon {format_plain(series.horizon)}, step {format_plain(series.step)})")
        text = f"{title}\n\n{_table(headers, body)}\n"
        if series.break_even_marker is not None:
            text += f"\nbreak-even at {format_months(series.break_even_marker)} months\n"
        return text

    if r.format == "csv":
        full = r.precision == "full"
        lines = [_csv_line(["t", "local_cost", "api_cost"])]
        for t, local, api in series.points:
            if full:
                lines.append(_csv_line([format_plain(t), format_money_machine(local),
                                        format_money_machine(api)]))
            else:
                lines.append(_csv_line([format_plain(t), str(round_cents(local)),
                                        str(round_cents(api))]))
        if series.break_even_marker is not None:
            marker = str(series.break_even_marker) if full \
                else str(series.break_even_marker.quantize(Decimal("0.001"),
                                                           rounding=ROUND_HALF_UP))
            lines.append(_csv_line(["break_even", marker]))
        return "\n".join(lines) + "\n"

    return jsondoc.dumps(curves_document(series))


def parse_curves_csv(text: str) -> dict[str, Any]:
    lines = [line for line in text.splitlines() if line]
    points = []
    marker = None
    for line in lines[1:]:
        fields = line.split(",")
        if fields[0] == "break_even":
            marker = Decimal(fields[1])
        else:
            points.append((Decimal(fields[0]), Decimal(fields[1]), Decimal(fields[2])))
    return {"points": points, "break_even_marker": marker}


# --- sweeps -----------------------------------------------------------------

def render_sweep(parameter: str, results: list[tuple[Decimal, BreakEvenResult]],
                 w: WorkloadProfile, r: RenderSpec) -> str:
    if r.format == "paper":
        headers = [parameter, "t*", "tier", "monthly api cost", "status"]
        body = []
        for value, cell in results:
            body.append([
                format_plain(value),
                format_months(cell.t_star) if cell.t_star is not None else "never",
                cell.tier.label if cell.tier else "",
                format_usd_cents(cell.monthly_api_cost),
                cell.status.value,
            ])
        title = f"sweep of {parameter} ({describe_workload(w)})"
        return f"{title}\n\n{_table(headers, body)}\n"

    if r.format == "csv":
        full = r.precision == "full"
        lines = [_csv_line(["value", "status", "t_star", "tier", "monthly_api_cost_usd"])]
        for value, cell in results:
            if cell.t_star is None:
                t_text = ""
            else:
                t_text = str(cell.t_star) if full else format_months(cell.t_star)
            money = format_money_machine(cell.monthly_api_cost) if full \
                else str(round_cents(cell.monthly_api_cost))
            lines.append(_csv_line([
                format_plain(value), cell.status.value, t_text,
                cell.tier.value if cell.tier else "", money,
            ]))
        return "\n".join(lines) + "\n"

    doc = {
        "schema_version": 1,
        "workload": workload_document(w),
        "parameter": parameter,
        "results": [
            {"value": jsondoc.RawNumber(value), "scenario": scenario_document(cell)}
            for value, cell in results
        ],
    }
    return jsondoc.dumps(doc)


# --- structured documents (shared with the HTTP service) --------------------

def _token_number(tokens: int | Decimal) -> Any:
    return tokens if isinstance(tokens, int) else jsondoc.RawNumber(tokens)


def workload_document(w: WorkloadProfile) -> dict[str, Any]:
    return {
        "hours_per_day": jsondoc.RawNumber(w.hours_per_day),
        "days_per_month": jsondoc.RawNumber(w.days_per_month),
        "hours_per_month": jsondoc.RawNumber(w.hours_per_month),
        "electricity_rate": str(w.electricity_rate),
        "output_share": w.output_share,
        "demand": w.demand,
    }


def scenario_document(result: BreakEvenResult) -> dict[str, Any]:
    gap = None
    if result.gap is not None:
        gap = {
            "per_benchmark": {b: str(d) for b, d in result.gap.per_benchmark.items()},
            "mean_delta": str(result.gap.mean_delta),
        }
    return {
        "deployment_id": result.deployment_id,
        "offering_id": result.offering_id,
        "status": result.status.value,
        "t_star": str(result.t_star) if result.t_star is not None else None,
        "tier": result.tier.value if result.tier is not None else None,
        "hardware": money_str(result.hardware),
        "monthly_electricity": money_str(result.monthly_electricity),
        "monthly_api_cost": money_str(result.monthly_api_cost),
        "capacity_tokens_per_month": _token_number(result.capacity),
        "replicas": result.replicas,
        "zero_hardware": result.zero_hardware,
        "gap": gap,
        "display": {
            "t_star": format_months(result.t_star) if result.t_star is not None else "never",
            "tier": result.tier.label if result.tier is not None else None,
            "mean_gap": format_gap(result.gap.mean_delta) if result.gap is not None else None,
        },
    }


def curves_document(series: CostCurveSeries) -> dict[str, Any]:
    return {
        "deployment_id": series.deployment_id,
        "offering_id": series.offering_id,
        "horizon": jsondoc.RawNumber(series.horizon),
        "step": jsondoc.RawNumber(series.step),
        "break_even_marker": (str(series.break_even_marker)
                              if series.break_even_marker is not None else None),
        "points": [
            {"t": jsondoc.RawNumber(t), "local_cost": money_str(local), "api_cost": money_str(api)}
            for t, local, api in series.points
        ],
    }


def matrix_document(matrix: ScenarioMatrix) -> dict[str, Any]:
    return {
        "schema_version": 1,
        "workload": workload_document(matrix.workload),
        "deployment_ids": list(matrix.deployment_ids),
        "offering_ids": list(matrix.offering_ids),
        "rows": [
            {
                "deployment_id": row.deployment_id,
                "cells": [scenario_document(c) for c in row.cells],
                "t_star_range": (
                    {"min": str(row.t_star_range[0]), "max": str(row.t_star_range[1])}
                    if row.t_star_range is not None else None),
                "display_range": format_range(row.t_star_range),
            }
            for row in matrix.rows
        ],
    }
