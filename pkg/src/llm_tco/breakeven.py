"""Break-even analysis.

Solves for the month count at which cumulative local cost crosses
cumulative API spend, classifies the result into decision tiers, computes
benchmark-score gaps, and builds the full deployment x offering matrix,
cost-curve series, and single-parameter sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .catalog import ApiOffering, BENCHMARKS, Catalog, DeploymentSpec, replace_gpu_price
from .engine import (
    DomainError,
    WorkloadProfile,
    api_cumulative_cost,
    api_monthly_cost,
    electricity_monthly,
    hardware_cost,
    monthly_capacity,
    required_replicas,
)
from .money import as_fraction, to_money

# Decimal digits carried by reported break-even months; enough that the
# crossing residual is dominated by money quantization, not by t*.
_T_STAR_PRECISION = 28


class Status(str, Enum):
    IMMEDIATE = "immediate"
    BREAKS_EVEN = "breaks_even"
    NEVER = "never"


class DecisionTier(str, Enum):
    RAPID = "rapid"            # pays off within 6 months
    STRATEGIC = "strategic"    # 6 to 24 months
    CHALLENGING = "challenging"  # beyond 24 months

    @property
    def label(self) -> str:
        return self.value.capitalize()


def classify_tier(t_star: Decimal | Fraction | int) -> DecisionTier:
    t = as_fraction(t_star)
    if t < 0:
        raise DomainError(f"t_star must be >= 0, got {t_star}")
    if t <= 6:
        return DecisionTier.RAPID
    if t <= 24:
        return DecisionTier.STRATEGIC
    return DecisionTier.CHALLENGING


class DisjointScoresError(ValueError):
    """The two score sets share no benchmark."""


@dataclass(frozen=True)
class PerformanceGap:
    """Score deltas (open minus commercial) over the shared benchmarks."""

    per_benchmark: Mapping[str, Decimal]   # percentage points
    mean_delta: Decimal                    # arithmetic mean of the deltas


def performance_gap(open_scores: Mapping[str, Decimal],
                    commercial_scores: Mapping[str, Decimal]) -> PerformanceGap:
    shared = [b for b in BENCHMARKS if b in open_scores and b in commercial_scores]
    if not shared:
        raise DisjointScoresError("score sets share no benchmark")
    deltas = {b: open_scores[b] - commercial_scores[b] for b in shared}
    mean = Fraction(sum(as_fraction(d) for d in deltas.values()), len(shared))
    return PerformanceGap(per_benchmark=deltas, mean_delta=to_money(mean))


@dataclass(frozen=True)
class BreakEvenResult:
    deployment_id: str
    offering_id: str
    status: Status
    t_star: Decimal | None            # months; None iff status is NEVER
    tier: DecisionTier | None         # present iff t_star is present
    hardware: Decimal                 # USD, replica-scaled
    monthly_electricity: Decimal      # USD/month, replica-scaled
    monthly_api_cost: Decimal         # USD/month at the billed volume
    capacity: int | Decimal           # tokens/month actually billed
    replicas: int
    zero_hardware: bool               # degenerate flag: no CapEx to recoup
    gap: PerformanceGap | None


def solve_break_even(spec: DeploymentSpec, offering: ApiOffering,
                     w: WorkloadProfile) -> BreakEvenResult:
    """Find where cumulative local cost meets cumulative API spend.

    With demand set on the workload, hardware and electricity scale by the
    replica count needed to serve it and the API side is billed for the
    demanded tokens; otherwise the deployment runs at capacity.
    """
    cap = monthly_capacity(spec, w)
    if w.demand is not None:
        replicas = required_replicas(spec, w, w.demand)
        billed = min(w.demand, replicas * as_fraction(cap))
        billed = billed.numerator if billed.denominator == 1 else to_money(billed)
    else:
        replicas = 1
        billed = cap

    hw = to_money(replicas * as_fraction(hardware_cost(spec)))
    elec = to_money(replicas * as_fraction(electricity_monthly(spec, w)))
    api = api_monthly_cost(offering, billed, w.output_share)

    try:
        gap = performance_gap(spec.scores, offering.scores)
    except DisjointScoresError:
        gap = None

    common = dict(
        deployment_id=spec.id, offering_id=offering.id,
        hardware=hw, monthly_electricity=elec, monthly_api_cost=api,
        capacity=billed, replicas=replicas, zero_hardware=hw == 0, gap=gap,
    )
    if api <= elec:
        # the API line never climbs above the local line's slope
        return BreakEvenResult(status=Status.NEVER, t_star=None, tier=None, **common)
    if hw == 0:
        zero = Decimal(0)
        return BreakEvenResult(status=Status.IMMEDIATE, t_star=zero,
                               tier=classify_tier(zero), **common)
    t = as_fraction(hw) / (as_fraction(api) - as_fraction(elec))
    with localcontext() as ctx:
        ctx.prec = _T_STAR_PRECISION
        t_star = Decimal(t.numerator) / Decimal(t.denominator)
    return BreakEvenResult(status=Status.BREAKS_EVEN, t_star=t_star,
                           tier=classify_tier(t), **common)


@dataclass(frozen=True)
class MatrixRow:
    deployment_id: str
    cells: tuple[BreakEvenResult, ...]
    t_star_range: tuple[Decimal, Decimal] | None  # (min, max) over finite t*


@dataclass(frozen=True)
class ScenarioMatrix:
    deployment_ids: tuple[str, ...]
    offering_ids: tuple[str, ...]
    rows: tuple[MatrixRow, ...]
    workload: WorkloadProfile


def break_even_matrix(catalog: Catalog, w: WorkloadProfile) -> ScenarioMatrix:
    """One break-even cell per (deployment, offering) pair, in catalog order.

    Degenerate scenarios become never-with-flag cells; they never abort the
    matrix.
    """
    rows = []
    for spec in catalog.deployments:
        cells = tuple(solve_break_even(spec, off, w) for off in catalog.offerings)
        finite = [c.t_star for c in cells if c.t_star is not None]
        rng = (min(finite), max(finite)) if finite else None
        rows.append(MatrixRow(deployment_id=spec.id, cells=cells, t_star_range=rng))
    return ScenarioMatrix(
        deployment_ids=tuple(d.id for d in catalog.deployments),
        offering_ids=tuple(o.id for o in catalog.offerings),
        rows=tuple(rows),
        workload=w,
    )


@dataclass(frozen=True)
class CostCurveSeries:
    deployment_id: str
    offering_id: str
    horizon: Decimal
    step: Decimal
    points: tuple[tuple[Decimal, Decimal, Decimal], ...]  # (t, local, api)
    break_even_marker: Decimal | None


def cost_curves(spec: DeploymentSpec, offering: ApiOffering, w: WorkloadProfile,
                horizon: Decimal, step: Decimal) -> CostCurveSeries:
    """Cumulative cost samples at t = 0, step, 2*step, ..., horizon."""
    if horizon <= 0:
        raise DomainError(f"horizon must be > 0, got {horizon}")
    if not (0 < step <= horizon):
        raise DomainError(f"step must be in (0, horizon], got {step}")

    result = solve_break_even(spec, offering, w)
    billed = result.capacity

    ts: list[Decimal] = []
    k = 0
    while (t := step * k) <= horizon:
        ts.append(t)
        k += 1
    if ts[-1] != horizon:
        ts.append(horizon)

    points = tuple(
        (t,
         to_money(as_fraction(result.hardware) + as_fraction(result.monthly_electricity) * as_fraction(t)),
         api_cumulative_cost(offering, billed, w.output_share, t))
        for t in ts
    )
    marker = result.t_star if result.t_star is not None and result.t_star <= horizon else None
    return CostCurveSeries(
        deployment_id=spec.id, offering_id=offering.id,
        horizon=horizon, step=step, points=points, break_even_marker=marker,
    )


SWEEP_PARAMETERS = (
    "electricity_rate",
    "hours_per_day",
    "days_per_month",
    "output_share",
    "gpu_unit_price",
    "input_price",
    "output_price",
    "throughput",
)


def sweep(spec: DeploymentSpec, offering: ApiOffering, w: WorkloadProfile,
          parameter: str, grid: Sequence[Decimal]) -> list[tuple[Decimal, BreakEvenResult]]:
    """Re-solve the scenario at each grid value of a single parameter.

    All other parameters stay fixed; the input ordering is preserved.
    Sweeping output_price moves the accounting price with it.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise DomainError(f"unknown sweep parameter {parameter!r}")
    if not grid:
        raise DomainError("sweep grid is empty")

    out = []
    for value in grid:
        try:
            if parameter in ("electricity_rate", "hours_per_day", "days_per_month"):
                w2, s2, o2 = replace(w, **{parameter: value}), spec, offering
            elif parameter == "output_share":
                w2, s2, o2 = replace(w, output_share=as_fraction(value)), spec, offering
            elif parameter == "gpu_unit_price":
                if value < 0:
                    raise DomainError("unit_price must be >= 0")
                w2, s2, o2 = w, replace_gpu_price(spec, value), offering
            elif parameter == "throughput":
                if value <= 0:
                    raise DomainError("throughput must be > 0")
                w2, s2, o2 = w, replace(spec, throughput=value), offering
            elif parameter == "input_price":
                if value < 0:
                    raise DomainError("input_price must be >= 0")
                w2, s2, o2 = w, spec, replace(offering, input_price=value)
            else:  # output_price
                if value < 0:
                    raise DomainError("output_price must be >= 0")
                w2, s2, o2 = w, spec, replace(
                    offering, output_price=value, accounting_output_price=value)
        except DomainError as exc:
            raise DomainError(f"sweep value {value} for {parameter}: {exc}") from None
        out.append((value, solve_break_even(s2, o2, w2)))
    return out
