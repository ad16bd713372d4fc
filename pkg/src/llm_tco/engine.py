"""Core cost model.

Hardware CapEx, monthly electricity OpEx, cumulative local cost, monthly
token capacity, and the equivalent API spend for the same token volume.
Everything is a pure function computed in exact rational arithmetic and
returned as exact decimals (see money.to_money for the rounding boundary).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

from .catalog import ApiOffering, DeploymentSpec
from .money import as_fraction, to_money

Months = Union[Decimal, Fraction, int]


class DomainError(ValueError):
    """An argument is outside the operation's domain."""


@dataclass(frozen=True)
class WorkloadProfile:
    """Operating assumptions: duty cycle, electricity price, token mix.

    Defaults are the reference workload: business hours (8 h/day,
    22 days/month), $0.15/kWh, and a 1:2 input:output token split.
    demand, when set, is the required tokens/month; when absent the
    deployment is assumed to run at capacity.
    """

    hours_per_day: Decimal = Decimal(8)
    days_per_month: Decimal = Decimal(22)
    electricity_rate: Decimal = Decimal("0.15")   # USD per kWh
    output_share: Fraction = Fraction(2, 3)
    demand: int | None = None                     # tokens per month

    def __post_init__(self):
        if not (0 < self.hours_per_day <= 24):
            raise DomainError(f"hours_per_day must be in (0, 24], got {self.hours_per_day}")
        if not (0 < self.days_per_month <= 31):
            raise DomainError(f"days_per_month must be in (0, 31], got {self.days_per_month}")
        if self.electricity_rate < 0:
            raise DomainError(f"electricity_rate must be >= 0, got {self.electricity_rate}")
        if not (0 < self.output_share < 1):
            raise DomainError(f"output_share must be in (0, 1), got {self.output_share}")
        if self.demand is not None and self.demand < 0:
            raise DomainError(f"demand must be >= 0, got {self.demand}")

    @property
    def hours_per_month(self) -> Decimal:
        return self.hours_per_day * self.days_per_month


def hardware_cost(spec: DeploymentSpec) -> Decimal:
    """One-time cost of the GPUs: count times unit price."""
    return to_money(spec.gpu_count * spec.gpu_sku.unit_price)


def electricity_monthly(spec: DeploymentSpec, w: WorkloadProfile) -> Decimal:
    """Monthly electricity spend using the accounting power draw.

    Watts are converted to kW before multiplying by hours.
    """
    kw = as_fraction(spec.gpu_sku.accounting_power) / 1000
    cost = spec.gpu_count * kw * as_fraction(w.hours_per_month) * as_fraction(w.electricity_rate)
    return to_money(cost)


def local_cumulative_cost(spec: DeploymentSpec, w: WorkloadProfile, months: Months) -> Decimal:
    """Hardware plus `months` of electricity; equals hardware_cost at 0."""
    m = _months(months)
    return to_money(as_fraction(hardware_cost(spec)) + as_fraction(electricity_monthly(spec, w)) * m)


def monthly_capacity(spec: DeploymentSpec, w: WorkloadProfile) -> int | Decimal:
    """Tokens the deployment can emit per month at full utilization."""
    cap = as_fraction(spec.throughput) * as_fraction(w.hours_per_month) * 3600
    if cap.denominator == 1:
        return cap.numerator
    return to_money(cap)


def api_monthly_cost(
    offering: ApiOffering,
    tokens_per_month: int | Decimal | Fraction,
    output_share: Fraction | Decimal,
) -> Decimal:
    """Blended monthly API spend for the given token volume.

    Input tokens are the complement of output_share; output tokens are
    priced at the accounting output price.
    """
    q = as_fraction(tokens_per_month)
    if q < 0:
        raise DomainError(f"tokens_per_month must be >= 0, got {tokens_per_month}")
    share = as_fraction(output_share)
    cost = (q * (1 - share) * as_fraction(offering.input_price)
            + q * share * as_fraction(offering.accounting_output_price)) / 10**6
    return to_money(cost)


def api_cumulative_cost(
    offering: ApiOffering,
    tokens_per_month: int | Decimal | Fraction,
    output_share: Fraction | Decimal,
    months: Months,
) -> Decimal:
    m = _months(months)
    return to_money(as_fraction(api_monthly_cost(offering, tokens_per_month, output_share)) * m)


def required_replicas(spec: DeploymentSpec, w: WorkloadProfile, demand: int) -> int:
    """Deployment copies needed to serve `demand` tokens per month."""
    if demand < 0:
        raise DomainError(f"demand must be >= 0, got {demand}")
    if demand == 0:
        return 0
    cap = as_fraction(monthly_capacity(spec, w))
    if cap == 0:
        raise DomainError("capacity is zero but demand is positive")
    return math.ceil(as_fraction(demand) / cap)


def _months(months: Months) -> Fraction:
    m = as_fraction(months)
    if m < 0:
        raise DomainError(f"months must be >= 0, got {months}")
    return m
