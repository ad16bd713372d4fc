"""Break-even and total-cost-of-ownership analysis for self-hosted LLM
serving versus commercial API subscriptions."""

from .breakeven import (
    BreakEvenResult,
    CostCurveSeries,
    DecisionTier,
    DisjointScoresError,
    PerformanceGap,
    ScenarioMatrix,
    Status,
    break_even_matrix,
    classify_tier,
    cost_curves,
    performance_gap,
    solve_break_even,
    sweep,
)
from .catalog import (
    ApiOffering,
    Catalog,
    CatalogConstraintError,
    CatalogError,
    CatalogParseError,
    CatalogReferenceError,
    DeploymentSpec,
    GpuSku,
    Violation,
    load_catalog,
    load_catalog_file,
    serialize_catalog,
    validate_catalog,
)
from .dataset import builtin_catalog
from .engine import (
    DomainError,
    WorkloadProfile,
    api_cumulative_cost,
    api_monthly_cost,
    electricity_monthly,
    hardware_cost,
    local_cumulative_cost,
    monthly_capacity,
    required_replicas,
)

__version__ = "0.1.0"

__all__ = [
    "ApiOffering",
    "BreakEvenResult",
    "Catalog",
    "CatalogConstraintError",
    "CatalogError",
    "CatalogParseError",
    "CatalogReferenceError",
    "CostCurveSeries",
    "DecisionTier",
    "DeploymentSpec",
    "DisjointScoresError",
    "DomainError",
    "GpuSku",
    "PerformanceGap",
    "ScenarioMatrix",
    "Status",
    "Violation",
    "WorkloadProfile",
    "api_cumulative_cost",
    "api_monthly_cost",
    "break_even_matrix",
    "builtin_catalog",
    "classify_tier",
    "cost_curves",
    "electricity_monthly",
    "hardware_cost",
    "load_catalog",
    "load_catalog_file",
    "local_cumulative_cost",
    "monthly_capacity",
    "performance_gap",
    "required_replicas",
    "serialize_catalog",
    "solve_break_even",
    "sweep",
    "validate_catalog",
]
