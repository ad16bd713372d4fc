"""Catalog data model: GPUs, open-model deployments, API offerings, scores.

A catalog is loaded from a JSON document, fully validated, and immutable
afterwards. Loading is all-or-nothing: any violation aborts the load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Iterable, Mapping

from . import jsondoc

SCHEMA_VERSION = 1

# Canonical benchmark order; score maps may cover any subset.
BENCHMARKS = ("GPQA", "MATH-500", "LiveCodeBench", "MMLU-Pro")

SIZE_CLASSES = ("Large", "Medium", "Small")


class CatalogError(Exception):
    """Base class for catalog loading and validation failures."""


class CatalogParseError(CatalogError):
    """Malformed document; carries the offending field path when known."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class CatalogReferenceError(CatalogError):
    """A deployment references a GPU id that is not in the catalog."""


class CatalogConstraintError(CatalogError):
    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        lines = "; ".join(str(v) for v in violations)
        super().__init__(f"catalog constraint violations: {lines}")


@dataclass(frozen=True)
class Violation:
    record_id: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.record_id}: {self.rule} ({self.message})"


@dataclass(frozen=True)
class GpuSku:
    id: str
    name: str
    vram: Decimal               # GB
    rated_power: Decimal        # watts, as listed on the spec sheet
    accounting_power: Decimal   # watts, the value used in cost arithmetic
    unit_price: Decimal         # USD


@dataclass(frozen=True)
class DeploymentSpec:
    id: str
    name: str
    size_class: str             # Large | Medium | Small
    is_moe: bool
    total_params: Decimal       # billions
    active_params: Decimal      # billions
    vram_required: Decimal      # GB
    gpu_sku: GpuSku
    gpu_count: int
    throughput: Decimal         # tokens/second
    scores: Mapping[str, Decimal] = field(default_factory=dict)


@dataclass(frozen=True)
class ApiOffering:
    id: str
    provider: str
    name: str
    input_price: Decimal             # USD per 1M tokens, as listed
    output_price: Decimal            # USD per 1M tokens, as listed
    accounting_output_price: Decimal  # USD per 1M tokens, used in arithmetic
    scores: Mapping[str, Decimal] = field(default_factory=dict)


@dataclass(frozen=True)
class Catalog:
    schema_version: int
    gpus: tuple[GpuSku, ...]
    deployments: tuple[DeploymentSpec, ...]
    offerings: tuple[ApiOffering, ...]

    def gpu(self, gpu_id: str) -> GpuSku:
        return _by_id(self.gpus, gpu_id, "gpu")

    def deployment(self, deployment_id: str) -> DeploymentSpec:
        return _by_id(self.deployments, deployment_id, "deployment")

    def offering(self, offering_id: str) -> ApiOffering:
        return _by_id(self.offerings, offering_id, "offering")


def _by_id(items: Iterable, item_id: str, kind: str):
    for item in items:
        if item.id == item_id:
            return item
    raise KeyError(f"unknown {kind} id: {item_id}")


# --- validation -------------------------------------------------------------

def _check_scores(record_id: str, scores: Mapping[str, Decimal], out: list[Violation]) -> None:
    for bench, score in scores.items():
        if bench not in BENCHMARKS:
            out.append(Violation(record_id, "known benchmark", f"unexpected benchmark {bench!r}"))
        elif not (0 <= score <= 100):
            out.append(Violation(record_id, "score in [0, 100]", f"{bench} = {score}"))


def validate_catalog(catalog: Catalog) -> list[Violation]:
    """Return all invariant violations; an empty list means the catalog is valid."""
    out: list[Violation] = []

    for kind, items in (("gpu", catalog.gpus),
                        ("deployment", catalog.deployments),
                        ("offering", catalog.offerings)):
        seen: set[str] = set()
        for item in items:
            if item.id in seen:
                out.append(Violation(item.id, "unique id", f"duplicate {kind} id"))
            seen.add(item.id)

    for gpu in catalog.gpus:
        if gpu.vram <= 0:
            out.append(Violation(gpu.id, "vram > 0", f"vram = {gpu.vram}"))
        if gpu.rated_power <= 0:
            out.append(Violation(gpu.id, "rated_power > 0", f"rated_power = {gpu.rated_power}"))
        if gpu.accounting_power <= 0:
            out.append(Violation(gpu.id, "accounting_power > 0",
                                 f"accounting_power = {gpu.accounting_power}"))
        if gpu.unit_price < 0:
            out.append(Violation(gpu.id, "unit_price >= 0", f"unit_price = {gpu.unit_price}"))

    gpu_ids = {gpu.id for gpu in catalog.gpus}
    for dep in catalog.deployments:
        if dep.size_class not in SIZE_CLASSES:
            out.append(Violation(dep.id, "size_class known", f"size_class = {dep.size_class!r}"))
        if dep.gpu_sku.id not in gpu_ids:
            out.append(Violation(dep.id, "gpu reference resolves",
                                 f"gpu_sku = {dep.gpu_sku.id!r}"))
        if dep.gpu_count < 1:
            out.append(Violation(dep.id, "gpu_count >= 1", f"gpu_count = {dep.gpu_count}"))
        if dep.throughput <= 0:
            out.append(Violation(dep.id, "throughput > 0", f"throughput = {dep.throughput}"))
        if not (dep.total_params >= dep.active_params > 0):
            out.append(Violation(dep.id, "total_params >= active_params > 0",
                                 f"total = {dep.total_params}, active = {dep.active_params}"))
        if dep.gpu_count * dep.gpu_sku.vram < dep.vram_required:
            out.append(Violation(
                dep.id, "memory fit: gpu_count * vram >= vram_required",
                f"{dep.gpu_count} x {dep.gpu_sku.vram} GB < {dep.vram_required} GB"))
        _check_scores(dep.id, dep.scores, out)

    for off in catalog.offerings:
        for field_name in ("input_price", "output_price", "accounting_output_price"):
            value = getattr(off, field_name)
            if value < 0:
                out.append(Violation(off.id, f"{field_name} >= 0", f"{field_name} = {value}"))
        _check_scores(off.id, off.scores, out)

    return out


# --- JSON loading -----------------------------------------------------------

def _need(obj: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise CatalogParseError(f"missing field {key!r}", path)
    return obj[key]


def _decimal(value: Any, path: str) -> Decimal:
    # prices arrive as strings to avoid binary-float ingestion; bare numbers
    # are accepted for dimensionless quantities
    if isinstance(value, bool) or value is None:
        raise CatalogParseError(f"expected a number, got {value!r}", path)
    try:
        return Decimal(str(value))
    except InvalidOperation:
        raise CatalogParseError(f"not a decimal number: {value!r}", path) from None


def _scores(value: Any, path: str) -> dict[str, Decimal]:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise CatalogParseError("scores must be an object", path)
    return {bench: _decimal(raw, f"{path}.{bench}") for bench, raw in value.items()}


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CatalogParseError(f"expected an integer, got {value!r}", path)
    return value


def load_catalog(source: str) -> Catalog:
    """Parse and fully validate a catalog JSON document.

    Raises CatalogParseError, CatalogReferenceError, or
    CatalogConstraintError; never returns a partially-valid catalog.
    """
    try:
        doc = json.loads(source, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise CatalogParseError("top level must be an object")

    version = _int(_need(doc, "schema_version", "$"), "$.schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogParseError(f"unsupported schema_version {version}", "$.schema_version")

    gpus = []
    for i, raw in enumerate(_need(doc, "gpus", "$")):
        path = f"$.gpus[{i}]"
        gpus.append(GpuSku(
            id=str(_need(raw, "id", path)),
            name=str(_need(raw, "name", path)),
            vram=_decimal(_need(raw, "vram", path), f"{path}.vram"),
            rated_power=_decimal(_need(raw, "rated_power", path), f"{path}.rated_power"),
            accounting_power=_decimal(_need(raw, "accounting_power", path),
                                      f"{path}.accounting_power"),
            unit_price=_decimal(_need(raw, "unit_price", path), f"{path}.unit_price"),
        ))
    by_id = {gpu.id: gpu for gpu in gpus}

    deployments = []
    for i, raw in enumerate(_need(doc, "deployments", "$")):
        path = f"$.deployments[{i}]"
        gpu_id = str(_need(raw, "gpu_sku", path))
        if gpu_id not in by_id:
            raise CatalogReferenceError(
                f"{path}: deployment {raw.get('id', '?')!r} references unknown gpu id {gpu_id!r}")
        deployments.append(DeploymentSpec(
            id=str(_need(raw, "id", path)),
            name=str(_need(raw, "name", path)),
            size_class=str(_need(raw, "size_class", path)),
            is_moe=bool(_need(raw, "is_moe", path)),
            total_params=_decimal(_need(raw, "total_params", path), f"{path}.total_params"),
            active_params=_decimal(_need(raw, "active_params", path), f"{path}.active_params"),
            vram_required=_decimal(_need(raw, "vram_required", path), f"{path}.vram_required"),
            gpu_sku=by_id[gpu_id],
            gpu_count=_int(_need(raw, "gpu_count", path), f"{path}.gpu_count"),
            throughput=_decimal(_need(raw, "throughput", path), f"{path}.throughput"),
            scores=_scores(raw.get("scores"), f"{path}.scores"),
        ))

    offerings = []
    for i, raw in enumerate(_need(doc, "offerings", "$")):
        path = f"$.offerings[{i}]"
        offerings.append(ApiOffering(
            id=str(_need(raw, "id", path)),
            provider=str(_need(raw, "provider", path)),
            name=str(_need(raw, "name", path)),
            input_price=_decimal(_need(raw, "input_price", path), f"{path}.input_price"),
            output_price=_decimal(_need(raw, "output_price", path), f"{path}.output_price"),
            accounting_output_price=_decimal(
                _need(raw, "accounting_output_price", path),
                f"{path}.accounting_output_price"),
            scores=_scores(raw.get("scores"), f"{path}.scores"),
        ))

    catalog = Catalog(
        schema_version=version,
        gpus=tuple(gpus),
        deployments=tuple(deployments),
        offerings=tuple(offerings),
    )
    violations = validate_catalog(catalog)
    if violations:
        raise CatalogConstraintError(violations)
    return catalog


def load_catalog_file(path: str | Path) -> Catalog:
    return load_catalog(Path(path).read_text(encoding="utf-8"))


# --- JSON serialization -----------------------------------------------------

def catalog_to_dict(catalog: Catalog) -> dict[str, Any]:
    """Plain-data form, field for field; prices as decimal strings."""
    return {
        "schema_version": catalog.schema_version,
        "gpus": [
            {
                "id": g.id,
                "name": g.name,
                "vram": _num(g.vram),
                "rated_power": _num(g.rated_power),
                "accounting_power": _num(g.accounting_power),
                "unit_price": str(g.unit_price),
            }
            for g in catalog.gpus
        ],
        "deployments": [
            {
                "id": d.id,
                "name": d.name,
                "size_class": d.size_class,
                "is_moe": d.is_moe,
                "total_params": _num(d.total_params),
                "active_params": _num(d.active_params),
                "vram_required": _num(d.vram_required),
                "gpu_sku": d.gpu_sku.id,
                "gpu_count": d.gpu_count,
                "throughput": _num(d.throughput),
                "scores": {b: _num(s) for b, s in d.scores.items()},
            }
            for d in catalog.deployments
        ],
        "offerings": [
            {
                "id": o.id,
                "provider": o.provider,
                "name": o.name,
                "input_price": str(o.input_price),
                "output_price": str(o.output_price),
                "accounting_output_price": str(o.accounting_output_price),
                "scores": {b: _num(s) for b, s in o.scores.items()},
            }
            for o in catalog.offerings
        ],
    }


def _num(value: Decimal) -> Any:
    return jsondoc.RawNumber(value)


def serialize_catalog(catalog: Catalog) -> str:
    return jsondoc.dumps(catalog_to_dict(catalog))


def replace_gpu_price(deployment: DeploymentSpec, unit_price: Decimal) -> DeploymentSpec:
    """Rebind the deployment's GPU SKU to a copy with a different price."""
    return replace(deployment, gpu_sku=replace(deployment.gpu_sku, unit_price=unit_price))
