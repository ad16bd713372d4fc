"""Stateless HTTP facade over the engine.

All endpoints are pure functions of the request body and the catalog the
server was started with. Responses are rendered through the same canonical
JSON emitter as the CLI, so equivalent invocations are byte-identical.
Monetary values travel as decimal strings.
"""

from __future__ import annotations

import json
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import jsondoc
from .breakeven import Status, break_even_matrix, cost_curves, solve_break_even, sweep
from .catalog import Catalog, serialize_catalog
from .engine import DomainError, WorkloadProfile
from .reporting import (
    RenderSpec,
    curves_document,
    matrix_document,
    render_breakeven_matrix,
    render_curves,
    scenario_document,
    workload_document,
)

DEFAULT_CURVE_HORIZON = Decimal(12)


class RequestError(Exception):
    def __init__(self, status: int, code: str, message: str, field: str | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.field = field
        super().__init__(message)


def _json_response(text: str, status: int = 200) -> Response:
    return Response(content=text, status_code=status, media_type="application/json")


def _error_response(exc: RequestError) -> Response:
    body: dict[str, Any] = {"error": {"code": exc.code, "message": exc.message}}
    if exc.field:
        body["error"]["field"] = exc.field
    return _json_response(jsondoc.dumps(body), status=exc.status)


async def _body(request: Request) -> dict[str, Any]:
    raw = await request.body()
    if not raw:
        return {}
    try:
        doc = json.loads(raw, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise RequestError(400, "invalid_json", f"body is not valid JSON: {exc.msg}")
    if not isinstance(doc, dict):
        raise RequestError(400, "invalid_json", "body must be a JSON object")
    return doc


def _field_decimal(doc: dict, key: str, path: str) -> Decimal | None:
    if key not in doc or doc[key] is None:
        return None
    value = doc[key]
    if isinstance(value, bool):
        raise RequestError(400, "invalid_workload", f"{path} must be a number", path)
    try:
        return Decimal(str(value))
    except InvalidOperation:
        raise RequestError(400, "invalid_workload", f"{path} is not a number", path)


def _workload(doc: dict[str, Any]) -> WorkloadProfile:
    """Partial overrides on top of the default workload."""
    raw = doc.get("workload") or {}
    if not isinstance(raw, dict):
        raise RequestError(400, "invalid_workload", "workload must be an object", "workload")
    kwargs: dict[str, Any] = {}
    for key in ("hours_per_day", "days_per_month", "electricity_rate"):
        value = _field_decimal(raw, key, f"workload.{key}")
        if value is not None:
            kwargs[key] = value
    if raw.get("output_share") is not None:
        try:
            kwargs["output_share"] = Fraction(str(raw["output_share"]))
        except (ValueError, ZeroDivisionError):
            raise RequestError(400, "invalid_workload",
                               "workload.output_share is not a fraction",
                               "workload.output_share")
    if raw.get("demand") is not None:
        demand = raw["demand"]
        if isinstance(demand, bool) or not isinstance(demand, int):
            raise RequestError(400, "invalid_workload",
                               "workload.demand must be an integer", "workload.demand")
        kwargs["demand"] = demand
    try:
        return WorkloadProfile(**kwargs)
    except DomainError as exc:
        field = next(iter(kwargs), "workload")
        raise RequestError(400, "invalid_workload", str(exc), f"workload.{field}")


def _lookup(catalog: Catalog, doc: dict[str, Any]):
    model_id = doc.get("model_id")
    if not model_id:
        raise RequestError(400, "unknown_model", "model_id is required", "model_id")
    api_id = doc.get("api_id")
    if not api_id:
        raise RequestError(400, "unknown_api", "api_id is required", "api_id")
    try:
        spec = catalog.deployment(str(model_id))
    except KeyError:
        raise RequestError(400, "unknown_model", f"unknown model id: {model_id}", "model_id")
    try:
        offering = catalog.offering(str(api_id))
    except KeyError:
        raise RequestError(400, "unknown_api", f"unknown api id: {api_id}", "api_id")
    return spec, offering


def create_app(catalog: Catalog, cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="llm-tco", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    catalog_json = serialize_catalog(catalog)

    @app.exception_handler(RequestError)
    async def _handle_request_error(_request, exc: RequestError):
        return _error_response(exc)

    @app.get("/healthz")
    async def healthz() -> Response:
        return _json_response(jsondoc.dumps({
            "status": "ok",
            "schema_version": catalog.schema_version,
        }))

    @app.get("/api/v1/catalog")
    async def get_catalog() -> Response:
        return _json_response(catalog_json)

    @app.post("/api/v1/breakeven")
    async def post_breakeven(request: Request) -> Response:
        doc = await _body(request)
        w = _workload(doc)
        spec, offering = _lookup(catalog, doc)

        gpu_price = _field_decimal(doc, "gpu_unit_price", "gpu_unit_price")
        if gpu_price is not None:
            if gpu_price < 0:
                raise RequestError(400, "invalid_workload",
                                   "gpu_unit_price must be >= 0", "gpu_unit_price")
            from .catalog import replace_gpu_price
            spec = replace_gpu_price(spec, gpu_price)

        curve_opts = doc.get("curve") or {}
        horizon = _field_decimal(curve_opts, "horizon", "curve.horizon") or DEFAULT_CURVE_HORIZON
        step = _field_decimal(curve_opts, "step", "curve.step") or _default_step(horizon)

        result = solve_break_even(spec, offering, w)
        if result.status is Status.NEVER and result.zero_hardware:
            # nothing to recoup and nothing to save: the curves neither
            # cross nor separate, so the scenario has no break-even reading
            body = {
                "error": {
                    "code": "degenerate_scenario",
                    "message": "never breaks even: electricity alone meets or "
                               "exceeds the API spend and there is no hardware "
                               "outlay to recoup",
                },
                "workload": workload_document(w),
                "scenario": scenario_document(result),
            }
            return _json_response(jsondoc.dumps(body), status=422)

        try:
            series = cost_curves(spec, offering, w, horizon, step)
        except DomainError as exc:
            raise RequestError(400, "invalid_curve", str(exc), "curve")

        if doc.get("format") == "csv":
            return Response(content=render_curves(series, RenderSpec(format="csv", precision="full")),
                            media_type="text/csv")
        return _json_response(jsondoc.dumps({
            "schema_version": 1,
            "workload": workload_document(w),
            "scenario": scenario_document(result),
            "curves": curves_document(series),
        }))

    @app.post("/api/v1/matrix")
    async def post_matrix(request: Request) -> Response:
        doc = await _body(request)
        w = _workload(doc)
        matrix = break_even_matrix(catalog, w)
        if doc.get("format") == "csv":
            rendered = render_breakeven_matrix(matrix, RenderSpec(format="csv", precision="full"))
            return Response(content=rendered, media_type="text/csv")
        return _json_response(jsondoc.dumps(matrix_document(matrix)))

    @app.post("/api/v1/sweep")
    async def post_sweep(request: Request) -> Response:
        doc = await _body(request)
        w = _workload(doc)
        spec, offering = _lookup(catalog, doc)
        parameter = doc.get("parameter")
        grid_raw = doc.get("grid")
        if not isinstance(grid_raw, list) or not grid_raw:
            raise RequestError(400, "invalid_grid", "grid must be a non-empty array", "grid")
        grid = []
        for i, value in enumerate(grid_raw):
            if isinstance(value, bool):
                raise RequestError(400, "invalid_grid", f"grid[{i}] must be a number", "grid")
            try:
                grid.append(Decimal(str(value)))
            except InvalidOperation:
                raise RequestError(400, "invalid_grid", f"grid[{i}] is not a number", "grid")
        try:
            results = sweep(spec, offering, w, str(parameter), grid)
        except DomainError as exc:
            code = "unknown_parameter" if "unknown sweep parameter" in str(exc) else "invalid_grid"
            raise RequestError(400, code, str(exc), "parameter" if code == "unknown_parameter" else "grid")
        return _json_response(jsondoc.dumps({
            "schema_version": 1,
            "workload": workload_document(w),
            "deployment_id": spec.id,
            "offering_id": offering.id,
            "parameter": parameter,
            "results": [
                {"value": jsondoc.RawNumber(v), "scenario": scenario_document(r)}
                for v, r in results
            ],
        }))

    return app


def _default_step(horizon: Decimal) -> Decimal:
    # 60 samples, settled onto a readable grid (exact for round horizons)
    step = (horizon / 60).quantize(Decimal("0.000001"))
    text = format(step, "f").rstrip("0").rstrip(".")
    return Decimal(text or "0")
