"""HTTP service for the three-step evaluation workflow.

Stateless JSON API over the catalog, the evaluation engine and the file
stores. Bodies use the same documents as the CLI files; evaluation has no
side effects unless the caller asks to save the run.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from fastapi import Body, FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import report as report_mod
from .catalog import Catalog, load_catalog, seed_catalog_path
from .documents import (
    DocumentValidationError,
    decode_scenario,
    encode_benefits,
    encode_result,
    encode_scenario,
)
from .domain import (
    BUILTIN_CROPS,
    DEFAULT_DISCOUNT_RATE,
    DEFAULT_HORIZON_YEARS,
    MainTechnology,
    OperationKind,
    Region,
    SupportTechnology,
    validate_scenario,
)
from .scenario import ScenarioValidationError, UnresolvableOptionError, evaluate
from .store import (
    RunNotFoundError,
    RunStore,
    ScenarioNotFoundError,
    ScenarioStore,
    StorageError,
)

API_VERSION = "v1"

# Closed set of machine-readable error/warning codes.
ERROR_CODES = (
    "validation-error",
    "parse-error",
    "unresolvable-option",
    "scenario-not-found",
    "run-not-found",
    "report-format-unknown",
    "catalog-version-mismatch",  # warning on compare, never fatal
    "storage-error",
)

ENV_CATALOG = "AGRIVEST_CATALOG"
ENV_STORE = "AGRIVEST_STORE"
ENV_UI_ORIGIN = "AGRIVEST_UI_ORIGIN"
DEFAULT_UI_ORIGIN = "http://localhost:8080"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details=None):
        assert code in ERROR_CODES
        self.status = status
        self.code = code
        self.message = message
        self.details = details
        super().__init__(message)


def _error_response(exc: ApiError) -> JSONResponse:
    body = {"code": exc.code, "message": exc.message}
    if exc.details is not None:
        body["details"] = exc.details
    return JSONResponse(status_code=exc.status, content=body)


def _violations_detail(violations) -> list[dict]:
    return [{"field": v.field, "message": v.message} for v in violations]


def create_app(catalog_path: Optional[Path | str] = None,
               store_root: Optional[Path | str] = None,
               ui_origin: Optional[str] = None) -> FastAPI:
    """Build the service; configuration falls back to environment variables."""
    catalog_path = catalog_path or os.environ.get(ENV_CATALOG) or seed_catalog_path()
    store_root = store_root or os.environ.get(ENV_STORE) or "agrivest-store"
    ui_origin = ui_origin or os.environ.get(ENV_UI_ORIGIN) or DEFAULT_UI_ORIGIN

    catalog: Catalog = load_catalog(catalog_path)
    runs = RunStore(store_root)
    scenarios = ScenarioStore(store_root)

    app = FastAPI(
        title="agrivest API",
        version="1.0.0",
        description="Farm-level cost-benefit evaluation of precision agriculture "
                    "technology investments.",
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[ui_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.catalog = catalog
    app.state.runs = runs
    app.state.scenarios = scenarios

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return _error_response(exc)

    @app.exception_handler(StorageError)
    async def handle_storage_error(_request: Request, exc: StorageError):
        return _error_response(ApiError(500, "storage-error", str(exc)))

    def _decode_and_validate(body):
        try:
            scenario = decode_scenario(body)
        except DocumentValidationError as exc:
            raise ApiError(400, "validation-error", "scenario document is invalid",
                           _violations_detail(exc.violations)) from exc
        violations = validate_scenario(scenario)
        if violations:
            raise ApiError(400, "validation-error", "scenario violates invariants",
                           _violations_detail(violations))
        return scenario

    # -- metadata and catalog browsing ------------------------------------

    @app.get(f"/{API_VERSION}/meta")
    async def meta():
        return {
            "regions": [r.value for r in Region],
            "crops": [
                {
                    "name": name,
                    "builtin": True,
                    "defaultYield": default_yield,
                    "defaultPrice": default_price,
                }
                for name, (default_yield, default_price) in BUILTIN_CROPS.items()
            ],
            "operations": [op.value for op in OperationKind],
            "mainTechnologies": [t.value for t in MainTechnology],
            "supportTechnologies": [t.value for t in SupportTechnology],
            "discountDefault": DEFAULT_DISCOUNT_RATE,
            "horizonDefault": DEFAULT_HORIZON_YEARS,
            "catalogVersion": catalog.version,
        }

    @app.get(f"/{API_VERSION}/technologies")
    async def technologies(operation: str = Query(...)):
        try:
            kind = OperationKind(operation)
        except ValueError:
            raise ApiError(400, "validation-error",
                           f"unknown operation token {operation!r}") from None
        options = []
        for row in catalog.compatible_options(kind):
            investment = catalog.investment_for(row.main, row.supports)
            entry = {
                "main": row.main.value,
                "supports": sorted(s.value for s in row.supports),
                "operation": kind.value,
                "group": row.group,
                "benefits": encode_benefits(row.benefits),
                "investment": {
                    "baseInvestment": investment.investment,
                    "recurringCost": investment.recurring_cost,
                    "provenance": investment.provenance,
                },
            }
            if row.note:
                entry["note"] = row.note
            options.append(entry)
        return {"operation": kind.value, "options": options}

    # -- scenario CRUD ------------------------------------------------------

    @app.post(f"/{API_VERSION}/scenarios", status_code=201)
    async def create_scenario(body: dict = Body(...)):
        scenario = _decode_and_validate(body)
        scenario_id = scenarios.create(scenario)
        return {"id": scenario_id,
                "scenario": encode_scenario(scenarios.load(scenario_id))}

    @app.get(f"/{API_VERSION}/scenarios/{{scenario_id}}")
    async def get_scenario(scenario_id: str):
        try:
            scenario = scenarios.load(scenario_id)
        except ScenarioNotFoundError as exc:
            raise ApiError(404, "scenario-not-found", str(exc)) from exc
        return {"id": scenario_id, "scenario": encode_scenario(scenario)}

    @app.put(f"/{API_VERSION}/scenarios/{{scenario_id}}")
    async def put_scenario(scenario_id: str, body: dict = Body(...)):
        scenario = _decode_and_validate(body)
        try:
            scenarios.replace(scenario_id, scenario)
        except ScenarioNotFoundError as exc:
            raise ApiError(404, "scenario-not-found", str(exc)) from exc
        return {"id": scenario_id,
                "scenario": encode_scenario(scenarios.load(scenario_id))}

    @app.delete(f"/{API_VERSION}/scenarios/{{scenario_id}}", status_code=204)
    async def delete_scenario(scenario_id: str):
        try:
            scenarios.delete(scenario_id)
        except ScenarioNotFoundError as exc:
            raise ApiError(404, "scenario-not-found", str(exc)) from exc
        return Response(status_code=204)

    # -- evaluation and runs --------------------------------------------------

    def _evaluate(scenario):
        try:
            return evaluate(scenario, catalog)
        except ScenarioValidationError as exc:
            raise ApiError(400, "validation-error", "scenario cannot be evaluated",
                           _violations_detail(exc.violations)) from exc
        except UnresolvableOptionError as exc:
            raise ApiError(400, "unresolvable-option", str(exc)) from exc

    @app.post(f"/{API_VERSION}/scenarios/{{scenario_id}}/evaluate")
    async def evaluate_scenario_endpoint(scenario_id: str, save: bool = Query(False)):
        try:
            scenario = scenarios.load(scenario_id)
        except ScenarioNotFoundError as exc:
            raise ApiError(404, "scenario-not-found", str(exc)) from exc
        result = _evaluate(scenario)
        payload = {"result": encode_result(result)}
        if save:
            payload["runId"] = runs.save_run(scenario, result)
        return payload

    @app.get(f"/{API_VERSION}/runs")
    async def list_runs():
        return {
            "runs": [
                {
                    "runId": s.run_id,
                    "createdAt": s.created_at.isoformat(),
                    "catalogVersion": s.catalog_version,
                    "region": s.region,
                    "totalArea": s.total_area_ha,
                    "crops": list(s.crop_names),
                    "optionCount": s.option_count,
                    "npv": s.npv,
                }
                for s in runs.list_runs()
            ]
        }

    @app.get(f"/{API_VERSION}/runs/{{run_id}}")
    async def get_run(run_id: str):
        try:
            run = runs.load_run(run_id)
        except RunNotFoundError as exc:
            raise ApiError(404, "run-not-found", str(exc)) from exc
        return {
            "runId": run.run_id,
            "createdAt": run.created_at.isoformat(),
            "catalogVersion": run.catalog_version,
            "scenario": encode_scenario(run.scenario),
            "result": encode_result(run.result),
        }

    @app.post(f"/{API_VERSION}/runs/compare")
    async def compare_runs(body: dict = Body(...)):
        run_ids = body.get("runIds")
        if not isinstance(run_ids, list) or not all(isinstance(r, str) for r in run_ids):
            raise ApiError(400, "validation-error", "body must carry a runIds string array")
        try:
            comparison = runs.compare_runs(run_ids)
        except RunNotFoundError as exc:
            raise ApiError(404, "run-not-found", str(exc)) from exc
        return {
            "rows": [
                {
                    "runId": row.run_id,
                    "createdAt": row.created_at.isoformat(),
                    "catalogVersion": row.catalog_version,
                    "npv": row.npv,
                    "irr": row.irr,
                    "bcr": row.bcr,
                    "totalInvestment": row.total_investment,
                    "inputSaved": [
                        {"input": s.input, "quantityPerYear": s.quantity_per_year,
                         "unit": s.unit}
                        for s in row.input_saved
                    ],
                }
                for row in comparison.rows
            ],
            "warnings": list(comparison.warnings),
        }

    @app.get(f"/{API_VERSION}/runs/{{run_id}}/report")
    async def run_report(run_id: str, format: str = Query(report_mod.STRUCTURED)):
        if format not in report_mod.FORMATS:
            raise ApiError(400, "report-format-unknown",
                           f"format must be one of {', '.join(report_mod.FORMATS)}")
        try:
            run = runs.load_run(run_id)
        except RunNotFoundError as exc:
            raise ApiError(404, "run-not-found", str(exc)) from exc
        text = report_mod.render_report(run.result, format)
        if format == report_mod.PRINTABLE:
            return Response(content=text, media_type="text/html; charset=utf-8")
        return Response(content=text, media_type="application/json")

    return app


def openapi_document(app: Optional[FastAPI] = None) -> dict:
    """Machine-readable API description (committed to docs/)."""
    return (app or create_app()).openapi()
