"""File-backed persistence for scenarios and evaluation runs.

One JSON document per record under a configurable root directory, written
atomically (temp file + rename). Single writer, any number of readers;
the run index is a cache rebuilt on demand from the run documents.
"""
from __future__ import annotations

import os
import tempfile
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .documents import (
    DocumentValidationError,
    decode_result,
    decode_scenario,
    dumps,
    encode_result,
    encode_scenario,
    loads,
)
from .domain import EvaluationResult, FarmScenario

RUN_SCHEMA = "agrivest-run/1"


class StorageError(Exception):
    """The store could not read or write a document."""


class RunNotFoundError(LookupError):
    def __init__(self, run_id: str):
        self.run_id = run_id
        super().__init__(f"run {run_id!r} not found")


class ScenarioNotFoundError(LookupError):
    def __init__(self, scenario_id: str):
        self.scenario_id = scenario_id
        super().__init__(f"scenario {scenario_id!r} not found")


@dataclass(frozen=True)
class SavedRun:
    run_id: str
    created_at: datetime
    catalog_version: str
    scenario: FarmScenario
    result: EvaluationResult


@dataclass(frozen=True)
class RunSummary:
    run_id: str
    created_at: datetime
    catalog_version: str
    region: str
    total_area_ha: float
    crop_names: tuple[str, ...]
    option_count: int
    npv: float


@dataclass(frozen=True)
class ComparisonRow:
    run_id: str
    created_at: datetime
    catalog_version: str
    npv: float
    irr: Optional[float]
    bcr: Optional[float]
    total_investment: float
    input_saved: tuple


@dataclass(frozen=True)
class Comparison:
    rows: tuple[ComparisonRow, ...]
    warnings: tuple[str, ...]


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except OSError as exc:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise StorageError(f"cannot write {path}: {exc}") from exc


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StorageError(f"cannot read {path}: {exc}") from exc


class RunStore:
    """Append-only directory of saved evaluation runs."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.runs_dir = self.root / "runs"

    def _run_path(self, run_id: str) -> Path:
        return self.runs_dir / f"{run_id}.json"

    def save_run(self, scenario: FarmScenario, result: EvaluationResult,
                 created_at: Optional[datetime] = None) -> str:
        run_id = uuid.uuid4().hex
        stamp = created_at or datetime.now(timezone.utc)
        document = {
            "schema": RUN_SCHEMA,
            "runId": run_id,
            "createdAt": stamp.isoformat(),
            "catalogVersion": result.catalog_version,
            "scenario": encode_scenario(scenario),
            "result": encode_result(result),
        }
        _atomic_write(self._run_path(run_id), dumps(document))
        self._write_index()
        return run_id

    def load_run(self, run_id: str) -> SavedRun:
        path = self._run_path(run_id)
        if not path.exists():
            raise RunNotFoundError(run_id)
        document = loads(_read(path))
        return self._decode_run(document)

    @staticmethod
    def _decode_run(document: dict) -> SavedRun:
        try:
            return SavedRun(
                run_id=document["runId"],
                created_at=datetime.fromisoformat(document["createdAt"]),
                catalog_version=document["catalogVersion"],
                scenario=decode_scenario(document["scenario"]),
                result=decode_result(document["result"]),
            )
        except (KeyError, TypeError, DocumentValidationError) as exc:
            raise StorageError(f"corrupt run document: {exc}") from exc

    def list_runs(self) -> list[RunSummary]:
        """Summaries of every stored run, oldest first; refreshes the index."""
        summaries = []
        if self.runs_dir.is_dir():
            for path in sorted(self.runs_dir.glob("*.json")):
                if path.name == "index.json" or path.name.startswith(".tmp-"):
                    continue
                run = self._decode_run(loads(_read(path)))
                summaries.append(RunSummary(
                    run_id=run.run_id,
                    created_at=run.created_at,
                    catalog_version=run.catalog_version,
                    region=run.scenario.region.value,
                    total_area_ha=run.result.total_area_ha,
                    crop_names=tuple(e.crop.name for e in run.scenario.crops),
                    option_count=len(run.scenario.options),
                    npv=run.result.portfolio.npv,
                ))
        summaries.sort(key=lambda s: (s.created_at, s.run_id))
        return summaries

    def _write_index(self) -> None:
        entries = [
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
            for s in self.list_runs()
        ]
        _atomic_write(self.root / "index.json", dumps({"runs": entries}))

    def delete_run(self, run_id: str) -> None:
        path = self._run_path(run_id)
        if not path.exists():
            raise RunNotFoundError(run_id)
        try:
            path.unlink()
        except OSError as exc:
            raise StorageError(f"cannot delete {path}: {exc}") from exc
        self._write_index()

    def compare_runs(self, run_ids: list[str]) -> Comparison:
        """Metrics per run, aligned in request order.

        Runs evaluated under different catalog versions compare fine but the
        result carries a warning so drift is visible.
        """
        rows = []
        versions = set()
        for run_id in run_ids:
            run = self.load_run(run_id)
            versions.add(run.catalog_version)
            portfolio = run.result.portfolio
            rows.append(ComparisonRow(
                run_id=run.run_id,
                created_at=run.created_at,
                catalog_version=run.catalog_version,
                npv=portfolio.npv,
                irr=portfolio.irr,
                bcr=portfolio.bcr,
                total_investment=portfolio.investment,
                input_saved=portfolio.input_saved,
            ))
        warnings = ()
        if len(versions) > 1:
            warnings = ("catalog-version-mismatch",)
        return Comparison(rows=tuple(rows), warnings=warnings)


class ScenarioStore:
    """CRUD storage for scenario drafts the user explicitly saved."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.scenarios_dir = self.root / "scenarios"

    def _path(self, scenario_id: str) -> Path:
        return self.scenarios_dir / f"{scenario_id}.json"

    def create(self, scenario: FarmScenario) -> str:
        scenario_id = scenario.id or uuid.uuid4().hex
        stored = FarmScenario(
            region=scenario.region,
            crops=scenario.crops,
            options=scenario.options,
            discount_rate=scenario.discount_rate,
            horizon_years=scenario.horizon_years,
            cost_overrides=scenario.cost_overrides,
            id=scenario_id,
        )
        _atomic_write(self._path(scenario_id), dumps(encode_scenario(stored)))
        return scenario_id

    def load(self, scenario_id: str) -> FarmScenario:
        path = self._path(scenario_id)
        if not path.exists():
            raise ScenarioNotFoundError(scenario_id)
        try:
            return decode_scenario(loads(_read(path)), scenario_id=scenario_id)
        except DocumentValidationError as exc:
            raise StorageError(f"corrupt scenario document: {exc}") from exc

    def replace(self, scenario_id: str, scenario: FarmScenario) -> None:
        if not self._path(scenario_id).exists():
            raise ScenarioNotFoundError(scenario_id)
        stored = FarmScenario(
            region=scenario.region,
            crops=scenario.crops,
            options=scenario.options,
            discount_rate=scenario.discount_rate,
            horizon_years=scenario.horizon_years,
            cost_overrides=scenario.cost_overrides,
            id=scenario_id,
        )
        _atomic_write(self._path(scenario_id), dumps(encode_scenario(stored)))

    def delete(self, scenario_id: str) -> None:
        path = self._path(scenario_id)
        if not path.exists():
            raise ScenarioNotFoundError(scenario_id)
        try:
            path.unlink()
        except OSError as exc:
            raise StorageError(f"cannot delete {path}: {exc}") from exc
