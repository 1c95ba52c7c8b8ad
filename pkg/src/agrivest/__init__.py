"""Farm-level cost-benefit evaluation of precision agriculture technology."""

from .catalog import Catalog, load_catalog, load_seed_catalog, seed_catalog_path
from .domain import (
    BenefitProfile,
    Crop,
    CropEntry,
    EvaluationResult,
    FarmScenario,
    InputCostProfile,
    InputScope,
    MainTechnology,
    OperationKind,
    Region,
    SupportTechnology,
    TechnologyOption,
    validate_scenario,
)
from .finance import bcr, cash_flows, irr, npv, scale_investment
from .report import render_report
from .scenario import evaluate
from .store import RunStore, ScenarioStore

__version__ = "0.1.0"

__all__ = [
    "BenefitProfile",
    "Catalog",
    "Crop",
    "CropEntry",
    "EvaluationResult",
    "FarmScenario",
    "InputCostProfile",
    "InputScope",
    "MainTechnology",
    "OperationKind",
    "Region",
    "RunStore",
    "ScenarioStore",
    "SupportTechnology",
    "TechnologyOption",
    "bcr",
    "cash_flows",
    "evaluate",
    "irr",
    "load_catalog",
    "load_seed_catalog",
    "npv",
    "render_report",
    "scale_investment",
    "seed_catalog_path",
    "validate_scenario",
    "__version__",
]
