"""JSON document codec for scenarios, evaluation results and saved runs.

One schema, one validator: CLI scenario files and API request bodies go
through the same functions. Documents use camelCase keys, kebab-case
enumeration tokens, euros, and human percent units for benefit
percentages; the discount rate is a fraction (0.04 = 4%).

Encoding is loss-free: floats survive JSON via repr round-tripping and
percentages go through exact decimal conversion, so decode(encode(x)) == x.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .domain import (
    DEFAULT_DISCOUNT_RATE,
    DEFAULT_HORIZON_YEARS,
    AnnualBenefit,
    BenefitProfile,
    CostOverride,
    Crop,
    CropEntry,
    Deviation,
    EvaluationResult,
    FarmScenario,
    InputSaving,
    InputScope,
    MainTechnology,
    OperationKind,
    OptionResult,
    PortfolioResult,
    Region,
    SharedSupport,
    SupportTechnology,
    TechnologyOption,
    Violation,
)
from .percent import fraction_to_percent, percent_to_fraction

SCENARIO_SCHEMA = "agrivest-scenario/1"
RESULT_SCHEMA = "agrivest-result/1"

_ALL_INPUTS_MAINS = (MainTechnology.AUTO_STEER, MainTechnology.SECTION_CONTROL)

_OVERRIDE_KEYS = {
    "inputPrice": "input_price",
    "applicationRate": "application_rate",
    "treatmentsPerYear": "treatments_per_year",
    "fuelPrice": "fuel_price",
    "fuelConsumption": "fuel_consumption",
    "labourCost": "labour_cost",
    "labourHours": "labour_hours",
    "inputUnit": "input_unit",
}


class DocumentValidationError(ValueError):
    """A document failed structural validation; carries field violations."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations) or "invalid document")


class _Collector:
    def __init__(self):
        self.violations: list[Violation] = []

    def add(self, field: str, message: str):
        self.violations.append(Violation(field, message))

    def raise_if_any(self):
        if self.violations:
            raise DocumentValidationError(self.violations)


def _number(doc: dict, key: str, path: str, errors: _Collector,
            default: Optional[float] = None) -> Optional[float]:
    if key not in doc:
        if default is not None:
            return default
        errors.add(f"{path}.{key}", "required number is missing")
        return None
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.add(f"{path}.{key}", f"expected a number, got {value!r}")
        return None
    return float(value)


def _enum(enum_cls, doc: dict, key: str, path: str, errors: _Collector):
    if key not in doc:
        errors.add(f"{path}.{key}", "required field is missing")
        return None
    try:
        return enum_cls(doc[key])
    except (ValueError, TypeError):
        errors.add(f"{path}.{key}", f"unknown token {doc[key]!r}")
        return None


# -- scenario ---------------------------------------------------------------

def encode_scenario(scenario: FarmScenario) -> dict:
    doc: dict[str, Any] = {"schema": SCENARIO_SCHEMA}
    if scenario.id is not None:
        doc["id"] = scenario.id
    doc["region"] = scenario.region.value
    doc["crops"] = [
        {
            "crop": entry.crop.name,
            "area": entry.area_ha,
            "yield": entry.yield_t_per_ha,
            "price": entry.price_eur_per_t,
        }
        for entry in scenario.crops
    ]
    doc["options"] = [encode_option(option) for option in scenario.options]
    doc["discountRate"] = scenario.discount_rate
    doc["horizonYears"] = scenario.horizon_years
    if scenario.cost_overrides:
        doc["costOverrides"] = [_encode_override(o) for o in scenario.cost_overrides]
    return doc


def encode_option(option: TechnologyOption) -> dict:
    doc = {
        "main": option.main.value,
        "supports": [s.value for s in option.sorted_supports()],
        "operation": option.operation.value,
        "benefits": encode_benefits(option.benefits),
        "baseInvestment": option.base_investment,
        "recurringCost": option.recurring_cost,
    }
    if option.custom:
        doc["custom"] = True
    return doc


def encode_benefits(benefits: BenefitProfile) -> dict:
    return {
        "inputReduction": fraction_to_percent(benefits.input_reduction_pct),
        "yieldIncrease": fraction_to_percent(benefits.yield_increase_pct),
        "fuelReduction": fraction_to_percent(benefits.fuel_reduction_pct),
        "labourReduction": fraction_to_percent(benefits.labour_reduction_pct),
        "inputScope": benefits.input_scope.value,
    }


def _encode_override(override: CostOverride) -> dict:
    doc: dict[str, Any] = {
        "crop": override.crop_name,
        "operation": override.operation.value,
    }
    for key, attr in _OVERRIDE_KEYS.items():
        value = getattr(override, attr)
        if value is not None:
            doc[key] = value
    return doc


def decode_scenario(doc: Any, *, scenario_id: Optional[str] = None) -> FarmScenario:
    """Build a FarmScenario from a document, collecting field violations.

    Raises DocumentValidationError listing every structural problem found;
    domain-rule validation (validate_scenario) is the caller's second step.
    """
    errors = _Collector()
    if not isinstance(doc, dict):
        errors.add("$", "scenario document must be a JSON object")
        errors.raise_if_any()

    region = _enum(Region, doc, "region", "$", errors)

    crops: list[CropEntry] = []
    raw_crops = doc.get("crops")
    if not isinstance(raw_crops, list):
        errors.add("crops", "expected an array of crop entries")
        raw_crops = []
    for i, entry in enumerate(raw_crops):
        path = f"crops[{i}]"
        if not isinstance(entry, dict):
            errors.add(path, "expected an object")
            continue
        name = entry.get("crop")
        if not isinstance(name, str) or not name:
            errors.add(f"{path}.crop", "crop name is required")
            continue
        area = _number(entry, "area", path, errors)
        yield_value = _number(entry, "yield", path, errors)
        price = _number(entry, "price", path, errors)
        if None in (area, yield_value, price):
            continue
        crops.append(CropEntry(Crop.named(name), area, yield_value, price))

    options: list[TechnologyOption] = []
    raw_options = doc.get("options", [])
    if not isinstance(raw_options, list):
        errors.add("options", "expected an array of technology options")
        raw_options = []
    for i, entry in enumerate(raw_options):
        option = _decode_option(entry, f"options[{i}]", errors)
        if option is not None:
            options.append(option)

    if "discountRate" in doc:
        discount = _number(doc, "discountRate", "$", errors)
    else:
        discount = DEFAULT_DISCOUNT_RATE
    horizon = doc.get("horizonYears", DEFAULT_HORIZON_YEARS)
    if isinstance(horizon, bool) or not isinstance(horizon, int):
        errors.add("horizonYears", f"expected an integer, got {horizon!r}")
        horizon = 1

    overrides: list[CostOverride] = []
    raw_overrides = doc.get("costOverrides", [])
    if not isinstance(raw_overrides, list):
        errors.add("costOverrides", "expected an array")
        raw_overrides = []
    for i, entry in enumerate(raw_overrides):
        override = _decode_override(entry, f"costOverrides[{i}]", errors)
        if override is not None:
            overrides.append(override)

    errors.raise_if_any()
    return FarmScenario(
        region=region,
        crops=tuple(crops),
        options=tuple(options),
        discount_rate=discount,
        horizon_years=horizon,
        cost_overrides=tuple(overrides),
        id=scenario_id if scenario_id is not None else doc.get("id"),
    )


def _decode_option(entry: Any, path: str, errors: _Collector) -> Optional[TechnologyOption]:
    if not isinstance(entry, dict):
        errors.add(path, "expected an object")
        return None
    main = _enum(MainTechnology, entry, "main", path, errors)
    operation = _enum(OperationKind, entry, "operation", path, errors)
    supports: set[SupportTechnology] = set()
    raw_supports = entry.get("supports", [])
    if not isinstance(raw_supports, list):
        errors.add(f"{path}.supports", "expected an array of support tokens")
        raw_supports = []
    for token in raw_supports:
        try:
            supports.add(SupportTechnology(token))
        except ValueError:
            errors.add(f"{path}.supports", f"unknown token {token!r}")

    benefits = _decode_benefits(entry.get("benefits"), f"{path}.benefits", main, errors)
    base_investment = _number(entry, "baseInvestment", path, errors)
    recurring = _number(entry, "recurringCost", path, errors, default=0.0)
    custom = bool(entry.get("custom", False))

    if None in (main, operation, benefits, base_investment, recurring):
        return None
    try:
        return TechnologyOption(
            main=main,
            supports=frozenset(supports),
            operation=operation,
            benefits=benefits,
            base_investment=base_investment,
            recurring_cost=recurring,
            custom=custom,
        )
    except ValueError as exc:
        errors.add(path, str(exc))
        return None


def _decode_benefits(raw: Any, path: str, main: Optional[MainTechnology],
                     errors: _Collector) -> Optional[BenefitProfile]:
    if raw is None:
        errors.add(path, "benefits are required")
        return None
    if not isinstance(raw, dict):
        errors.add(path, "expected an object")
        return None
    values = {}
    for key in ("inputReduction", "yieldIncrease", "fuelReduction", "labourReduction"):
        number = _number(raw, key, path, errors, default=0.0)
        if number is None:
            return None
        if not 0 <= number <= 100:
            errors.add(f"{path}.{key}", f"percentage {number} outside [0, 100]")
            return None
        values[key] = percent_to_fraction(number)
    if "inputScope" in raw:
        try:
            scope = InputScope(raw["inputScope"])
        except ValueError:
            errors.add(f"{path}.inputScope", f"unknown token {raw['inputScope']!r}")
            return None
    else:
        scope = (InputScope.ALL_INPUTS if main in _ALL_INPUTS_MAINS
                 else InputScope.OPERATION_SPECIFIC)
    try:
        return BenefitProfile(
            input_reduction_pct=values["inputReduction"],
            yield_increase_pct=values["yieldIncrease"],
            fuel_reduction_pct=values["fuelReduction"],
            labour_reduction_pct=values["labourReduction"],
            input_scope=scope,
        )
    except ValueError as exc:
        errors.add(path, str(exc))
        return None


def _decode_override(entry: Any, path: str, errors: _Collector) -> Optional[CostOverride]:
    if not isinstance(entry, dict):
        errors.add(path, "expected an object")
        return None
    crop = entry.get("crop")
    if not isinstance(crop, str) or not crop:
        errors.add(f"{path}.crop", "crop name is required")
        return None
    operation = _enum(OperationKind, entry, "operation", path, errors)
    if operation is None:
        return None
    values: dict[str, Any] = {}
    for key, attr in _OVERRIDE_KEYS.items():
        if key not in entry:
            continue
        raw = entry[key]
        if key == "inputUnit":
            if raw not in ("kg", "l"):
                errors.add(f"{path}.{key}", "input unit must be 'kg' or 'l'")
                continue
            values[attr] = raw
            continue
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            errors.add(f"{path}.{key}", f"expected a number, got {raw!r}")
            continue
        if raw < 0:
            errors.add(f"{path}.{key}", f"must be >= 0, got {raw}")
            continue
        values[attr] = float(raw)
    return CostOverride(crop_name=crop, operation=operation, **values)


# -- evaluation results ------------------------------------------------------

def encode_result(result: EvaluationResult) -> dict:
    return {
        "schema": RESULT_SCHEMA,
        "catalogVersion": result.catalog_version,
        "totalArea": result.total_area_ha,
        "scenario": encode_scenario(result.scenario),
        "options": [_encode_option_result(r) for r in result.options],
        "portfolio": _encode_portfolio(result.portfolio),
        "deviations": [
            {"path": d.path, "value": d.value, "default": d.default}
            for d in result.deviations
        ],
        "placeholders": {
            "investments": result.uses_placeholder_investments,
            "costProfiles": result.uses_placeholder_cost_profiles,
        },
    }


def _encode_benefit(benefit: AnnualBenefit) -> dict:
    return {
        "revenueFromYield": benefit.revenue_from_yield,
        "inputSaving": benefit.input_saving,
        "fuelSaving": benefit.fuel_saving,
        "labourSaving": benefit.labour_saving,
        "recurringCost": benefit.recurring_cost,
    }


def _encode_savings(saved) -> list[dict]:
    return [
        {"input": s.input, "quantityPerYear": s.quantity_per_year, "unit": s.unit}
        for s in saved
    ]


def _encode_option_result(r: OptionResult) -> dict:
    return {
        "option": encode_option(r.option),
        "scaledInvestment": r.scaled_investment,
        "annualBenefit": _encode_benefit(r.benefit),
        "annualRevenue": r.benefit.annual_revenue,
        "annualCostDelta": r.benefit.annual_cost_delta,
        "cashFlows": list(r.cash_flows),
        "npv": r.npv,
        "irr": r.irr,
        "bcr": r.bcr,
        "inputSaved": _encode_savings(r.input_saved),
    }


def _encode_portfolio(p: PortfolioResult) -> dict:
    return {
        "investment": p.investment,
        "annualRevenue": p.annual_revenue,
        "annualCostDelta": p.annual_cost_delta,
        "cashFlows": list(p.cash_flows),
        "npv": p.npv,
        "irr": p.irr,
        "bcr": p.bcr,
        "inputSaved": _encode_savings(p.input_saved),
        "sharedSupports": [
            {
                "support": s.support.value,
                "scaledInvestment": s.scaled_investment,
                "optionCount": s.option_count,
            }
            for s in p.shared_supports
        ],
    }


def decode_result(doc: dict) -> EvaluationResult:
    """Rebuild an EvaluationResult; inverse of encode_result."""
    scenario = decode_scenario(doc["scenario"])
    options = tuple(_decode_option_result(entry) for entry in doc["options"])
    portfolio = _decode_portfolio(doc["portfolio"])
    deviations = tuple(
        Deviation(d["path"], d["value"], d.get("default"))
        for d in doc.get("deviations", [])
    )
    placeholders = doc.get("placeholders", {})
    return EvaluationResult(
        scenario=scenario,
        catalog_version=doc["catalogVersion"],
        total_area_ha=doc["totalArea"],
        options=options,
        portfolio=portfolio,
        deviations=deviations,
        uses_placeholder_investments=bool(placeholders.get("investments", False)),
        uses_placeholder_cost_profiles=bool(placeholders.get("costProfiles", False)),
    )


def _decode_savings(raw) -> tuple[InputSaving, ...]:
    return tuple(
        InputSaving(s["input"], s["quantityPerYear"], s["unit"]) for s in raw
    )


def _decode_option_result(entry: dict) -> OptionResult:
    errors = _Collector()
    option = _decode_option(entry["option"], "option", errors)
    errors.raise_if_any()
    benefit_doc = entry["annualBenefit"]
    benefit = AnnualBenefit(
        revenue_from_yield=benefit_doc["revenueFromYield"],
        input_saving=benefit_doc["inputSaving"],
        fuel_saving=benefit_doc["fuelSaving"],
        labour_saving=benefit_doc["labourSaving"],
        recurring_cost=benefit_doc["recurringCost"],
    )
    return OptionResult(
        option=option,
        scaled_investment=entry["scaledInvestment"],
        benefit=benefit,
        cash_flows=tuple(entry["cashFlows"]),
        npv=entry["npv"],
        irr=entry.get("irr"),
        bcr=entry.get("bcr"),
        input_saved=_decode_savings(entry["inputSaved"]),
    )


def _decode_portfolio(entry: dict) -> PortfolioResult:
    return PortfolioResult(
        investment=entry["investment"],
        annual_revenue=entry["annualRevenue"],
        annual_cost_delta=entry["annualCostDelta"],
        cash_flows=tuple(entry["cashFlows"]),
        npv=entry["npv"],
        irr=entry.get("irr"),
        bcr=entry.get("bcr"),
        input_saved=_decode_savings(entry["inputSaved"]),
        shared_supports=tuple(
            SharedSupport(SupportTechnology(s["support"]), s["scaledInvestment"],
                          s["optionCount"])
            for s in entry.get("sharedSupports", [])
        ),
    )


def dumps(document: dict) -> str:
    """Canonical text form used for files, reports and golden comparisons."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
