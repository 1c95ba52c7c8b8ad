"""Whole-scenario evaluation: per-option economics plus the portfolio view
with shared support technologies counted once.

Evaluation is a pure function of (scenario, catalog); repeated calls agree
bit for bit. All set-like collections are iterated in token order so sums
never depend on hash seeds.
"""
from __future__ import annotations

import dataclasses
from collections import OrderedDict

from . import finance
from .catalog import Catalog
from .domain import (
    DEFAULT_DISCOUNT_RATE,
    DEFAULT_HORIZON_YEARS,
    AnnualBenefit,
    Deviation,
    EvaluationResult,
    FarmScenario,
    InputSaving,
    OperationKind,
    OptionResult,
    PortfolioResult,
    SharedSupport,
    SupportTechnology,
    TechnologyOption,
    Violation,
    validate_scenario,
)
from .percent import fraction_to_percent


class ScenarioValidationError(ValueError):
    """The scenario violates domain invariants; carries the violations."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class UnresolvableOptionError(LookupError):
    """An option cannot be resolved against the catalog or scenario data."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _required_operations(scenario: FarmScenario,
                         option: TechnologyOption) -> tuple[OperationKind, ...]:
    """Operations whose cost profiles this option's evaluation touches."""
    needed = {option.operation}
    needed.update(finance.affected_operations(scenario, option))
    return tuple(sorted(needed, key=lambda op: op.value))


def _merge_savings(buckets: "OrderedDict[tuple[str, str], float]",
                   savings) -> None:
    for saving in savings:
        key = (saving.input, saving.unit)
        buckets[key] = buckets.get(key, 0.0) + saving.quantity_per_year


def _savings_tuple(buckets: "OrderedDict[tuple[str, str], float]") -> tuple[InputSaving, ...]:
    return tuple(
        InputSaving(input=name, quantity_per_year=quantity, unit=unit)
        for (name, unit), quantity in sorted(buckets.items())
    )


def evaluate(scenario: FarmScenario, catalog: Catalog) -> EvaluationResult:
    """Evaluate every option and the joint portfolio against the catalog.

    Portfolio flows are the plain sum of option flows; the portfolio
    investment counts each distinct support technology once, so two options
    sharing an RTK base station pay for it a single time.
    """
    violations = validate_scenario(scenario)
    if not scenario.options:
        violations.append(Violation("options", "at least one technology option is required"))
    if violations:
        raise ScenarioValidationError(violations)

    total_area = scenario.total_area_ha()
    horizon = scenario.horizon_years
    rate = scenario.discount_rate

    uses_placeholder_costs = False
    uses_placeholder_investments = False
    option_results: list[OptionResult] = []
    deviations: list[Deviation] = []

    for i, option in enumerate(scenario.options):
        path = f"options[{i}]"
        row = catalog.find_row(option.main, option.supports, option.operation)
        if row is None and not option.custom:
            raise UnresolvableOptionError(
                path,
                f"combination {option.label()} on {option.operation.value} is not in "
                f"the catalog; mark it custom to supply your own benefits",
            )

        needed_ops = _required_operations(scenario, option)
        benefit_parts: list[AnnualBenefit] = []
        saved_buckets: "OrderedDict[tuple[str, str], float]" = OrderedDict()
        for j, crop_entry in enumerate(scenario.crops):
            profiles = {}
            for operation in needed_ops:
                try:
                    profiles[operation] = catalog.cost_profile(
                        scenario.region, crop_entry.crop, operation,
                        scenario.cost_overrides)
                except LookupError as exc:
                    raise UnresolvableOptionError(
                        f"{path} / crops[{j}]", str(exc)) from exc
                if crop_entry.crop.builtin:
                    key = (scenario.region, crop_entry.crop.name, operation)
                    if catalog.profile_provenance.get(key) == "placeholder" \
                            and scenario.override_for(crop_entry.crop.name, operation) is None:
                        uses_placeholder_costs = True
            benefit_parts.append(
                finance.annual_benefit(scenario, crop_entry, option, profiles))
            _merge_savings(
                saved_buckets,
                finance.input_saved_quantity(scenario, crop_entry, option, profiles))

        benefit = AnnualBenefit(
            revenue_from_yield=sum(p.revenue_from_yield for p in benefit_parts),
            input_saving=sum(p.input_saving for p in benefit_parts),
            fuel_saving=sum(p.fuel_saving for p in benefit_parts),
            labour_saving=sum(p.labour_saving for p in benefit_parts),
            recurring_cost=option.recurring_cost,
        )
        scaled = finance.scale_investment(option.base_investment, total_area)
        flows = tuple(finance.cash_flows(benefit, horizon))
        option_results.append(OptionResult(
            option=option,
            scaled_investment=scaled,
            benefit=benefit,
            cash_flows=flows,
            npv=finance.npv(scaled, flows, rate),
            irr=finance.irr(scaled, flows),
            bcr=finance.bcr(scaled, flows, rate),
            input_saved=_savings_tuple(saved_buckets),
        ))

        deviations.extend(_option_deviations(catalog, option, path))
        if not option.custom:
            try:
                composed = catalog.investment_for(option.main, option.supports)
            except KeyError:
                composed = None
            if composed is not None and composed.provenance == "placeholder" \
                    and option.base_investment == composed.investment:
                uses_placeholder_investments = True

    if scenario.discount_rate != DEFAULT_DISCOUNT_RATE:
        deviations.append(Deviation("discountRate", scenario.discount_rate,
                                    DEFAULT_DISCOUNT_RATE))
    if scenario.horizon_years != DEFAULT_HORIZON_YEARS:
        deviations.append(Deviation("horizonYears", float(scenario.horizon_years),
                                    float(DEFAULT_HORIZON_YEARS)))
    deviations.extend(_override_deviations(scenario, catalog))

    portfolio = _portfolio(scenario, catalog, option_results, total_area)

    # The echo is content-only: storage ids belong to scenario/run records,
    # and results must compare equal across CLI, API and direct calls.
    return EvaluationResult(
        scenario=dataclasses.replace(scenario, id=None),
        catalog_version=catalog.version,
        total_area_ha=total_area,
        options=tuple(option_results),
        portfolio=portfolio,
        deviations=tuple(deviations),
        uses_placeholder_investments=uses_placeholder_investments,
        uses_placeholder_cost_profiles=uses_placeholder_costs,
    )


def _portfolio(scenario: FarmScenario, catalog: Catalog,
               option_results: list[OptionResult], total_area: float) -> PortfolioResult:
    horizon = scenario.horizon_years
    flows = [0.0] * horizon
    for result in option_results:
        for t in range(horizon):
            flows[t] += result.cash_flows[t]

    # Count how many options bring each support along; duplicates beyond the
    # first pay nothing. Scaling uses the whole worked area, the same area
    # every option scales with, so the subtraction is exact.
    usage: dict[SupportTechnology, int] = {}
    for result in option_results:
        for support in result.option.sorted_supports():
            usage[support] = usage.get(support, 0) + 1

    investment = sum(result.scaled_investment for result in option_results)
    shared: list[SharedSupport] = []
    for support in sorted(usage, key=lambda s: s.value):
        count = usage[support]
        if count < 2:
            continue
        component = catalog.support_investments.get(support)
        if component is None:
            continue  # unpriced custom support: no dedup possible
        scaled_component = finance.scale_investment(component.investment, total_area)
        investment -= (count - 1) * scaled_component
        shared.append(SharedSupport(support, scaled_component, count))

    annual_revenue = sum(r.benefit.annual_revenue for r in option_results)
    annual_cost = sum(r.benefit.annual_cost_delta for r in option_results)

    buckets: "OrderedDict[tuple[str, str], float]" = OrderedDict()
    for result in option_results:
        _merge_savings(buckets, result.input_saved)

    flows_tuple = tuple(flows)
    return PortfolioResult(
        investment=investment,
        annual_revenue=annual_revenue,
        annual_cost_delta=annual_cost,
        cash_flows=flows_tuple,
        npv=finance.npv(investment, flows_tuple, scenario.discount_rate),
        irr=finance.irr(investment, flows_tuple),
        bcr=finance.bcr(investment, flows_tuple, scenario.discount_rate),
        input_saved=_savings_tuple(buckets),
        shared_supports=tuple(shared),
    )


def _option_deviations(catalog: Catalog, option: TechnologyOption,
                       path: str) -> list[Deviation]:
    """Everything on this option the user changed away from catalog defaults.

    Custom combinations have no defaults: every user-supplied figure is
    listed with default None so the report's assumptions stay complete.
    """
    deviations: list[Deviation] = []
    row = catalog.find_row(option.main, option.supports, option.operation)
    benefit_fields = (
        ("inputReduction", option.benefits.input_reduction_pct,
         None if row is None else row.benefits.input_reduction_pct),
        ("yieldIncrease", option.benefits.yield_increase_pct,
         None if row is None else row.benefits.yield_increase_pct),
        ("fuelReduction", option.benefits.fuel_reduction_pct,
         None if row is None else row.benefits.fuel_reduction_pct),
        ("labourReduction", option.benefits.labour_reduction_pct,
         None if row is None else row.benefits.labour_reduction_pct),
    )
    for name, value, default in benefit_fields:
        if default is None or value != default:
            deviations.append(Deviation(
                f"{path}.benefits.{name}",
                fraction_to_percent(value),
                None if default is None else fraction_to_percent(default),
            ))

    try:
        composed = catalog.investment_for(option.main, option.supports)
    except KeyError:
        composed = None
    default_investment = None if composed is None else composed.investment
    default_recurring = None if composed is None else composed.recurring_cost
    if default_investment is None or option.base_investment != default_investment:
        deviations.append(Deviation(f"{path}.baseInvestment",
                                    option.base_investment, default_investment))
    if default_recurring is None or option.recurring_cost != default_recurring:
        deviations.append(Deviation(f"{path}.recurringCost",
                                    option.recurring_cost, default_recurring))
    return deviations


def _override_deviations(scenario: FarmScenario, catalog: Catalog) -> list[Deviation]:
    deviations: list[Deviation] = []
    for override in scenario.cost_overrides:
        base = None
        crop_builtin = any(
            entry.crop.name == override.crop_name and entry.crop.builtin
            for entry in scenario.crops
        )
        if crop_builtin:
            base = catalog.cost_profiles.get(
                (scenario.region, override.crop_name, override.operation))
        for key, attr in (
            ("inputPrice", "input_price"),
            ("applicationRate", "application_rate"),
            ("treatmentsPerYear", "treatments_per_year"),
            ("fuelPrice", "fuel_price"),
            ("fuelConsumption", "fuel_consumption"),
            ("labourCost", "labour_cost"),
            ("labourHours", "labour_hours"),
        ):
            value = getattr(override, attr)
            if value is None:
                continue
            default = None if base is None else getattr(base, attr)
            if default is None or value != default:
                deviations.append(Deviation(
                    f"costOverrides[{override.crop_name}:{override.operation.value}].{key}",
                    value, default))
    return deviations
