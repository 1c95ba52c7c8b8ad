"""Differential cash-flow arithmetic: benefit decomposition, investment
scaling, NPV, IRR, BCR and physical input savings.

Every function is pure and works on plain floats; callers own all state.
Interest rates and benefit percentages are fractions here, never human
percent units.
"""
from __future__ import annotations

from typing import Mapping, Optional, Sequence, Union

from .domain import (
    ALL_INPUTS_OPERATIONS,
    OPERATION_INPUT,
    REFERENCE_AREA_HA,
    AnnualBenefit,
    CropEntry,
    FarmScenario,
    InputCostProfile,
    InputSaving,
    InputScope,
    OperationKind,
    TechnologyOption,
)


class FinanceDomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class MissingProfileError(LookupError):
    """No cost profile available for an operation the computation needs."""

    def __init__(self, operation: OperationKind):
        self.operation = operation
        super().__init__(f"no cost profile for operation {operation.value!r}")


# IRR search bracket and termination; scan step chosen so a sign change
# between adjacent grid points is cheap to find before bisection.
IRR_BRACKET_LOW = -0.999
IRR_BRACKET_HIGH = 10.0
IRR_SCAN_STEP = 0.01
IRR_INTERVAL_WIDTH = 1e-12


def scale_investment(base_investment: float, total_area_ha: float) -> float:
    """Re-adapt a 50 ha reference investment to the farm's worked area.

    Applies the 0.6 economies-of-scale rule upward only: below the
    reference size the investment is not reduced.
    """
    if total_area_ha <= 0:
        raise FinanceDomainError(f"total area must be > 0 ha, got {total_area_ha}")
    if base_investment < 0:
        raise FinanceDomainError(f"base investment must be >= 0, got {base_investment}")
    factor = max(1.0, total_area_ha / REFERENCE_AREA_HA) ** 0.6
    return base_investment * factor


ProfileArg = Union[InputCostProfile, Mapping[OperationKind, InputCostProfile]]


def _as_profile_map(option: TechnologyOption,
                    profiles: ProfileArg) -> Mapping[OperationKind, InputCostProfile]:
    if isinstance(profiles, InputCostProfile):
        return {option.operation: profiles}
    return profiles


def affected_operations(scenario: FarmScenario,
                         option: TechnologyOption) -> tuple[OperationKind, ...]:
    """Operations whose input the option's input reduction applies to."""
    if option.benefits.input_scope is InputScope.ALL_INPUTS:
        return tuple(op for op in scenario.operations() if op in ALL_INPUTS_OPERATIONS)
    if OPERATION_INPUT[option.operation] is None:
        return ()
    return (option.operation,)


def annual_benefit(scenario: FarmScenario, crop_entry: CropEntry,
                   option: TechnologyOption, profiles: ProfileArg) -> AnnualBenefit:
    """Yearly money effects of one option on one crop.

    `profiles` maps operations to this crop's cost profiles; a bare profile
    is accepted for operation-specific options. An all-inputs option saves
    on the seed, fertiliser and pesticide inputs of every operation the
    scenario covers; fuel and labour savings always accrue on the option's
    own operation.
    """
    profile_map = _as_profile_map(option, profiles)
    own = profile_map.get(option.operation)
    if own is None:
        raise MissingProfileError(option.operation)

    area = crop_entry.area_ha
    benefits = option.benefits

    revenue = (area * crop_entry.yield_t_per_ha * crop_entry.price_eur_per_t
               * benefits.yield_increase_pct)

    input_saving = 0.0
    for operation in affected_operations(scenario, option):
        profile = profile_map.get(operation)
        if profile is None:
            raise MissingProfileError(operation)
        input_saving += (profile.input_price * profile.application_rate
                         * profile.treatments_per_year * area
                         * benefits.input_reduction_pct)

    fuel_saving = (own.fuel_price * own.fuel_consumption * own.treatments_per_year
                   * area * benefits.fuel_reduction_pct)
    labour_saving = (own.labour_cost * own.labour_hours * own.treatments_per_year
                     * area * benefits.labour_reduction_pct)

    return AnnualBenefit(
        revenue_from_yield=revenue,
        input_saving=input_saving,
        fuel_saving=fuel_saving,
        labour_saving=labour_saving,
        recurring_cost=option.recurring_cost,
    )


def input_saved_quantity(scenario: FarmScenario, crop_entry: CropEntry,
                         option: TechnologyOption,
                         profiles: ProfileArg) -> list[InputSaving]:
    """Physical quantity of input saved per year, in the profile's unit.

    One entry per affected input category, zero quantities included.
    """
    profile_map = _as_profile_map(option, profiles)
    if option.operation not in profile_map:
        raise MissingProfileError(option.operation)

    saved = []
    for operation in affected_operations(scenario, option):
        profile = profile_map.get(operation)
        if profile is None:
            raise MissingProfileError(operation)
        quantity = (profile.application_rate * profile.treatments_per_year
                    * crop_entry.area_ha * option.benefits.input_reduction_pct)
        saved.append(InputSaving(
            input=OPERATION_INPUT[operation],
            quantity_per_year=quantity,
            unit=profile.input_unit,
        ))
    return saved


def cash_flows(benefit: AnnualBenefit, horizon_years: int) -> list[float]:
    """Constant annual net flows over the horizon (no time profile given)."""
    if horizon_years < 1:
        raise FinanceDomainError(f"horizon must be >= 1 year, got {horizon_years}")
    return [benefit.net_flow] * horizon_years


def npv(scaled_investment: float, flows: Sequence[float], discount_rate: float) -> float:
    """Net present value, end-of-year discounting starting at t = 1."""
    if discount_rate <= -1:
        raise FinanceDomainError(f"discount rate must be > -1, got {discount_rate}")
    base = 1.0 + discount_rate
    total = -scaled_investment
    factor = 1.0
    for flow in flows:
        factor *= base
        total += flow / factor
    return total


def irr(scaled_investment: float, flows: Sequence[float]) -> Optional[float]:
    """Discount rate at which NPV is zero, or None when no root exists.

    Scans (-0.999, 10] in 0.01 steps for a sign change, then bisects the
    bracket down to 1e-12 width. Derivative-free on purpose: flat regions
    and kinked flow patterns would wreck Newton steps, and the canonical
    investment shape (positive outlay, nonnegative flows) has a single
    root which the scan cannot miss.
    """
    if scaled_investment == 0 and all(flow == 0 for flow in flows):
        return None  # NPV identically zero: no sign change anywhere

    def f(rate: float) -> float:
        return npv(scaled_investment, flows, rate)

    step_count = int(round((IRR_BRACKET_HIGH - IRR_BRACKET_LOW) / IRR_SCAN_STEP))
    lo = IRR_BRACKET_LOW
    f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    bracket = None
    for k in range(1, step_count + 1):
        hi = min(IRR_BRACKET_LOW + k * IRR_SCAN_STEP, IRR_BRACKET_HIGH)
        f_hi = f(hi)
        if f_hi == 0.0:
            return hi
        if (f_lo > 0) != (f_hi > 0):
            bracket = (lo, f_lo, hi, f_hi)
            break
        lo, f_lo = hi, f_hi
    if bracket is None:
        return None

    lo, f_lo, hi, f_hi = bracket
    while hi - lo > IRR_INTERVAL_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # float resolution exhausted
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo > 0) != (f_mid > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return lo if abs(f_lo) <= abs(f_hi) else hi


def bcr(scaled_investment: float, flows: Sequence[float],
        discount_rate: float) -> Optional[float]:
    """Discounted benefits over investment plus discounted costs.

    None when the denominator is zero. Under this definition BCR > 1
    exactly when NPV > 0 (same discounting of the same flows).
    """
    if discount_rate <= -1:
        raise FinanceDomainError(f"discount rate must be > -1, got {discount_rate}")
    base = 1.0 + discount_rate
    pv_benefits = 0.0
    pv_costs = 0.0
    factor = 1.0
    for flow in flows:
        factor *= base
        if flow >= 0:
            pv_benefits += flow / factor
        else:
            pv_costs += -flow / factor
    denominator = scaled_investment + pv_costs
    if denominator == 0.0:
        return None
    return pv_benefits / denominator
