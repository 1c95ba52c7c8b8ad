"""Domain model for farm-level precision agriculture investment appraisal.

Immutable value objects shared by the catalog, the evaluation engine, the
stores, the CLI and the HTTP service. Everything here is either an
enumeration with a stable kebab-case text form or a frozen dataclass;
the only logic is invariant checking.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from typing import Optional


class DomainError(ValueError):
    """Raised when a value object is constructed from invalid parts."""


class Region(str, Enum):
    NORTHERN_EUROPE = "northern-europe"
    CENTRAL_EUROPE = "central-europe"
    SOUTH_SOUTHWESTERN_EUROPE = "south-southwestern-europe"
    SOUTHEAST_EUROPE = "southeast-europe"


class OperationKind(str, Enum):
    SEEDING = "seeding"
    FERTILIZATION = "fertilization"
    SPRAYING_FUNGICIDE = "spraying-fungicide"
    SPRAYING_HERBICIDE = "spraying-herbicide"
    SPRAYING_INSECTICIDE = "spraying-insecticide"
    SPRAYING_GROWTH_REGULATOR = "spraying-growth-regulator"
    MECHANICAL_WEEDING = "mechanical-weeding"
    TILLAGE = "tillage"
    LIMING = "liming"
    MANURE_APPLICATION = "manure-application"


class MainTechnology(str, Enum):
    AUTO_STEER = "auto-steer"
    SECTION_CONTROL = "section-control"
    VR_SEEDER = "vr-seeder"
    VR_FERTILIZER = "vr-fertilizer"
    VR_SPRAYER = "vr-sprayer"
    VR_LIME = "vr-lime"
    VR_MANURE = "vr-manure"
    INTER_ROW_HOEING_CAMERA = "inter-row-hoeing-camera"
    INTER_ROW_HOEING_GPS = "inter-row-hoeing-gps"


class SupportTechnology(str, Enum):
    NORMAL_GPS = "normal-gps"
    RTK_GPS = "rtk-gps"
    CTF = "ctf"
    SATELLITE = "satellite"
    SURVEY_UAV = "survey-uav"
    N_SENSOR = "n-sensor"
    YIELD_MAP = "yield-map"
    SOIL_EC = "soil-ec"
    SOIL_PH = "soil-ph"
    SOIL_SAMPLING = "soil-sampling"


class InputScope(str, Enum):
    OPERATION_SPECIFIC = "operation-specific"
    ALL_INPUTS = "all-inputs"


_SPRAYING = (
    OperationKind.SPRAYING_FUNGICIDE,
    OperationKind.SPRAYING_HERBICIDE,
    OperationKind.SPRAYING_INSECTICIDE,
    OperationKind.SPRAYING_GROWTH_REGULATOR,
)

# Which operations each main technology is able to perform. This is the
# domain-level capability; the catalog narrows it to combinations that ship
# with default benefits.
MAIN_TECHNOLOGY_OPERATIONS: dict[MainTechnology, tuple[OperationKind, ...]] = {
    MainTechnology.AUTO_STEER: (
        OperationKind.SEEDING,
        OperationKind.FERTILIZATION,
        *_SPRAYING,
        OperationKind.LIMING,
        OperationKind.MANURE_APPLICATION,
        OperationKind.MECHANICAL_WEEDING,
        OperationKind.TILLAGE,
    ),
    MainTechnology.SECTION_CONTROL: (
        OperationKind.SEEDING,
        OperationKind.FERTILIZATION,
        *_SPRAYING,
    ),
    MainTechnology.VR_SEEDER: (OperationKind.SEEDING,),
    MainTechnology.VR_FERTILIZER: (OperationKind.FERTILIZATION,),
    MainTechnology.VR_SPRAYER: _SPRAYING,
    MainTechnology.VR_LIME: (OperationKind.LIMING,),
    MainTechnology.VR_MANURE: (OperationKind.MANURE_APPLICATION,),
    MainTechnology.INTER_ROW_HOEING_CAMERA: (OperationKind.MECHANICAL_WEEDING,),
    MainTechnology.INTER_ROW_HOEING_GPS: (OperationKind.MECHANICAL_WEEDING,),
}

# Physical input applied by each operation, or None where the operation
# consumes no material input (the machine pass is the whole job).
OPERATION_INPUT: dict[OperationKind, Optional[str]] = {
    OperationKind.SEEDING: "seed",
    OperationKind.FERTILIZATION: "fertiliser",
    OperationKind.SPRAYING_FUNGICIDE: "fungicide",
    OperationKind.SPRAYING_HERBICIDE: "herbicide",
    OperationKind.SPRAYING_INSECTICIDE: "insecticide",
    OperationKind.SPRAYING_GROWTH_REGULATOR: "growth-regulator",
    OperationKind.MECHANICAL_WEEDING: None,
    OperationKind.TILLAGE: None,
    OperationKind.LIMING: "lime",
    OperationKind.MANURE_APPLICATION: "manure",
}

# Operations whose input falls under the seed/fertiliser/pesticide umbrella;
# an all-inputs benefit profile reduces exactly these.
ALL_INPUTS_OPERATIONS: tuple[OperationKind, ...] = (
    OperationKind.SEEDING,
    OperationKind.FERTILIZATION,
    *_SPRAYING,
)

# Built-in crops with default yield (t/ha) and price (EUR/t); editable
# starting points for the MY FARM screen, always overridden per scenario.
BUILTIN_CROPS: dict[str, tuple[float, float]] = {
    "wheat": (7.5, 180.0),
    "maize": (9.5, 170.0),
    "sugar-beet": (75.0, 32.0),
    "canola": (3.4, 380.0),
    "potato": (42.0, 140.0),
}

DEFAULT_DISCOUNT_RATE = 0.04
DEFAULT_HORIZON_YEARS = 8
REFERENCE_AREA_HA = 50.0


@dataclass(frozen=True)
class Crop:
    """A crop grown on the farm, built-in or user-defined."""

    name: str
    builtin: bool
    default_yield: Optional[float] = None  # t/ha
    default_price: Optional[float] = None  # EUR/t

    def __post_init__(self):
        if not self.name:
            raise DomainError("crop name is required")
        if self.builtin and self.name not in BUILTIN_CROPS:
            raise DomainError(f"unknown builtin crop {self.name!r}")

    @classmethod
    def named(cls, name: str) -> "Crop":
        """Crop for a name token: builtin when registered, custom otherwise."""
        if name in BUILTIN_CROPS:
            default_yield, default_price = BUILTIN_CROPS[name]
            return cls(name, True, default_yield, default_price)
        return cls(name, False)


@dataclass(frozen=True)
class BenefitProfile:
    """The four benefit fractions attached to a technology combination.

    Fractions are stored in [0, 1]; files and the UI use human percent
    units, converted only at the I/O boundary. A missing benefit is 0.0.
    """

    input_reduction_pct: float = 0.0
    yield_increase_pct: float = 0.0
    fuel_reduction_pct: float = 0.0
    labour_reduction_pct: float = 0.0
    input_scope: InputScope = InputScope.OPERATION_SPECIFIC

    def __post_init__(self):
        for name in ("input_reduction_pct", "yield_increase_pct",
                     "fuel_reduction_pct", "labour_reduction_pct"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class InputCostProfile:
    """Baseline per-hectare economics of one operation on one crop.

    input_price EUR per kg or l, application_rate kg/ha or l/ha per pass,
    fuel_consumption l/ha per pass, labour_hours h/ha per pass. Operations
    without a material input carry zero input price/rate.
    """

    input_price: float
    application_rate: float
    treatments_per_year: float
    fuel_price: float
    fuel_consumption: float
    labour_cost: float
    labour_hours: float
    input_unit: str = "kg"

    def __post_init__(self):
        for name in ("input_price", "application_rate", "treatments_per_year",
                     "fuel_price", "fuel_consumption", "labour_cost", "labour_hours"):
            value = getattr(self, name)
            if value < 0:
                raise DomainError(f"{name} must be >= 0, got {value}")
        if self.input_unit not in ("kg", "l"):
            raise DomainError(f"input_unit must be 'kg' or 'l', got {self.input_unit!r}")


@dataclass(frozen=True)
class CostOverride:
    """Field-by-field override of one (crop, operation) cost profile.

    None keeps the base value. For custom crops no base exists, so every
    field must be set.
    """

    crop_name: str
    operation: OperationKind
    input_price: Optional[float] = None
    application_rate: Optional[float] = None
    treatments_per_year: Optional[float] = None
    fuel_price: Optional[float] = None
    fuel_consumption: Optional[float] = None
    labour_cost: Optional[float] = None
    labour_hours: Optional[float] = None
    input_unit: Optional[str] = None

    _VALUE_FIELDS = ("input_price", "application_rate", "treatments_per_year",
                     "fuel_price", "fuel_consumption", "labour_cost", "labour_hours")

    def is_complete(self) -> bool:
        return all(getattr(self, name) is not None for name in self._VALUE_FIELDS)

    def apply_to(self, base: InputCostProfile) -> InputCostProfile:
        values = {f.name: getattr(base, f.name) for f in fields(InputCostProfile)}
        for name in (*self._VALUE_FIELDS, "input_unit"):
            override = getattr(self, name)
            if override is not None:
                values[name] = override
        return InputCostProfile(**values)

    def as_profile(self) -> InputCostProfile:
        """Standalone profile for a custom crop; requires completeness."""
        if not self.is_complete():
            raise DomainError(
                f"cost override for ({self.crop_name}, {self.operation.value}) is incomplete"
            )
        return InputCostProfile(
            input_price=self.input_price,
            application_rate=self.application_rate,
            treatments_per_year=self.treatments_per_year,
            fuel_price=self.fuel_price,
            fuel_consumption=self.fuel_consumption,
            labour_cost=self.labour_cost,
            labour_hours=self.labour_hours,
            input_unit=self.input_unit or "kg",
        )


@dataclass(frozen=True)
class TechnologyOption:
    """A selectable main technology with supports, benefits and costs.

    base_investment is priced for the 50 ha reference size and scaled by
    total farm area at evaluation time. `custom` marks combinations the
    user defined outside the shipped catalog.
    """

    main: MainTechnology
    supports: frozenset[SupportTechnology]
    operation: OperationKind
    benefits: BenefitProfile
    base_investment: float
    recurring_cost: float = 0.0
    custom: bool = False

    def __post_init__(self):
        object.__setattr__(self, "supports", frozenset(self.supports))
        if self.base_investment < 0:
            raise DomainError("base_investment must be >= 0")
        if self.recurring_cost < 0:
            raise DomainError("recurring_cost must be >= 0")

    def sorted_supports(self) -> tuple[SupportTechnology, ...]:
        """Supports in stable (token) order; all iteration goes through this."""
        return tuple(sorted(self.supports, key=lambda s: s.value))

    def label(self) -> str:
        parts = [self.main.value]
        parts.extend(s.value for s in self.sorted_supports())
        return " + ".join(parts)


@dataclass(frozen=True)
class CropEntry:
    """One crop as grown on this farm: area, current yield and price."""

    crop: Crop
    area_ha: float
    yield_t_per_ha: float
    price_eur_per_t: float


@dataclass(frozen=True)
class FarmScenario:
    """The user's farm and selections; the unit of evaluation and storage."""

    region: Region
    crops: tuple[CropEntry, ...]
    options: tuple[TechnologyOption, ...]
    discount_rate: float = DEFAULT_DISCOUNT_RATE
    horizon_years: int = DEFAULT_HORIZON_YEARS
    cost_overrides: tuple[CostOverride, ...] = ()
    id: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "crops", tuple(self.crops))
        object.__setattr__(self, "options", tuple(self.options))
        object.__setattr__(self, "cost_overrides", tuple(self.cost_overrides))

    def total_area_ha(self) -> float:
        return sum(entry.area_ha for entry in self.crops)

    def operations(self) -> tuple[OperationKind, ...]:
        """Distinct operations covered by the selected options, token order."""
        return tuple(sorted({o.operation for o in self.options}, key=lambda k: k.value))

    def override_for(self, crop_name: str, operation: OperationKind) -> Optional[CostOverride]:
        for override in self.cost_overrides:
            if override.crop_name == crop_name and override.operation == operation:
                return override
        return None


@dataclass(frozen=True)
class Violation:
    """One broken invariant: the offending field path and the rule."""

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


def validate_scenario(scenario: FarmScenario) -> list[Violation]:
    """Check every domain invariant; violations are data, not failures.

    Pure: same scenario, same list, no state touched.
    """
    violations: list[Violation] = []

    if not scenario.crops:
        violations.append(Violation("crops", "at least one crop is required"))
    for i, entry in enumerate(scenario.crops):
        prefix = f"crops[{i}]"
        if entry.area_ha <= 0:
            violations.append(Violation(f"{prefix}.area", "area must be > 0 ha"))
        if entry.yield_t_per_ha <= 0:
            violations.append(Violation(f"{prefix}.yield", "yield must be > 0 t/ha"))
        if entry.price_eur_per_t < 0:
            violations.append(Violation(f"{prefix}.price", "price must be >= 0 EUR/t"))

    if scenario.discount_rate <= -1:
        violations.append(Violation("discount_rate", "discount rate must be > -1"))
    if scenario.horizon_years < 1:
        violations.append(Violation("horizon_years", "horizon must be >= 1 year"))

    for i, option in enumerate(scenario.options):
        prefix = f"options[{i}]"
        allowed = MAIN_TECHNOLOGY_OPERATIONS[option.main]
        if option.operation not in allowed:
            violations.append(Violation(
                f"{prefix}.operation",
                f"{option.main.value} cannot perform {option.operation.value}",
            ))
        scope = option.benefits.input_scope
        all_inputs_main = option.main in (MainTechnology.AUTO_STEER,
                                          MainTechnology.SECTION_CONTROL)
        if all_inputs_main and scope is not InputScope.ALL_INPUTS:
            violations.append(Violation(
                f"{prefix}.benefits.input_scope",
                f"{option.main.value} benefits apply to all inputs",
            ))
        if not all_inputs_main and scope is InputScope.ALL_INPUTS:
            violations.append(Violation(
                f"{prefix}.benefits.input_scope",
                f"{option.main.value} benefits are specific to its own operation",
            ))

    # Custom crops bring no seed data along, so the scenario itself must
    # supply a complete cost profile for every operation it uses.
    used_operations = scenario.operations()
    for i, entry in enumerate(scenario.crops):
        if entry.crop.builtin:
            continue
        for operation in used_operations:
            override = scenario.override_for(entry.crop.name, operation)
            if override is None or not override.is_complete():
                violations.append(Violation(
                    f"crops[{i}].cost_profile.{operation.value}",
                    f"custom crop {entry.crop.name!r} needs a complete cost profile "
                    f"for {operation.value}",
                ))

    return violations


# --- evaluation results -------------------------------------------------

@dataclass(frozen=True)
class AnnualBenefit:
    """Yearly money effects of one option, before discounting."""

    revenue_from_yield: float = 0.0
    input_saving: float = 0.0
    fuel_saving: float = 0.0
    labour_saving: float = 0.0
    recurring_cost: float = 0.0

    @property
    def annual_revenue(self) -> float:
        """R_t: yield revenue plus all savings."""
        return (self.revenue_from_yield + self.input_saving
                + self.fuel_saving + self.labour_saving)

    @property
    def annual_cost_delta(self) -> float:
        """C_t: recurring technology costs."""
        return self.recurring_cost

    @property
    def net_flow(self) -> float:
        return self.annual_revenue - self.annual_cost_delta


@dataclass(frozen=True)
class InputSaving:
    """Physical quantity of one input saved per year."""

    input: str
    quantity_per_year: float
    unit: str


@dataclass(frozen=True)
class OptionResult:
    option: TechnologyOption
    scaled_investment: float
    benefit: AnnualBenefit
    cash_flows: tuple[float, ...]
    npv: float
    irr: Optional[float]
    bcr: Optional[float]
    input_saved: tuple[InputSaving, ...]


@dataclass(frozen=True)
class SharedSupport:
    """A support technology counted once across several options."""

    support: SupportTechnology
    scaled_investment: float
    option_count: int


@dataclass(frozen=True)
class PortfolioResult:
    investment: float
    annual_revenue: float
    annual_cost_delta: float
    cash_flows: tuple[float, ...]
    npv: float
    irr: Optional[float]
    bcr: Optional[float]
    input_saved: tuple[InputSaving, ...]
    shared_supports: tuple[SharedSupport, ...] = ()


@dataclass(frozen=True)
class Deviation:
    """A value the user changed away from its catalog/default value."""

    path: str
    value: float
    default: Optional[float]


@dataclass(frozen=True)
class EvaluationResult:
    """Per-option and portfolio outcome of evaluating one scenario."""

    scenario: FarmScenario
    catalog_version: str
    total_area_ha: float
    options: tuple[OptionResult, ...]
    portfolio: PortfolioResult
    deviations: tuple[Deviation, ...] = ()
    uses_placeholder_investments: bool = False
    uses_placeholder_cost_profiles: bool = False
