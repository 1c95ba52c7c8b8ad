"""Relational catalog of technology combinations, benefits, costs and
investments, loaded from a single JSON document.

The loaded Catalog is immutable; reloading produces a fresh value. All
defaults come from the document — nothing is hard-coded here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Mapping, Optional, Sequence, Union

from .domain import (
    BenefitProfile,
    CostOverride,
    Crop,
    InputCostProfile,
    InputScope,
    MainTechnology,
    OperationKind,
    Region,
    SupportTechnology,
)
from .percent import fraction_to_percent, percent_to_fraction


class CatalogError(Exception):
    """Base class for catalog loading problems."""


class CatalogParseError(CatalogError):
    """The document is not syntactically a catalog."""


class CatalogIntegrityError(CatalogError):
    """The document parsed but violates a catalog invariant."""


class CombinationNotFoundError(LookupError):
    """No benefit row for the requested (main, supports, operation)."""

    def __init__(self, main: MainTechnology,
                 supports: frozenset[SupportTechnology],
                 operation: OperationKind):
        self.main = main
        self.supports = supports
        self.operation = operation
        tokens = ", ".join(sorted(s.value for s in supports)) or "no supports"
        super().__init__(
            f"no catalog combination for {main.value} with {tokens} on {operation.value}"
        )


class ProfileNotFoundError(LookupError):
    """No cost profile for the requested (region, crop, operation)."""

    def __init__(self, region: Region, crop_name: str, operation: OperationKind):
        self.region = region
        self.crop_name = crop_name
        self.operation = operation
        super().__init__(
            f"no cost profile for crop {crop_name!r} / {operation.value} in {region.value}"
        )


_ALL_INPUTS_MAINS = (MainTechnology.AUTO_STEER, MainTechnology.SECTION_CONTROL)


@dataclass(frozen=True)
class BenefitRow:
    """One catalog combination: a default-benefit library entry."""

    group: str
    main: MainTechnology
    supports: frozenset[SupportTechnology]
    operations: tuple[OperationKind, ...]
    benefits: BenefitProfile
    note: Optional[str] = None


@dataclass(frozen=True)
class InvestmentComponent:
    investment: float
    recurring_cost: float
    provenance: str = "placeholder"


@dataclass(frozen=True)
class Catalog:
    version: str
    benefit_rows: tuple[BenefitRow, ...]
    capability: Mapping[MainTechnology, tuple[OperationKind, ...]]
    cost_profiles: Mapping[tuple[Region, str, OperationKind], InputCostProfile]
    profile_provenance: Mapping[tuple[Region, str, OperationKind], str]
    main_investments: Mapping[MainTechnology, InvestmentComponent]
    support_investments: Mapping[SupportTechnology, InvestmentComponent]
    notes: tuple[str, ...] = ()
    _index: Mapping[tuple, BenefitRow] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for row in self.benefit_rows:
            for operation in row.operations:
                index[(row.main, row.supports, operation)] = row
        object.__setattr__(self, "_index", index)

    # -- queries ----------------------------------------------------------

    def default_benefits(self, main: MainTechnology,
                         supports: Union[frozenset, set, Sequence],
                         operation: OperationKind) -> BenefitProfile:
        """Exact-set lookup of the default benefits for a combination.

        No subset or superset fallback: sibling rows differ materially, so
        a near-miss must surface as not-found and force explicit input.
        """
        key = (main, frozenset(supports), operation)
        row = self._index.get(key)
        if row is None:
            raise CombinationNotFoundError(main, frozenset(supports), operation)
        return row.benefits

    def find_row(self, main: MainTechnology, supports: Union[frozenset, set, Sequence],
                 operation: OperationKind) -> Optional[BenefitRow]:
        return self._index.get((main, frozenset(supports), operation))

    def compatible_options(self, operation: OperationKind) -> list[BenefitRow]:
        """Catalog combinations able to perform the operation, catalog order."""
        return [row for row in self.benefit_rows if operation in row.operations]

    def investment_for(self, main: MainTechnology,
                       supports: Union[frozenset, set, Sequence]) -> InvestmentComponent:
        """Combination investment composed from main + support components."""
        main_component = self.main_investments.get(main)
        if main_component is None:
            raise KeyError(f"no investment component for main {main.value!r}")
        investment = main_component.investment
        recurring = main_component.recurring_cost
        provenance = main_component.provenance
        for support in sorted(frozenset(supports), key=lambda s: s.value):
            component = self.support_investments.get(support)
            if component is None:
                raise KeyError(f"no investment component for support {support.value!r}")
            investment += component.investment
            recurring += component.recurring_cost
            if component.provenance == "placeholder":
                provenance = "placeholder"
        return InvestmentComponent(investment, recurring, provenance)

    def cost_profile(self, region: Region, crop: Crop, operation: OperationKind,
                     overrides: Sequence[CostOverride] = ()) -> InputCostProfile:
        """Seed profile for builtin crops, scenario-supplied for custom ones,
        with any matching override applied field by field."""
        override = None
        for candidate in overrides:
            if candidate.crop_name == crop.name and candidate.operation == operation:
                override = candidate
                break
        if crop.builtin:
            base = self.cost_profiles.get((region, crop.name, operation))
            if base is None:
                raise ProfileNotFoundError(region, crop.name, operation)
            return override.apply_to(base) if override else base
        if override is None or not override.is_complete():
            raise ProfileNotFoundError(region, crop.name, operation)
        return override.as_profile()


# -- loading ---------------------------------------------------------------

def _parse_enum(enum_cls, token, where):
    try:
        return enum_cls(token)
    except ValueError:
        raise CatalogIntegrityError(
            f"{where}: unknown {enum_cls.__name__} token {token!r}"
        ) from None


def _require(mapping, key, where):
    if key not in mapping:
        raise CatalogParseError(f"{where}: missing required field {key!r}")
    return mapping[key]


def _parse_percent(raw, where):
    if not isinstance(raw, (int, float)) or isinstance(raw, bool):
        raise CatalogIntegrityError(f"{where}: expected a number, got {raw!r}")
    if not 0 <= raw <= 100:
        raise CatalogIntegrityError(f"{where}: percentage {raw} outside [0, 100]")
    return percent_to_fraction(float(raw))


def _parse_benefit_row(entry, index) -> BenefitRow:
    where = f"benefits[{index}]"
    if not isinstance(entry, dict):
        raise CatalogParseError(f"{where}: expected an object")
    main = _parse_enum(MainTechnology, _require(entry, "main", where), where)
    supports = frozenset(
        _parse_enum(SupportTechnology, token, f"{where}.supports")
        for token in _require(entry, "supports", where)
    )
    operations = tuple(
        _parse_enum(OperationKind, token, f"{where}.operations")
        for token in _require(entry, "operations", where)
    )
    if not operations:
        raise CatalogIntegrityError(f"{where}: operations must not be empty")
    scope = InputScope(_require(entry, "inputScope", where))
    expected_scope = (InputScope.ALL_INPUTS if main in _ALL_INPUTS_MAINS
                      else InputScope.OPERATION_SPECIFIC)
    if scope is not expected_scope:
        raise CatalogIntegrityError(
            f"{where}: inputScope {scope.value!r} not allowed for {main.value}"
        )
    benefits = BenefitProfile(
        input_reduction_pct=_parse_percent(_require(entry, "inputReduction", where),
                                           f"{where}.inputReduction"),
        yield_increase_pct=_parse_percent(_require(entry, "yieldIncrease", where),
                                          f"{where}.yieldIncrease"),
        fuel_reduction_pct=_parse_percent(_require(entry, "fuelReduction", where),
                                          f"{where}.fuelReduction"),
        labour_reduction_pct=_parse_percent(_require(entry, "labourReduction", where),
                                            f"{where}.labourReduction"),
        input_scope=scope,
    )
    return BenefitRow(
        group=str(entry.get("group", "")),
        main=main,
        supports=supports,
        operations=operations,
        benefits=benefits,
        note=entry.get("note"),
    )


def _parse_cost_profile(entry, index):
    where = f"costProfiles[{index}]"
    if not isinstance(entry, dict):
        raise CatalogParseError(f"{where}: expected an object")
    region = _parse_enum(Region, _require(entry, "region", where), where)
    crop = str(_require(entry, "crop", where))
    operation = _parse_enum(OperationKind, _require(entry, "operation", where), where)

    def number(key):
        raw = _require(entry, key, where)
        if not isinstance(raw, (int, float)) or isinstance(raw, bool):
            raise CatalogIntegrityError(f"{where}.{key}: expected a number, got {raw!r}")
        if raw < 0:
            raise CatalogIntegrityError(f"{where}.{key}: must be >= 0, got {raw}")
        return float(raw)

    profile = InputCostProfile(
        input_price=number("inputPrice"),
        application_rate=number("applicationRate"),
        treatments_per_year=number("treatmentsPerYear"),
        fuel_price=number("fuelPrice"),
        fuel_consumption=number("fuelConsumption"),
        labour_cost=number("labourCost"),
        labour_hours=number("labourHours"),
        input_unit=str(_require(entry, "inputUnit", where)),
    )
    provenance = str(entry.get("provenance", "placeholder"))
    return (region, crop, operation), profile, provenance


def load_catalog(source: Union[str, Path, IO, dict]) -> Catalog:
    """Load and integrity-check a catalog document.

    Accepts a filesystem path, an open text stream, or an already-parsed
    document. Raises CatalogParseError for malformed documents and
    CatalogIntegrityError for well-formed documents that break invariants.
    """
    if isinstance(source, dict):
        document = source
    else:
        try:
            if isinstance(source, (str, Path)):
                text = Path(source).read_text(encoding="utf-8")
            else:
                text = source.read()
        except OSError as exc:
            raise CatalogParseError(f"cannot read catalog: {exc}") from exc
        if not text.strip():
            raise CatalogParseError("catalog document is empty")
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CatalogParseError(f"catalog is not valid JSON: {exc}") from exc

    if not isinstance(document, dict):
        raise CatalogParseError("catalog document must be a JSON object")
    version = document.get("version")
    if not isinstance(version, str) or not version:
        raise CatalogParseError("catalog must carry a non-empty 'version' string")
    for key in ("benefits", "compatibility", "costProfiles", "investments"):
        if not isinstance(document.get(key), list):
            raise CatalogParseError(f"catalog must carry a {key!r} array")

    capability: dict[MainTechnology, tuple[OperationKind, ...]] = {}
    for i, entry in enumerate(document["compatibility"]):
        where = f"compatibility[{i}]"
        main = _parse_enum(MainTechnology, _require(entry, "main", where), where)
        operations = tuple(
            _parse_enum(OperationKind, token, f"{where}.operations")
            for token in _require(entry, "operations", where)
        )
        if main in capability:
            raise CatalogIntegrityError(f"{where}: duplicate entry for {main.value}")
        capability[main] = operations

    rows = []
    seen: dict[tuple, int] = {}
    for i, entry in enumerate(document["benefits"]):
        row = _parse_benefit_row(entry, i)
        allowed = capability.get(row.main)
        if allowed is None:
            raise CatalogIntegrityError(
                f"benefits[{i}]: {row.main.value} missing from compatibility"
            )
        for operation in row.operations:
            if operation not in allowed:
                raise CatalogIntegrityError(
                    f"benefits[{i}]: {row.main.value} is not compatible with "
                    f"{operation.value}"
                )
            key = (row.main, row.supports, operation)
            if key in seen:
                tokens = ", ".join(sorted(s.value for s in row.supports)) or "no supports"
                raise CatalogIntegrityError(
                    f"benefits[{i}]: duplicate combination ({row.main.value}; {tokens}; "
                    f"{operation.value}) already defined by benefits[{seen[key]}]"
                )
            seen[key] = i
        rows.append(row)

    cost_profiles = {}
    profile_provenance = {}
    for i, entry in enumerate(document["costProfiles"]):
        key, profile, provenance = _parse_cost_profile(entry, i)
        if key in cost_profiles:
            region, crop, operation = key
            raise CatalogIntegrityError(
                f"costProfiles[{i}]: duplicate profile for ({region.value}, {crop}, "
                f"{operation.value})"
            )
        cost_profiles[key] = profile
        profile_provenance[key] = provenance

    main_investments: dict[MainTechnology, InvestmentComponent] = {}
    support_investments: dict[SupportTechnology, InvestmentComponent] = {}
    for i, entry in enumerate(document["investments"]):
        where = f"investments[{i}]"
        component = str(_require(entry, "component", where))
        investment = _require(entry, "investment", where)
        recurring = entry.get("recurringCost", 0.0)
        for value, label in ((investment, "investment"), (recurring, "recurringCost")):
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value < 0:
                raise CatalogIntegrityError(f"{where}.{label}: must be a number >= 0")
        record = InvestmentComponent(float(investment), float(recurring),
                                     str(entry.get("provenance", "placeholder")))
        if component == "main":
            tech = _parse_enum(MainTechnology, _require(entry, "technology", where), where)
            if tech in main_investments:
                raise CatalogIntegrityError(f"{where}: duplicate main component {tech.value}")
            main_investments[tech] = record
        elif component == "support":
            tech = _parse_enum(SupportTechnology, _require(entry, "technology", where), where)
            if tech in support_investments:
                raise CatalogIntegrityError(f"{where}: duplicate support component {tech.value}")
            support_investments[tech] = record
        else:
            raise CatalogParseError(f"{where}: component must be 'main' or 'support'")

    # every benefit row must be priceable
    for i, row in enumerate(rows):
        if row.main not in main_investments:
            raise CatalogIntegrityError(
                f"benefits[{i}]: no investment component for main {row.main.value!r}"
            )
        for support in row.supports:
            if support not in support_investments:
                raise CatalogIntegrityError(
                    f"benefits[{i}]: no investment component for support {support.value!r}"
                )

    notes = tuple(str(note) for note in document.get("notes", []))

    return Catalog(
        version=version,
        benefit_rows=tuple(rows),
        capability=capability,
        cost_profiles=cost_profiles,
        profile_provenance=profile_provenance,
        main_investments=main_investments,
        support_investments=support_investments,
        notes=notes,
    )


def catalog_to_document(catalog: Catalog) -> dict:
    """Serialize a Catalog back to its document form (load round-trips)."""
    benefits = []
    for row in catalog.benefit_rows:
        entry = {
            "group": row.group,
            "main": row.main.value,
            "supports": sorted(s.value for s in row.supports),
            "operations": [op.value for op in row.operations],
            "inputScope": row.benefits.input_scope.value,
            "inputReduction": fraction_to_percent(row.benefits.input_reduction_pct),
            "yieldIncrease": fraction_to_percent(row.benefits.yield_increase_pct),
            "fuelReduction": fraction_to_percent(row.benefits.fuel_reduction_pct),
            "labourReduction": fraction_to_percent(row.benefits.labour_reduction_pct),
        }
        if row.note:
            entry["note"] = row.note
        benefits.append(entry)

    compatibility = [
        {"main": main.value, "operations": [op.value for op in operations]}
        for main, operations in catalog.capability.items()
    ]

    cost_profiles = []
    for (region, crop, operation), profile in catalog.cost_profiles.items():
        cost_profiles.append({
            "region": region.value,
            "crop": crop,
            "operation": operation.value,
            "inputPrice": profile.input_price,
            "inputUnit": profile.input_unit,
            "applicationRate": profile.application_rate,
            "treatmentsPerYear": profile.treatments_per_year,
            "fuelPrice": profile.fuel_price,
            "fuelConsumption": profile.fuel_consumption,
            "labourCost": profile.labour_cost,
            "labourHours": profile.labour_hours,
            "provenance": catalog.profile_provenance.get((region, crop, operation),
                                                         "placeholder"),
        })

    investments = []
    for tech, component in catalog.main_investments.items():
        investments.append({
            "component": "main",
            "technology": tech.value,
            "investment": component.investment,
            "recurringCost": component.recurring_cost,
            "provenance": component.provenance,
        })
    for tech, component in catalog.support_investments.items():
        investments.append({
            "component": "support",
            "technology": tech.value,
            "investment": component.investment,
            "recurringCost": component.recurring_cost,
            "provenance": component.provenance,
        })

    document = {
        "version": catalog.version,
        "benefits": benefits,
        "compatibility": compatibility,
        "costProfiles": cost_profiles,
        "investments": investments,
    }
    if catalog.notes:
        document["notes"] = list(catalog.notes)
    return document


def seed_catalog_path() -> Path:
    """Location of the shipped seed catalog."""
    return Path(__file__).resolve().parent / "data" / "seed_catalog.json"


def load_seed_catalog() -> Catalog:
    return load_catalog(seed_catalog_path())
