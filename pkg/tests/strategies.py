"""Hypothesis strategies for scenarios and cash-flow instances.

Scenario values are drawn from decimal grids — the values a person can
actually type into the UI or a file — so document round-trips are exact.
"""
from __future__ import annotations

from hypothesis import strategies as st

from agrivest.catalog import Catalog
from agrivest.domain import (
    BUILTIN_CROPS,
    Crop,
    CropEntry,
    FarmScenario,
    Region,
    TechnologyOption,
)


def grid(lo: int, hi: int, scale: float):
    """Numbers lo*scale .. hi*scale on a decimal lattice."""
    return st.integers(min_value=lo, max_value=hi).map(lambda n: round(n * scale, 10))


def crop_entries():
    return st.sampled_from(sorted(BUILTIN_CROPS)).flatmap(
        lambda name: st.builds(
            CropEntry,
            crop=st.just(Crop.named(name)),
            area_ha=grid(1, 2000, 0.5),
            yield_t_per_ha=grid(1, 400, 0.25),
            price_eur_per_t=grid(0, 2000, 0.5),
        )
    )


def catalog_options(catalog: Catalog):
    """Options taken straight from catalog rows, defaults unedited."""
    def build(row_and_op):
        row, operation = row_and_op
        investment = catalog.investment_for(row.main, row.supports)
        return TechnologyOption(
            main=row.main,
            supports=row.supports,
            operation=operation,
            benefits=row.benefits,
            base_investment=investment.investment,
            recurring_cost=investment.recurring_cost,
        )

    rows = list(catalog.benefit_rows)
    return st.sampled_from(rows).flatmap(
        lambda row: st.tuples(st.just(row), st.sampled_from(list(row.operations)))
    ).map(build)


def scenarios(catalog: Catalog, max_crops: int = 3, max_options: int = 4):
    return st.builds(
        FarmScenario,
        region=st.sampled_from(list(Region)),
        crops=st.lists(crop_entries(), min_size=1, max_size=max_crops).map(tuple),
        options=st.lists(catalog_options(catalog), min_size=1, max_size=max_options,
                         unique_by=lambda o: (o.main, o.supports, o.operation))
                  .map(tuple),
        discount_rate=grid(0, 40, 0.005),
        horizon_years=st.integers(min_value=1, max_value=15),
    )


def flow_lists(min_years: int = 1, max_years: int = 30):
    """Nonnegative yearly flows with at least one strictly positive."""
    return st.lists(grid(0, 100000, 0.25), min_size=min_years, max_size=max_years) \
             .filter(lambda flows: any(f > 0 for f in flows))
