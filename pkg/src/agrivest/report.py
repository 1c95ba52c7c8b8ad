"""Report rendering: a machine-readable structured document and a printable
self-contained HTML page carrying the same numbers.

The renderer copies figures out of the EvaluationResult and rounds them for
display (half-even, 2 decimals for euro amounts, 4 for ratios); it never
recomputes anything. No clock is read here: a timestamp appears only when
the caller passes one, so identical inputs give byte-identical output.
"""
from __future__ import annotations

import html
from typing import Optional

from .documents import dumps, encode_result, loads, decode_result
from .domain import EvaluationResult
from .percent import fraction_to_percent

REPORT_SCHEMA = "agrivest-report/1"

STRUCTURED = "structured"
PRINTABLE = "printable"
FORMATS = (STRUCTURED, PRINTABLE)


def _money(value: float) -> float:
    return round(value, 2)


def _ratio(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, 4)


def build_structured(result: EvaluationResult,
                     generated_at: Optional[str] = None) -> dict:
    """The structured report document; `result` holds the full-precision
    figures, the tables hold their display rounding."""
    scenario = result.scenario
    document: dict = {"schema": REPORT_SCHEMA}
    if generated_at is not None:
        document["generatedAt"] = generated_at
    document["scenario"] = {
        "region": scenario.region.value,
        "totalArea": result.total_area_ha,
        "discountRate": scenario.discount_rate,
        "horizonYears": scenario.horizon_years,
        "catalogVersion": result.catalog_version,
        "crops": [
            {
                "crop": entry.crop.name,
                "builtin": entry.crop.builtin,
                "area": entry.area_ha,
                "yield": entry.yield_t_per_ha,
                "price": entry.price_eur_per_t,
            }
            for entry in scenario.crops
        ],
    }
    document["optionTable"] = [
        {
            "technology": r.option.label(),
            "operation": r.option.operation.value,
            "scaledInvestment": _money(r.scaled_investment),
            "npv": _money(r.npv),
            "irr": _ratio(r.irr),
            "bcr": _ratio(r.bcr),
        }
        for r in result.options
    ]
    document["portfolio"] = {
        "investment": _money(result.portfolio.investment),
        "npv": _money(result.portfolio.npv),
        "irr": _ratio(result.portfolio.irr),
        "bcr": _ratio(result.portfolio.bcr),
        "sharedSupports": [
            {
                "support": s.support.value,
                "scaledInvestment": _money(s.scaled_investment),
                "optionCount": s.option_count,
            }
            for s in result.portfolio.shared_supports
        ],
    }
    document["inputSavings"] = [
        {
            "input": s.input,
            "quantityPerYear": _money(s.quantity_per_year),
            "unit": s.unit,
        }
        for s in result.portfolio.input_saved
    ]
    document["assumptions"] = {
        "discountRate": scenario.discount_rate,
        "horizonYears": scenario.horizon_years,
        "benefits": [
            {
                "technology": r.option.label(),
                "operation": r.option.operation.value,
                **{k: v for k, v in _benefit_percents(r).items()},
                "inputScope": r.option.benefits.input_scope.value,
                "custom": r.option.custom,
                "baseInvestment": r.option.base_investment,
                "recurringCost": r.option.recurring_cost,
            }
            for r in result.options
        ],
        "deviationsFromDefaults": [
            {"path": d.path, "value": d.value, "default": d.default}
            for d in result.deviations
        ],
        "placeholders": {
            "investments": result.uses_placeholder_investments,
            "costProfiles": result.uses_placeholder_cost_profiles,
        },
    }
    document["result"] = encode_result(result)
    return document


def _benefit_percents(option_result) -> dict:
    b = option_result.option.benefits
    return {
        "inputReduction": fraction_to_percent(b.input_reduction_pct),
        "yieldIncrease": fraction_to_percent(b.yield_increase_pct),
        "fuelReduction": fraction_to_percent(b.fuel_reduction_pct),
        "labourReduction": fraction_to_percent(b.labour_reduction_pct),
    }


def render_report(result: EvaluationResult, format: str = STRUCTURED,
                  generated_at: Optional[str] = None) -> str:
    if format == STRUCTURED:
        return dumps(build_structured(result, generated_at))
    if format == PRINTABLE:
        return render_printable(build_structured(result, generated_at))
    raise ValueError(f"unknown report format {format!r}; expected one of {FORMATS}")


def parse_structured_report(text: str) -> EvaluationResult:
    """Recover the full-precision EvaluationResult from a structured report."""
    document = loads(text)
    return decode_result(document["result"])


# -- printable --------------------------------------------------------------

_CSS = """
body { font-family: Georgia, 'Times New Roman', serif; margin: 2.5em auto;
       max-width: 52em; color: #1c2a1c; }
h1 { font-size: 1.5em; border-bottom: 2px solid #4a7c48; padding-bottom: 0.2em; }
h2 { font-size: 1.15em; margin-top: 1.6em; color: #2e522c; }
table { border-collapse: collapse; width: 100%; margin: 0.8em 0; }
th, td { border: 1px solid #9db89a; padding: 0.35em 0.6em; text-align: right; }
th:first-child, td:first-child { text-align: left; }
th { background: #e7efe6; }
tr.portfolio td { font-weight: bold; background: #f2f7f1; }
p.note { font-size: 0.85em; color: #555; }
@media print { body { margin: 0.5in; } h2 { page-break-after: avoid; } }
"""


def _fmt_money(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.2f}"


def _fmt_ratio(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def _fmt_percent(value: float) -> str:
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return f"{text or '0'}%"


def render_printable(structured: dict) -> str:
    """Self-contained HTML of a structured report, suitable for print-to-PDF.

    Every number shown is taken verbatim from the structured tables.
    """
    e = html.escape
    scenario = structured["scenario"]
    lines = [
        "<!DOCTYPE html>",
        "<html lang=\"en\">",
        "<head>",
        "<meta charset=\"utf-8\">",
        "<title>Precision agriculture investment report</title>",
        f"<style>{_CSS}</style>",
        "</head>",
        "<body>",
        "<h1>Precision agriculture investment report</h1>",
    ]
    if "generatedAt" in structured:
        lines.append(f"<p class=\"note\">Generated at {e(str(structured['generatedAt']))}</p>")

    lines.append("<h2>Farm</h2>")
    lines.append("<table><tr><th>Region</th><th>Total area (ha)</th>"
                 "<th>Discount rate</th><th>Horizon (years)</th><th>Catalog</th></tr>")
    lines.append(
        f"<tr><td>{e(scenario['region'])}</td><td>{scenario['totalArea']}</td>"
        f"<td>{scenario['discountRate']}</td><td>{scenario['horizonYears']}</td>"
        f"<td>{e(scenario['catalogVersion'])}</td></tr></table>"
    )
    lines.append("<table><tr><th>Crop</th><th>Area (ha)</th>"
                 "<th>Yield (t/ha)</th><th>Price (EUR/t)</th></tr>")
    for crop in scenario["crops"]:
        lines.append(
            f"<tr><td>{e(crop['crop'])}</td><td>{crop['area']}</td>"
            f"<td>{crop['yield']}</td><td>{crop['price']}</td></tr>"
        )
    lines.append("</table>")

    lines.append("<h2>Economic performance</h2>")
    lines.append("<table><tr><th>Technology</th><th>Operation</th>"
                 "<th>Investment (EUR)</th><th>NPV (EUR)</th><th>IRR</th><th>BCR</th></tr>")
    for row in structured["optionTable"]:
        lines.append(
            f"<tr><td>{e(row['technology'])}</td><td>{e(row['operation'])}</td>"
            f"<td>{_fmt_money(row['scaledInvestment'])}</td><td>{_fmt_money(row['npv'])}</td>"
            f"<td>{_fmt_ratio(row['irr'])}</td><td>{_fmt_ratio(row['bcr'])}</td></tr>"
        )
    portfolio = structured["portfolio"]
    lines.append(
        f"<tr class=\"portfolio\"><td>Whole portfolio</td><td></td>"
        f"<td>{_fmt_money(portfolio['investment'])}</td><td>{_fmt_money(portfolio['npv'])}</td>"
        f"<td>{_fmt_ratio(portfolio['irr'])}</td><td>{_fmt_ratio(portfolio['bcr'])}</td></tr>"
    )
    lines.append("</table>")
    if portfolio["sharedSupports"]:
        lines.append("<p class=\"note\">Shared support technologies counted once: "
                     + ", ".join(
                         f"{e(s['support'])} ({_fmt_money(s['scaledInvestment'])} EUR, "
                         f"used by {s['optionCount']} options)"
                         for s in portfolio["sharedSupports"])
                     + ".</p>")

    lines.append("<h2>Input saved per year</h2>")
    if structured["inputSavings"]:
        lines.append("<table><tr><th>Input</th><th>Quantity per year</th><th>Unit</th></tr>")
        for saving in structured["inputSavings"]:
            lines.append(
                f"<tr><td>{e(saving['input'])}</td>"
                f"<td>{_fmt_money(saving['quantityPerYear'])}</td>"
                f"<td>{e(saving['unit'])}</td></tr>"
            )
        lines.append("</table>")
    else:
        lines.append("<p>No physical input savings for the selected options.</p>")

    assumptions = structured["assumptions"]
    lines.append("<h2>Assumptions</h2>")
    lines.append("<table><tr><th>Technology</th><th>Operation</th><th>Input red.</th>"
                 "<th>Yield incr.</th><th>Fuel red.</th><th>Labour red.</th>"
                 "<th>Scope</th><th>Investment (EUR)</th><th>Recurring (EUR/yr)</th></tr>")
    for row in assumptions["benefits"]:
        technology = row["technology"] + (" (custom)" if row["custom"] else "")
        lines.append(
            f"<tr><td>{e(technology)}</td><td>{e(row['operation'])}</td>"
            f"<td>{_fmt_percent(row['inputReduction'])}</td>"
            f"<td>{_fmt_percent(row['yieldIncrease'])}</td>"
            f"<td>{_fmt_percent(row['fuelReduction'])}</td>"
            f"<td>{_fmt_percent(row['labourReduction'])}</td>"
            f"<td>{e(row['inputScope'])}</td>"
            f"<td>{row['baseInvestment']}</td><td>{row['recurringCost']}</td></tr>"
        )
    lines.append("</table>")
    lines.append(
        f"<p>Discount rate {assumptions['discountRate']}, "
        f"horizon {assumptions['horizonYears']} years.</p>"
    )
    if assumptions["deviationsFromDefaults"]:
        lines.append("<h2>Values changed from catalog defaults</h2>")
        lines.append("<table><tr><th>Field</th><th>Used value</th><th>Default</th></tr>")
        for deviation in assumptions["deviationsFromDefaults"]:
            default = deviation["default"]
            default_text = "none (user-defined)" if default is None else str(default)
            lines.append(
                f"<tr><td>{e(deviation['path'])}</td><td>{deviation['value']}</td>"
                f"<td>{e(default_text)}</td></tr>"
            )
        lines.append("</table>")
    placeholders = assumptions["placeholders"]
    if placeholders["investments"] or placeholders["costProfiles"]:
        flagged = []
        if placeholders["investments"]:
            flagged.append("investment costs")
        if placeholders["costProfiles"]:
            flagged.append("regional cost profiles")
        lines.append(
            "<p class=\"note\">The following figures come from editable placeholder "
            "seed data and should be replaced with farm-specific quotes: "
            + ", ".join(flagged) + ".</p>"
        )
    lines.append("</body>")
    lines.append("</html>")
    return "\n".join(lines) + "\n"
