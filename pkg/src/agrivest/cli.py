"""Batch front door: evaluate scenario files, sweep parameters, validate
catalogs, and serve the HTTP API.

Exit codes: 0 success, 2 validation problem (details on stderr), 3 I/O
problem. Scenario files use exactly the API request-body schema.
"""
from __future__ import annotations

import copy
import json
import os
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Optional

import click

from . import report as report_mod
from .catalog import CatalogError, CatalogParseError, load_catalog, seed_catalog_path
from .documents import DocumentValidationError, decode_scenario, loads
from .scenario import ScenarioValidationError, UnresolvableOptionError, evaluate

EXIT_VALIDATION = 2
EXIT_IO = 3

ENV_CATALOG = "AGRIVEST_CATALOG"


def _fail(code: int, message: str):
    click.echo(message, err=True)
    sys.exit(code)


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc}")


def _resolve_catalog_path(option_value: Optional[str]) -> str:
    if option_value:
        return option_value
    env_value = os.environ.get(ENV_CATALOG)
    if env_value:
        return env_value
    return str(seed_catalog_path())


def _load_catalog(path: str):
    if not Path(path).exists():
        _fail(EXIT_IO, f"catalog file not found: {path}")
    try:
        return load_catalog(path)
    except CatalogParseError as exc:
        _fail(EXIT_VALIDATION, f"catalog parse error: {exc}")
    except CatalogError as exc:
        _fail(EXIT_VALIDATION, f"catalog integrity error: {exc}")


def _load_scenario_document(path: str) -> dict:
    text = _read_file(path)
    try:
        return loads(text)
    except json.JSONDecodeError as exc:
        _fail(EXIT_VALIDATION, f"scenario file is not valid JSON: {exc}")


def _decode_scenario(document: dict):
    try:
        return decode_scenario(document)
    except DocumentValidationError as exc:
        for violation in exc.violations:
            click.echo(str(violation), err=True)
        sys.exit(EXIT_VALIDATION)


def _evaluate(scenario, catalog):
    try:
        return evaluate(scenario, catalog)
    except ScenarioValidationError as exc:
        for violation in exc.violations:
            click.echo(str(violation), err=True)
        sys.exit(EXIT_VALIDATION)
    except UnresolvableOptionError as exc:
        _fail(EXIT_VALIDATION, str(exc))


def _write_output(text: str, out: Optional[str]):
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write {out}: {exc}")


def _fmt_money(value) -> str:
    return "n/a" if value is None else f"{round(value, 2):.2f}"


def _fmt_ratio(value) -> str:
    return "n/a" if value is None else f"{round(value, 4):.4f}"


def _summary_table(result) -> str:
    headers = ("option", "investment", "npv", "irr", "bcr")
    rows = [
        (r.option.label(), _fmt_money(r.scaled_investment), _fmt_money(r.npv),
         _fmt_ratio(r.irr), _fmt_ratio(r.bcr))
        for r in result.options
    ]
    rows.append(("portfolio", _fmt_money(result.portfolio.investment),
                 _fmt_money(result.portfolio.npv), _fmt_ratio(result.portfolio.irr),
                 _fmt_ratio(result.portfolio.bcr)))
    widths = [max(len(headers[i]), *(len(row[i]) for row in rows))
              for i in range(len(headers))]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    if result.portfolio.input_saved:
        lines.append("")
        lines.append("input saved per year:")
        for saving in result.portfolio.input_saved:
            lines.append(f"  {saving.input}: {_fmt_money(saving.quantity_per_year)} "
                         f"{saving.unit}")
    return "\n".join(lines) + "\n"


@click.group()
def main():
    """Evaluate precision agriculture technology investments."""


@main.command("evaluate")
@click.option("--scenario", "scenario_path", required=True, help="Scenario file (JSON).")
@click.option("--catalog", "catalog_path", default=None,
              help="Catalog file; defaults to $AGRIVEST_CATALOG or the shipped seed.")
@click.option("--out", "out_path", default=None, help="Write output here instead of stdout.")
@click.option("--format", "output_format",
              type=click.Choice(["structured", "printable", "table"]), default="table")
def evaluate_command(scenario_path, catalog_path, out_path, output_format):
    """Evaluate a scenario file and print or write the report."""
    catalog = _load_catalog(_resolve_catalog_path(catalog_path))
    scenario = _decode_scenario(_load_scenario_document(scenario_path))
    result = _evaluate(scenario, catalog)
    if output_format == "table":
        _write_output(_summary_table(result), out_path)
    else:
        _write_output(report_mod.render_report(result, output_format), out_path)


def _camel(segment: str) -> str:
    head, *rest = segment.split("-")
    return head + "".join(part.capitalize() for part in rest)


def _set_path(document: dict, param: str, value: float):
    """Set a dotted kebab-case path (e.g. options.0.benefits.input-reduction)
    on a scenario document, in the document's own units."""
    segments = param.split(".")
    target = document
    for i, segment in enumerate(segments):
        last = i == len(segments) - 1
        if segment.isdigit():
            index = int(segment)
            if not isinstance(target, list) or index >= len(target):
                raise KeyError(param)
            if last:
                target[index] = value
            else:
                target = target[index]
        else:
            key = _camel(segment)
            if not isinstance(target, dict):
                raise KeyError(param)
            if last:
                # optional scalars like discountRate may be introduced here
                target[key] = value
            else:
                if key not in target:
                    raise KeyError(param)
                target = target[key]


@main.command("sweep")
@click.option("--scenario", "scenario_path", required=True)
@click.option("--catalog", "catalog_path", default=None)
@click.option("--param", "param", required=True,
              help="Dotted kebab-case path of a scalar, e.g. discount-rate or "
                   "options.0.benefits.input-reduction (document units).")
@click.option("--from", "start", required=True)
@click.option("--to", "stop", required=True)
@click.option("--step", "step", required=True)
def sweep_command(scenario_path, catalog_path, param, start, stop, step):
    """Evaluate a scenario over a grid of one parameter."""
    try:
        start_d, stop_d, step_d = Decimal(start), Decimal(stop), Decimal(step)
    except InvalidOperation:
        _fail(EXIT_VALIDATION, "sweep bounds and step must be decimal numbers")
    if step_d <= 0:
        _fail(EXIT_VALIDATION, "step must be > 0")
    if start_d > stop_d:
        _fail(EXIT_VALIDATION, "--from must not exceed --to")

    catalog = _load_catalog(_resolve_catalog_path(catalog_path))
    base_document = _load_scenario_document(scenario_path)

    grid: list[Decimal] = []
    value = start_d
    while value <= stop_d:
        grid.append(value)
        value += step_d

    discount_sweep = param == "discount-rate"
    rows = []
    flows = None
    irr_once = None
    for point in grid:
        document = copy.deepcopy(base_document)
        try:
            _set_path(document, param, float(point))
        except KeyError:
            _fail(EXIT_VALIDATION, f"parameter path {param!r} not found in scenario")
        scenario = _decode_scenario(document)
        result = _evaluate(scenario, catalog)
        flows = result.portfolio.cash_flows
        irr_once = result.portfolio.irr
        rows.append((point, result.portfolio.npv, result.portfolio.bcr,
                     result.portfolio.irr))

    lines = []
    if discount_sweep:
        lines.append(f"portfolio irr: {_fmt_ratio(irr_once)}")
        headers = (param, "npv", "bcr")
        table_rows = [(str(p), _fmt_money(npv), _fmt_ratio(bcr))
                      for p, npv, bcr, _ in rows]
    else:
        headers = (param, "npv", "bcr", "irr")
        table_rows = [(str(p), _fmt_money(npv), _fmt_ratio(bcr), _fmt_ratio(irr_value))
                      for p, npv, bcr, irr_value in rows]
    widths = [max(len(headers[i]), *(len(r[i]) for r in table_rows))
              for i in range(len(headers))]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)))
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
                 for row in table_rows)
    click.echo("\n".join(lines))

    if discount_sweep and flows is not None and all(f >= 0 for f in flows) \
            and any(f > 0 for f in flows):
        npvs = [npv for _, npv, _, _ in rows]
        if any(b >= a for a, b in zip(npvs, npvs[1:])):
            click.echo("warning: NPV is not strictly decreasing over the discount "
                       "grid despite nonnegative flows; check the scenario data",
                       err=True)


@main.group("catalog")
def catalog_group():
    """Catalog file utilities."""


@catalog_group.command("validate")
@click.argument("file", type=str)
def catalog_validate(file):
    """Integrity-check a catalog file."""
    catalog = _load_catalog(file)
    click.echo(f"OK: {len(catalog.benefit_rows)} benefit rows, "
               f"{len(catalog.cost_profiles)} cost profiles, "
               f"{len(catalog.main_investments) + len(catalog.support_investments)} "
               f"investment components, version {catalog.version}")


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
@click.option("--catalog", "catalog_path", default=None)
@click.option("--store", "store_root", default=None)
@click.option("--ui-origin", "ui_origin", default=None)
def serve_command(host, port, catalog_path, store_root, ui_origin):
    """Run the HTTP API."""
    import uvicorn

    from .api import create_app

    app = create_app(catalog_path=_resolve_catalog_path(catalog_path),
                     store_root=store_root, ui_origin=ui_origin)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
