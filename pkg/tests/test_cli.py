import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from agrivest.catalog import seed_catalog_path
from agrivest.cli import main
from agrivest.documents import decode_scenario, loads
from agrivest.report import STRUCTURED, render_report
from agrivest.scenario import evaluate

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden-scenario.json"


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


class TestEvaluate:
    def test_structured_output_matches_engine_bytes(self, runner, catalog):
        result = invoke(runner, "evaluate", "--scenario", str(GOLDEN),
                        "--catalog", str(seed_catalog_path()),
                        "--format", "structured")
        assert result.exit_code == 0
        scenario = decode_scenario(loads(GOLDEN.read_text()))
        expected = render_report(evaluate(scenario, catalog), STRUCTURED)
        assert result.output == expected

    def test_table_output_lists_options_and_portfolio(self, runner):
        result = invoke(runner, "evaluate", "--scenario", str(GOLDEN))
        assert result.exit_code == 0
        assert "portfolio" in result.output
        assert "auto-steer + rtk-gps" in result.output
        assert "npv" in result.output

    def test_printable_output_is_html(self, runner, tmp_path):
        out = tmp_path / "report.html"
        result = invoke(runner, "evaluate", "--scenario", str(GOLDEN),
                        "--format", "printable", "--out", str(out))
        assert result.exit_code == 0
        assert out.read_text().startswith("<!DOCTYPE html>")

    def test_negative_area_exits_2_naming_the_field(self, runner, tmp_path):
        document = loads(GOLDEN.read_text())
        document["crops"][0]["area"] = -10
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(document))
        result = invoke(runner, "evaluate", "--scenario", str(bad))
        assert result.exit_code == 2
        assert "area" in result.output

    def test_missing_catalog_file_exits_3(self, runner):
        result = invoke(runner, "evaluate", "--scenario", str(GOLDEN),
                        "--catalog", "/nonexistent/catalog.json")
        assert result.exit_code == 3

    def test_missing_scenario_file_exits_3(self, runner):
        result = invoke(runner, "evaluate", "--scenario", "/nonexistent/s.json")
        assert result.exit_code == 3

    def test_malformed_scenario_exits_2(self, runner, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{broken")
        result = invoke(runner, "evaluate", "--scenario", str(bad))
        assert result.exit_code == 2


class TestSweep:
    def test_discount_sweep_has_eleven_strictly_decreasing_rows(self, runner, catalog):
        result = invoke(runner, "sweep", "--scenario", str(GOLDEN),
                        "--param", "discount-rate",
                        "--from", "0.00", "--to", "0.10", "--step", "0.01")
        assert result.exit_code == 0
        lines = [line for line in result.output.splitlines() if line]
        assert lines[0].startswith("portfolio irr:")
        data_lines = lines[3:]  # irr line, header, rule
        assert len(data_lines) == 11
        npvs = [float(line.split()[1]) for line in data_lines]
        assert npvs == sorted(npvs, reverse=True)
        assert len(set(npvs)) == len(npvs)
        # spot-check one grid point against a direct engine call
        document = loads(GOLDEN.read_text())
        document["discountRate"] = 0.1
        expected = evaluate(decode_scenario(document), catalog).portfolio.npv
        assert npvs[-1] == pytest.approx(round(expected, 2), abs=0.005)

    def test_benefit_percentage_sweep_includes_irr_column(self, runner):
        result = invoke(runner, "sweep", "--scenario", str(GOLDEN),
                        "--param", "options.0.benefits.input-reduction",
                        "--from", "0", "--to", "10", "--step", "5")
        assert result.exit_code == 0
        header = result.output.splitlines()[0]
        assert "irr" in header
        assert len([l for l in result.output.splitlines() if l]) == 2 + 3

    def test_zero_step_exits_2(self, runner):
        result = invoke(runner, "sweep", "--scenario", str(GOLDEN),
                        "--param", "discount-rate",
                        "--from", "0.0", "--to", "0.1", "--step", "0")
        assert result.exit_code == 2

    def test_reversed_bounds_exit_2(self, runner):
        result = invoke(runner, "sweep", "--scenario", str(GOLDEN),
                        "--param", "discount-rate",
                        "--from", "0.2", "--to", "0.1", "--step", "0.01")
        assert result.exit_code == 2

    def test_unknown_path_exits_2(self, runner):
        result = invoke(runner, "sweep", "--scenario", str(GOLDEN),
                        "--param", "options.9.benefits.input-reduction",
                        "--from", "0", "--to", "1", "--step", "1")
        assert result.exit_code == 2


class TestCatalogValidate:
    def test_seed_catalog_is_valid(self, runner):
        result = invoke(runner, "catalog", "validate", str(seed_catalog_path()))
        assert result.exit_code == 0
        assert "38 benefit rows" in result.output

    def test_duplicate_row_exits_2_naming_it(self, runner, tmp_path):
        document = loads(seed_catalog_path().read_text())
        document["benefits"].append(document["benefits"][5])
        bad = tmp_path / "dup.json"
        bad.write_text(json.dumps(document))
        result = invoke(runner, "catalog", "validate", str(bad))
        assert result.exit_code == 2
        assert "duplicate" in result.output

    def test_percentage_out_of_range_exits_2_naming_the_field(self, runner, tmp_path):
        document = loads(seed_catalog_path().read_text())
        document["benefits"][0]["fuelReduction"] = 150
        bad = tmp_path / "pct.json"
        bad.write_text(json.dumps(document))
        result = invoke(runner, "catalog", "validate", str(bad))
        assert result.exit_code == 2
        assert "fuelReduction" in result.output

    def test_missing_file_exits_3(self, runner):
        result = invoke(runner, "catalog", "validate", "/nonexistent/cat.json")
        assert result.exit_code == 3


def test_catalog_falls_back_to_environment_variable(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("AGRIVEST_CATALOG", str(seed_catalog_path()))
    result = CliRunner().invoke(main, ["evaluate", "--scenario", str(GOLDEN),
                                       "--format", "table"])
    assert result.exit_code == 0
