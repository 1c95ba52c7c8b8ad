"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one line via the conftest summary hook. Oracles here are
independent of the engine (exact rationals, arbitrary-precision decimals,
a separate interval-halving root finder).
"""
import random
import time
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient
from hypothesis import given, settings

from agrivest import finance
from agrivest.api import create_app
from agrivest.catalog import load_seed_catalog, seed_catalog_path
from agrivest.cli import main as cli_main
from agrivest.documents import decode_scenario, loads
from agrivest.domain import (
    Crop,
    CropEntry,
    FarmScenario,
    InputCostProfile,
    MainTechnology as M,
    OperationKind as Op,
    Region,
    SupportTechnology as S,
)
from agrivest.report import STRUCTURED, render_report
from agrivest.scenario import evaluate
from agrivest.store import RunStore

from oracles import npv_oracle, scale_oracle
from strategies import scenarios
from test_catalog import EXPECTED_ROWS
from test_finance import _vr_option
from test_scenario import catalog_option, wheat_scenario

SEED = load_seed_catalog()
GOLDEN = Path(__file__).parent / "fixtures" / "golden-scenario.json"


def test_c1_catalog_fidelity(catalog):
    started = time.perf_counter()
    assert len(catalog.benefit_rows) == 38
    for row, expected in zip(catalog.benefit_rows, EXPECTED_ROWS):
        main, supports, input_pct, yield_pct, fuel_pct, labour_pct = expected
        assert row.main is main and row.supports == frozenset(supports)
        got = (row.benefits.input_reduction_pct, row.benefits.yield_increase_pct,
               row.benefits.fuel_reduction_pct, row.benefits.labour_reduction_pct)
        assert got == (input_pct / 100, yield_pct / 100, fuel_pct / 100,
                       labour_pct / 100)
    # named spot checks
    auto = catalog.default_benefits(M.AUTO_STEER, {S.NORMAL_GPS}, Op.SEEDING)
    assert (auto.input_reduction_pct, auto.yield_increase_pct,
            auto.fuel_reduction_pct, auto.labour_reduction_pct) == (0.03, 0, 0.03, 0.01)
    uav = catalog.default_benefits(M.VR_SPRAYER, {S.SURVEY_UAV},
                                   Op.SPRAYING_INSECTICIDE)
    assert uav.input_reduction_pct == 0.20
    hoe = catalog.default_benefits(M.INTER_ROW_HOEING_CAMERA, set(),
                                   Op.MECHANICAL_WEEDING)
    assert hoe.labour_reduction_pct == 0.50
    assert time.perf_counter() - started < 1.0


def test_c2_npv_matches_brute_force_oracle():
    # Exact Eq.-1 value is 938.9638...; the oracle defines the expectation
    # and the engine must sit within one cent of it.
    oracle = float(npv_oracle(1000, [300] * 8, 0.05))
    assert oracle == pytest.approx(938.96, abs=0.01)
    assert finance.npv(1000, [300] * 8, 0.05) == pytest.approx(oracle, abs=0.01)


def test_c3_irr_root_property_on_random_instances():
    rng = random.Random(20260809)
    started = time.perf_counter()
    checked = 0
    attempts = 0
    while checked < 1000:
        attempts += 1
        assert attempts < 20000, "generator failed to produce enough instances"
        investment = rng.uniform(1.0, 1e6)
        years = rng.randint(1, 30)
        scale = rng.uniform(0.5, 3.0) * investment / years
        flows = [rng.uniform(0.0, 2.0 * scale) for _ in range(years)]
        if not any(f > 0 for f in flows):
            continue
        # a sign change must be available on the search bracket
        if finance.npv(investment, flows, finance.IRR_BRACKET_LOW) <= 0:
            continue
        if finance.npv(investment, flows, finance.IRR_BRACKET_HIGH) >= 0:
            continue
        root = finance.irr(investment, flows)
        assert root is not None
        assert abs(finance.npv(investment, flows, root)) \
            < 1e-9 * max(1.0, investment)
        checked += 1

    # single-period closed form, exact to 1e-9
    assert abs(finance.irr(1000, [1050, 0, 0]) - 0.05) < 1e-9
    for _ in range(100):
        investment = rng.uniform(1.0, 1e6)
        rate = rng.randint(1, 400) / 1000
        root = finance.irr(investment, [investment * (1 + rate)])
        assert abs(root - rate) < 1e-9
    assert time.perf_counter() - started < 5.0


def test_c4_scale_rule():
    oracle = scale_oracle(10000, 100)
    value = finance.scale_investment(10000, 100)
    assert value == pytest.approx(oracle, rel=1e-9)
    assert value == pytest.approx(15157.17, abs=0.01)
    assert finance.scale_investment(10000, 50) == 10000.0
    assert finance.scale_investment(10000, 25) == 10000.0
    assert finance.scale_investment(10000, 1) == 10000.0


def test_c5_bcr_npv_sign_coherence():
    rng = random.Random(991)
    for _ in range(2000):
        investment = rng.choice([0.0, rng.uniform(0, 1e5)])
        years = rng.randint(1, 20)
        flows = [rng.uniform(-5e4, 1e5) for _ in range(years)]
        rate = rng.uniform(-0.5, 0.5)
        ratio = finance.bcr(investment, flows, rate)
        if ratio is None:
            continue
        value = finance.npv(investment, flows, rate)
        if value > 0:
            assert ratio > 1
        elif value < 0:
            assert ratio < 1
        else:
            assert ratio == 1


def test_c6_shared_support_deduplication(catalog):
    steering = catalog_option(catalog, M.AUTO_STEER, {S.RTK_GPS}, Op.SEEDING)
    control = catalog_option(catalog, M.SECTION_CONTROL, {S.RTK_GPS},
                             Op.SPRAYING_HERBICIDE)
    scenario = wheat_scenario(catalog, [steering, control])
    result = evaluate(scenario, catalog)
    standalone = sum(r.scaled_investment for r in result.options)
    rtk_component = catalog.support_investments[S.RTK_GPS].investment
    scaled_rtk = finance.scale_investment(rtk_component, scenario.total_area_ha())
    assert result.portfolio.investment == standalone - scaled_rtk  # exact


def test_c7_end_to_end_byte_equivalence(store_root, catalog):
    scenario = decode_scenario(loads(GOLDEN.read_text()))
    engine_bytes = render_report(evaluate(scenario, catalog),
                                 STRUCTURED).encode("utf-8")

    cli = CliRunner().invoke(cli_main, ["evaluate", "--scenario", str(GOLDEN),
                                        "--catalog", str(seed_catalog_path()),
                                        "--format", "structured"],
                             catch_exceptions=False)
    assert cli.exit_code == 0
    cli_bytes = cli.output.encode("utf-8")

    app = create_app(catalog_path=seed_catalog_path(), store_root=store_root)
    with TestClient(app) as client:
        scenario_id = client.post("/v1/scenarios",
                                  json=loads(GOLDEN.read_text())).json()["id"]
        run_id = client.post(f"/v1/scenarios/{scenario_id}/evaluate",
                             params={"save": "true"}).json()["runId"]
        api_bytes = client.get(f"/v1/runs/{run_id}/report",
                               params={"format": "structured"}).content

    assert cli_bytes == engine_bytes
    assert api_bytes == engine_bytes


class TestC8PersistenceRoundTrip:
    @settings(max_examples=30, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_c8_save_load_reevaluate_exactly(self, tmp_path_factory, scenario):
        store = RunStore(tmp_path_factory.mktemp("acceptance-store"))
        result = evaluate(scenario, SEED)
        run = store.load_run(store.save_run(scenario, result))
        assert run.scenario == scenario
        assert run.result == result
        assert evaluate(run.scenario, SEED) == result


def test_c9_physical_monetary_consistency():
    rng = random.Random(4242)
    operations = [op for op in Op
                  if op not in (Op.MECHANICAL_WEEDING, Op.TILLAGE)]
    for _ in range(500):
        operation = rng.choice(operations)
        main = {Op.SEEDING: M.VR_SEEDER, Op.FERTILIZATION: M.VR_FERTILIZER,
                Op.LIMING: M.VR_LIME, Op.MANURE_APPLICATION: M.VR_MANURE}.get(
                    operation, M.VR_SPRAYER)
        profile = InputCostProfile(
            input_price=rng.uniform(0.01, 60.0),
            application_rate=rng.uniform(0.1, 3000.0),
            treatments_per_year=rng.randint(0, 6),
            fuel_price=rng.uniform(1.0, 2.0),
            fuel_consumption=rng.uniform(1.0, 20.0),
            labour_cost=rng.uniform(8.0, 40.0),
            labour_hours=rng.uniform(0.05, 2.0),
            input_unit=rng.choice(["kg", "l"]),
        )
        reduction = rng.randint(0, 400) / 1000
        area = rng.uniform(0.5, 2000.0)
        option = _vr_option(input_red=reduction, operation=operation, main=main)
        entry = CropEntry(Crop.named("wheat"), area, 8.0, 180.0)
        scenario = FarmScenario(region=Region.CENTRAL_EUROPE, crops=(entry,),
                                options=(option,))
        benefit = finance.annual_benefit(scenario, entry, option, profile)
        saved = finance.input_saved_quantity(scenario, entry, option, profile)
        implied = sum(s.quantity_per_year * profile.input_price for s in saved)
        assert benefit.input_saving == pytest.approx(implied, rel=1e-9, abs=1e-12)
