import pytest
from hypothesis import given, settings

from agrivest import finance
from agrivest.catalog import load_seed_catalog
from agrivest.domain import (
    BenefitProfile,
    Crop,
    CropEntry,
    FarmScenario,
    InputScope,
    MainTechnology as M,
    OperationKind as Op,
    Region,
    SupportTechnology as S,
    TechnologyOption,
)
from agrivest.scenario import ScenarioValidationError, UnresolvableOptionError, evaluate

from strategies import scenarios


def catalog_option(catalog, main, supports, operation):
    row = catalog.find_row(main, frozenset(supports), operation)
    assert row is not None, "fixture must reference a real catalog row"
    investment = catalog.investment_for(main, supports)
    return TechnologyOption(
        main=main, supports=frozenset(supports), operation=operation,
        benefits=row.benefits, base_investment=investment.investment,
        recurring_cost=investment.recurring_cost,
    )


def wheat_scenario(catalog, options, area=120.0, discount=0.04, horizon=8):
    return FarmScenario(
        region=Region.CENTRAL_EUROPE,
        crops=(CropEntry(Crop.named("wheat"), area, 7.5, 185.0),),
        options=tuple(options),
        discount_rate=discount,
        horizon_years=horizon,
    )


class TestEvaluate:
    def test_single_option_portfolio_equals_the_option(self, catalog):
        option = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                                Op.FERTILIZATION)
        result = evaluate(wheat_scenario(catalog, [option]), catalog)
        assert len(result.options) == 1
        r = result.options[0]
        p = result.portfolio
        assert p.investment == r.scaled_investment
        assert p.cash_flows == r.cash_flows
        assert p.npv == r.npv
        assert p.irr == r.irr
        assert p.bcr == r.bcr
        assert p.input_saved == r.input_saved
        assert p.shared_supports == ()

    def test_zero_options_is_a_validation_error(self, catalog):
        with pytest.raises(ScenarioValidationError) as excinfo:
            evaluate(wheat_scenario(catalog, []), catalog)
        assert any(v.field == "options" for v in excinfo.value.violations)

    def test_invalid_scenario_raises_with_violations(self, catalog):
        option = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                                Op.FERTILIZATION)
        scenario = wheat_scenario(catalog, [option], area=-3.0)
        with pytest.raises(ScenarioValidationError) as excinfo:
            evaluate(scenario, catalog)
        assert any("area" in v.field for v in excinfo.value.violations)

    def test_unknown_combination_without_custom_flag_is_unresolvable(self, catalog):
        option = TechnologyOption(
            main=M.VR_SEEDER, supports=frozenset({S.N_SENSOR}), operation=Op.SEEDING,
            benefits=BenefitProfile(input_reduction_pct=0.03),
            base_investment=20000.0,
        )
        with pytest.raises(UnresolvableOptionError):
            evaluate(wheat_scenario(catalog, [option]), catalog)

    def test_custom_combination_evaluates_with_user_figures(self, catalog):
        option = TechnologyOption(
            main=M.VR_SEEDER, supports=frozenset({S.N_SENSOR}), operation=Op.SEEDING,
            benefits=BenefitProfile(input_reduction_pct=0.03),
            base_investment=20000.0, custom=True,
        )
        result = evaluate(wheat_scenario(catalog, [option]), catalog)
        assert result.options[0].benefit.input_saving > 0
        # user-defined figures are all listed in the assumptions deviations
        paths = {d.path for d in result.deviations}
        assert "options[0].baseInvestment" in paths

    def test_shared_support_counted_once(self, catalog):
        steering = catalog_option(catalog, M.AUTO_STEER, {S.RTK_GPS}, Op.SEEDING)
        control = catalog_option(catalog, M.SECTION_CONTROL, {S.RTK_GPS},
                                 Op.SPRAYING_HERBICIDE)
        scenario = wheat_scenario(catalog, [steering, control])
        result = evaluate(scenario, catalog)

        standalone_sum = sum(r.scaled_investment for r in result.options)
        rtk = catalog.support_investments[S.RTK_GPS]
        scaled_rtk = finance.scale_investment(rtk.investment,
                                              scenario.total_area_ha())
        assert result.portfolio.investment == standalone_sum - scaled_rtk
        assert result.portfolio.investment < standalone_sum
        shared = result.portfolio.shared_supports
        assert len(shared) == 1
        assert shared[0].support is S.RTK_GPS
        assert shared[0].option_count == 2
        assert shared[0].scaled_investment == scaled_rtk

    def test_no_sharing_means_no_discount(self, catalog):
        first = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                               Op.FERTILIZATION)
        second = catalog_option(catalog, M.VR_SEEDER, {S.SATELLITE}, Op.SEEDING)
        result = evaluate(wheat_scenario(catalog, [first, second]), catalog)
        assert result.portfolio.investment == pytest.approx(
            sum(r.scaled_investment for r in result.options), rel=0, abs=0)
        assert result.portfolio.shared_supports == ()

    def test_portfolio_flows_are_the_plain_sum(self, catalog):
        steering = catalog_option(catalog, M.AUTO_STEER, {S.RTK_GPS}, Op.SEEDING)
        control = catalog_option(catalog, M.SECTION_CONTROL, {S.RTK_GPS},
                                 Op.SPRAYING_HERBICIDE)
        result = evaluate(wheat_scenario(catalog, [steering, control]), catalog)
        for t in range(8):
            assert result.portfolio.cash_flows[t] == pytest.approx(
                sum(r.cash_flows[t] for r in result.options), rel=1e-15)

    def test_npv_self_consistency(self, catalog):
        option = catalog_option(catalog, M.AUTO_STEER, {S.RTK_GPS, S.CTF},
                                Op.FERTILIZATION)
        scenario = wheat_scenario(catalog, [option], discount=0.06)
        result = evaluate(scenario, catalog)
        for r in list(result.options) + [result.portfolio]:
            investment = getattr(r, "scaled_investment", None)
            if investment is None:
                investment = r.investment
            assert r.npv == finance.npv(investment, r.cash_flows, 0.06)

    def test_determinism(self, catalog):
        steering = catalog_option(catalog, M.AUTO_STEER, {S.RTK_GPS, S.CTF},
                                  Op.SEEDING)
        fert = catalog_option(catalog, M.VR_FERTILIZER,
                              {S.N_SENSOR, S.YIELD_MAP, S.SOIL_EC}, Op.FERTILIZATION)
        scenario = FarmScenario(
            region=Region.SOUTHEAST_EUROPE,
            crops=(CropEntry(Crop.named("wheat"), 220.0, 6.5, 190.0),
                   CropEntry(Crop.named("maize"), 80.0, 9.0, 175.0)),
            options=(steering, fert),
            discount_rate=0.055,
            horizon_years=10,
        )
        assert evaluate(scenario, catalog) == evaluate(scenario, catalog)

    def test_result_echo_carries_no_storage_id(self, catalog):
        option = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                                Op.FERTILIZATION)
        scenario = FarmScenario(
            region=Region.CENTRAL_EUROPE,
            crops=(CropEntry(Crop.named("wheat"), 100.0, 7.5, 185.0),),
            options=(option,),
            id="abc123",
        )
        result = evaluate(scenario, catalog)
        assert result.scenario.id is None

    def test_catalog_defaults_produce_no_deviations(self, catalog):
        option = catalog_option(catalog, M.VR_LIME,
                                {S.SATELLITE, S.YIELD_MAP, S.SOIL_EC}, Op.LIMING)
        result = evaluate(wheat_scenario(catalog, [option]), catalog)
        assert result.deviations == ()

    def test_edited_benefit_and_rate_show_up_as_deviations(self, catalog):
        base = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                              Op.FERTILIZATION)
        edited = TechnologyOption(
            main=base.main, supports=base.supports, operation=base.operation,
            benefits=BenefitProfile(input_reduction_pct=0.05),
            base_investment=base.base_investment + 1000,
            recurring_cost=base.recurring_cost,
        )
        result = evaluate(wheat_scenario(catalog, [edited], discount=0.07), catalog)
        paths = {d.path: d for d in result.deviations}
        assert paths["options[0].benefits.inputReduction"].value == 5
        assert paths["options[0].benefits.inputReduction"].default == 1
        assert paths["options[0].baseInvestment"].default == base.base_investment
        assert paths["discountRate"].value == 0.07

    def test_placeholder_flags(self, catalog):
        option = catalog_option(catalog, M.VR_FERTILIZER, {S.N_SENSOR},
                                Op.FERTILIZATION)
        result = evaluate(wheat_scenario(catalog, [option]), catalog)
        assert result.uses_placeholder_investments
        assert result.uses_placeholder_cost_profiles


# hypothesis strategies need the catalog at collection time, so the property
# tests use a module-level instance rather than the session fixture
SEED = load_seed_catalog()


class TestEvaluateProperties:
    @settings(max_examples=40, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_dedup_never_exceeds_standalone_sum(self, scenario):
        result = evaluate(scenario, SEED)
        standalone = sum(r.scaled_investment for r in result.options)
        assert result.portfolio.investment <= standalone + 1e-9
        shares_support = bool(result.portfolio.shared_supports)
        if not shares_support:
            assert result.portfolio.investment == standalone

    @settings(max_examples=40, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_portfolio_flow_additivity(self, scenario):
        result = evaluate(scenario, SEED)
        for t in range(scenario.horizon_years):
            total = sum(r.cash_flows[t] for r in result.options)
            assert result.portfolio.cash_flows[t] == pytest.approx(total, rel=1e-12,
                                                                   abs=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_evaluation_is_deterministic(self, scenario):
        assert evaluate(scenario, SEED) == evaluate(scenario, SEED)
