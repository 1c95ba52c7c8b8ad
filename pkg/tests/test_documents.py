import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agrivest.catalog import load_seed_catalog
from agrivest.documents import (
    DocumentValidationError,
    decode_scenario,
    decode_result,
    dumps,
    encode_result,
    encode_scenario,
    loads,
)
from agrivest.percent import fraction_to_percent, percent_to_fraction
from agrivest.scenario import evaluate

from strategies import grid, scenarios

SEED = load_seed_catalog()


class TestPercentCodec:
    def test_known_pairs(self):
        assert fraction_to_percent(0.03) == 3.0
        assert fraction_to_percent(0.07) == 7.0
        assert fraction_to_percent(0.5) == 50.0
        assert percent_to_fraction(3) == 0.03
        assert percent_to_fraction(12.5) == 0.125

    @given(percent=grid(0, 1000000, 0.0001))
    def test_round_trip_from_percent_space(self, percent):
        fraction = percent_to_fraction(percent)
        assert fraction_to_percent(fraction) == percent

    @given(percent=grid(0, 10000, 0.01))
    def test_fraction_stays_in_range(self, percent):
        assert 0 <= percent_to_fraction(percent) <= 1


class TestScenarioCodec:
    @settings(max_examples=50, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_encode_decode_is_identity(self, scenario):
        assert decode_scenario(encode_scenario(scenario)) == scenario

    @settings(max_examples=25, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_survives_json_text(self, scenario):
        assert decode_scenario(loads(dumps(encode_scenario(scenario)))) == scenario

    def test_missing_region_is_reported(self):
        with pytest.raises(DocumentValidationError) as excinfo:
            decode_scenario({"crops": [], "options": []})
        assert any("region" in v.field for v in excinfo.value.violations)

    def test_unknown_tokens_are_reported_per_field(self):
        document = {
            "region": "atlantis",
            "crops": [{"crop": "wheat", "area": 1, "yield": 1, "price": 1}],
            "options": [{
                "main": "teleporter", "supports": ["warp"], "operation": "seeding",
                "benefits": {"inputReduction": 1, "yieldIncrease": 0,
                             "fuelReduction": 0, "labourReduction": 0},
                "baseInvestment": 10,
            }],
        }
        with pytest.raises(DocumentValidationError) as excinfo:
            decode_scenario(document)
        fields = {v.field for v in excinfo.value.violations}
        assert "$.region" in fields
        assert "options[0].main" in fields
        assert "options[0].supports" in fields

    def test_percentage_above_hundred_rejected(self):
        document = {
            "region": "central-europe",
            "crops": [{"crop": "wheat", "area": 1, "yield": 1, "price": 1}],
            "options": [{
                "main": "vr-seeder", "supports": ["satellite"], "operation": "seeding",
                "benefits": {"inputReduction": 130, "yieldIncrease": 0,
                             "fuelReduction": 0, "labourReduction": 0},
                "baseInvestment": 10,
            }],
        }
        with pytest.raises(DocumentValidationError) as excinfo:
            decode_scenario(document)
        assert any("inputReduction" in v.field for v in excinfo.value.violations)

    def test_scope_defaults_by_main_technology(self):
        document = {
            "region": "central-europe",
            "crops": [{"crop": "wheat", "area": 1, "yield": 1, "price": 1}],
            "options": [
                {"main": "auto-steer", "supports": ["normal-gps"],
                 "operation": "seeding",
                 "benefits": {"inputReduction": 3, "yieldIncrease": 0,
                              "fuelReduction": 3, "labourReduction": 1},
                 "baseInvestment": 10000},
                {"main": "vr-seeder", "supports": ["satellite"],
                 "operation": "seeding",
                 "benefits": {"inputReduction": 3, "yieldIncrease": 0,
                              "fuelReduction": 0, "labourReduction": 0},
                 "baseInvestment": 15500},
            ],
        }
        scenario = decode_scenario(document)
        assert scenario.options[0].benefits.input_scope.value == "all-inputs"
        assert scenario.options[1].benefits.input_scope.value == "operation-specific"

    def test_defaults_for_rate_and_horizon(self):
        document = {
            "region": "central-europe",
            "crops": [{"crop": "wheat", "area": 1, "yield": 1, "price": 1}],
            "options": [],
        }
        scenario = decode_scenario(document)
        assert scenario.discount_rate == 0.04
        assert scenario.horizon_years == 8


class TestResultCodec:
    @settings(max_examples=25, deadline=None)
    @given(scenario=scenarios(SEED))
    def test_result_round_trip(self, scenario):
        result = evaluate(scenario, SEED)
        assert decode_result(loads(dumps(encode_result(result)))) == result
