#!/usr/bin/env python3
"""Regenerate the shipped seed catalog (src/agrivest/data/seed_catalog.json).

The benefit rows are the default-benefit library for precision agriculture
technology combinations. Cost profiles and investment figures are editable
placeholders (no public regional price survey ships with the package);
they are marked provenance=placeholder so downstream surfaces can flag them.
"""
import json
from pathlib import Path

VERSION = "seed-2026.08"

SPRAYING = ["spraying-fungicide", "spraying-herbicide",
            "spraying-insecticide", "spraying-growth-regulator"]
AUTO_STEER_OPS = ["seeding", "fertilization", *SPRAYING, "liming", "manure-application"]
SECTION_CONTROL_OPS = ["seeding", "fertilization", *SPRAYING]

ALL_OPS = ["seeding", "fertilization", *SPRAYING,
           "mechanical-weeding", "tillage", "liming", "manure-application"]
CROPS = ["wheat", "maize", "sugar-beet", "canola", "potato"]


def row(group, main, supports, operations, scope,
        input_red=0, yield_inc=0, fuel_red=0, labour_red=0, note=None):
    entry = {
        "group": group,
        "main": main,
        "supports": supports,
        "operations": operations,
        "inputScope": scope,
        "inputReduction": input_red,
        "yieldIncrease": yield_inc,
        "fuelReduction": fuel_red,
        "labourReduction": labour_red,
    }
    if note:
        entry["note"] = note
    return entry


BENEFITS = [
    # -- guidance: benefits apply to all seed/fertiliser/pesticide inputs --
    row("auto-steer-ctf", "auto-steer", ["normal-gps"], AUTO_STEER_OPS,
        "all-inputs", input_red=3, fuel_red=3, labour_red=1),
    row("auto-steer-ctf", "auto-steer", ["rtk-gps"], AUTO_STEER_OPS,
        "all-inputs", input_red=3, fuel_red=3, labour_red=1),
    row("auto-steer-ctf", "auto-steer", ["rtk-gps", "ctf"], AUTO_STEER_OPS,
        "all-inputs", input_red=3, yield_inc=1, fuel_red=5, labour_red=1),
    row("section-control", "section-control", ["normal-gps"], SECTION_CONTROL_OPS,
        "all-inputs", input_red=2),
    row("section-control", "section-control", ["rtk-gps"], SECTION_CONTROL_OPS,
        "all-inputs", input_red=4),
    # -- variable-rate applications: benefits specific to the operation --
    row("vr-applications", "vr-seeder", ["satellite"], ["seeding"],
        "operation-specific", input_red=3),
    row("vr-applications", "vr-seeder", ["survey-uav"], ["seeding"],
        "operation-specific", input_red=3),
    row("vr-applications", "vr-seeder", ["yield-map"], ["seeding"],
        "operation-specific", input_red=3),
    row("vr-applications", "vr-seeder", ["soil-ec"], ["seeding"],
        "operation-specific", input_red=3),
    row("vr-applications", "vr-fertilizer", ["satellite"], ["fertilization"],
        "operation-specific", yield_inc=3),
    row("vr-applications", "vr-fertilizer", ["survey-uav"], ["fertilization"],
        "operation-specific", yield_inc=3),
    row("vr-applications", "vr-fertilizer", ["yield-map"], ["fertilization"],
        "operation-specific", yield_inc=3),
    row("vr-applications", "vr-fertilizer", ["soil-ec"], ["fertilization"],
        "operation-specific", yield_inc=3),
    row("vr-applications", "vr-fertilizer", ["n-sensor"], ["fertilization"],
        "operation-specific", input_red=1),
    row("vr-applications", "vr-fertilizer", ["n-sensor", "yield-map"], ["fertilization"],
        "operation-specific", input_red=1, yield_inc=3),
    row("vr-applications", "vr-fertilizer", ["n-sensor", "yield-map", "soil-ec"],
        ["fertilization"], "operation-specific", input_red=3, yield_inc=3),
    row("vr-applications", "vr-sprayer", ["satellite"], ["spraying-fungicide"],
        "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["n-sensor"], ["spraying-fungicide"],
        "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["survey-uav"], ["spraying-fungicide"],
        "operation-specific", input_red=15,
        note="completes the fungicide block; conservative 15% mirroring the "
             "herbicide survey-uav row"),
    row("vr-applications", "vr-sprayer", ["survey-uav"], ["spraying-insecticide"],
        "operation-specific", input_red=20),
    row("vr-applications", "vr-sprayer", ["satellite", "yield-map", "soil-ec"],
        ["spraying-insecticide"], "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["satellite"], ["spraying-insecticide"],
        "operation-specific", input_red=15,
        note="completes the insecticide block; every spraying variant carries "
             "a bare-satellite 15% row"),
    row("vr-applications", "vr-sprayer", ["satellite"], ["spraying-herbicide"],
        "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["survey-uav"], ["spraying-herbicide"],
        "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["survey-uav", "yield-map"],
        ["spraying-herbicide"], "operation-specific", input_red=20),
    row("vr-applications", "vr-sprayer", ["satellite"], ["spraying-growth-regulator"],
        "operation-specific", input_red=15),
    row("vr-applications", "vr-sprayer", ["survey-uav"], ["spraying-growth-regulator"],
        "operation-specific", input_red=20),
    row("vr-applications", "vr-lime", ["satellite", "yield-map", "soil-ec"],
        ["liming"], "operation-specific", input_red=2, yield_inc=1),
    row("vr-applications", "vr-lime", ["survey-uav", "yield-map", "soil-ec"],
        ["liming"], "operation-specific", input_red=2, yield_inc=1),
    row("vr-applications", "vr-lime", ["n-sensor", "yield-map", "soil-ec"],
        ["liming"], "operation-specific", input_red=2, yield_inc=1),
    row("vr-applications", "vr-manure", ["satellite"], ["manure-application"],
        "operation-specific", input_red=1),
    row("vr-applications", "vr-manure", ["satellite", "yield-map"],
        ["manure-application"], "operation-specific", input_red=2),
    row("vr-applications", "vr-manure", ["satellite", "yield-map", "soil-sampling"],
        ["manure-application"], "operation-specific", input_red=3),
    row("vr-applications", "vr-manure", ["survey-uav"], ["manure-application"],
        "operation-specific", input_red=2),
    row("vr-applications", "vr-manure", ["survey-uav", "yield-map"],
        ["manure-application"], "operation-specific", input_red=3),
    row("vr-applications", "vr-manure", ["survey-uav", "yield-map", "soil-sampling"],
        ["manure-application"], "operation-specific", input_red=4),
    # -- weeding: hoeing replaces the extra steering operator --
    row("weeding", "inter-row-hoeing-gps", [], ["mechanical-weeding"],
        "operation-specific", labour_red=50),
    row("weeding", "inter-row-hoeing-camera", [], ["mechanical-weeding"],
        "operation-specific", labour_red=50),
]

COMPATIBILITY = [
    {"main": "auto-steer", "operations": AUTO_STEER_OPS},
    {"main": "section-control", "operations": SECTION_CONTROL_OPS},
    {"main": "vr-seeder", "operations": ["seeding"]},
    {"main": "vr-fertilizer", "operations": ["fertilization"]},
    {"main": "vr-sprayer", "operations": SPRAYING},
    {"main": "vr-lime", "operations": ["liming"]},
    {"main": "vr-manure", "operations": ["manure-application"]},
    {"main": "inter-row-hoeing-camera", "operations": ["mechanical-weeding"]},
    {"main": "inter-row-hoeing-gps", "operations": ["mechanical-weeding"]},
]

# (investment EUR at the 50 ha reference size, recurring cost EUR/yr)
MAIN_INVESTMENTS = {
    "auto-steer": (8000, 100),
    "section-control": (6000, 100),
    "vr-seeder": (15000, 150),
    "vr-fertilizer": (12000, 150),
    "vr-sprayer": (14000, 150),
    "vr-lime": (10000, 100),
    "vr-manure": (18000, 150),
    "inter-row-hoeing-camera": (25000, 250),
    "inter-row-hoeing-gps": (20000, 250),
}
SUPPORT_INVESTMENTS = {
    "normal-gps": (2000, 0),
    "rtk-gps": (6000, 600),
    "ctf": (1500, 0),
    "satellite": (500, 350),
    "survey-uav": (9000, 200),
    "n-sensor": (16000, 300),
    "yield-map": (4000, 100),
    "soil-ec": (5000, 100),
    "soil-ph": (4000, 50),
    "soil-sampling": (1000, 400),
}

# (input price multiplier, fuel price EUR/l, labour cost EUR/h)
REGIONS = {
    "northern-europe": (1.05, 1.42, 24.0),
    "central-europe": (1.00, 1.35, 20.0),
    "south-southwestern-europe": (0.95, 1.28, 16.0),
    "southeast-europe": (0.90, 1.22, 12.0),
}

# op -> crop -> (input price EUR/unit, unit, rate/ha per pass, passes/yr,
#                fuel l/ha per pass, labour h/ha per pass)
OPERATION_BASELINES = {
    "seeding": {
        "wheat": (0.55, "kg", 170.0, 1, 4.5, 0.25),
        "maize": (4.20, "kg", 27.0, 1, 4.5, 0.30),
        "sugar-beet": (55.0, "kg", 4.5, 1, 4.5, 0.30),
        "canola": (9.00, "kg", 4.0, 1, 4.0, 0.25),
        "potato": (0.38, "kg", 2500.0, 1, 8.0, 0.80),
    },
    "fertilization": {
        "wheat": (0.95, "kg", 90.0, 2, 3.5, 0.15),
        "maize": (0.95, "kg", 160.0, 1, 3.5, 0.15),
        "sugar-beet": (0.95, "kg", 110.0, 1, 3.5, 0.15),
        "canola": (0.95, "kg", 95.0, 2, 3.5, 0.15),
        "potato": (0.95, "kg", 140.0, 1, 3.5, 0.15),
    },
    "spraying-fungicide": {
        "wheat": (32.0, "l", 1.5, 2, 2.5, 0.12),
        "maize": (32.0, "l", 1.5, 1, 2.5, 0.12),
        "sugar-beet": (32.0, "l", 1.5, 1, 2.5, 0.12),
        "canola": (32.0, "l", 1.5, 1, 2.5, 0.12),
        "potato": (32.0, "l", 2.0, 6, 2.5, 0.12),
    },
    "spraying-herbicide": {
        "wheat": (14.0, "l", 2.5, 1, 2.5, 0.12),
        "maize": (14.0, "l", 2.5, 1, 2.5, 0.12),
        "sugar-beet": (14.0, "l", 2.5, 2, 2.5, 0.12),
        "canola": (14.0, "l", 2.5, 1, 2.5, 0.12),
        "potato": (14.0, "l", 2.5, 1, 2.5, 0.12),
    },
    "spraying-insecticide": {
        "wheat": (45.0, "l", 0.3, 1, 2.5, 0.12),
        "maize": (45.0, "l", 0.3, 1, 2.5, 0.12),
        "sugar-beet": (45.0, "l", 0.3, 1, 2.5, 0.12),
        "canola": (45.0, "l", 0.3, 2, 2.5, 0.12),
        "potato": (45.0, "l", 0.3, 1, 2.5, 0.12),
    },
    "spraying-growth-regulator": {
        "wheat": (9.0, "l", 1.2, 1, 2.5, 0.12),
        "maize": (9.0, "l", 1.2, 0, 2.5, 0.12),
        "sugar-beet": (9.0, "l", 1.2, 0, 2.5, 0.12),
        "canola": (9.0, "l", 1.2, 1, 2.5, 0.12),
        "potato": (9.0, "l", 1.2, 0, 2.5, 0.12),
    },
    "mechanical-weeding": {
        "wheat": (0.0, "kg", 0.0, 1, 6.0, 1.0),
        "maize": (0.0, "kg", 0.0, 1, 6.0, 1.0),
        "sugar-beet": (0.0, "kg", 0.0, 2, 6.0, 1.0),
        "canola": (0.0, "kg", 0.0, 1, 6.0, 1.0),
        "potato": (0.0, "kg", 0.0, 1, 6.0, 1.0),
    },
    "tillage": {crop: (0.0, "kg", 0.0, 1, 18.0, 0.6) for crop in CROPS},
    "liming": {crop: (0.065, "kg", 400.0, 1, 5.0, 0.2) for crop in CROPS},
    "manure-application": {crop: (0.006, "kg", 25000.0, 1, 12.0, 0.5) for crop in CROPS},
}

NOTES = [
    "Benefit rows are grouped auto-steer-ctf (3), section-control (2), "
    "vr-applications (31), weeding (2); 38 rows in total.",
    "Sprayer block grouping: fungicide = satellite / n-sensor / survey-uav; "
    "insecticide = survey-uav / satellite+yield-map+soil-ec / satellite; "
    "herbicide = satellite / survey-uav / survey-uav+yield-map; "
    "growth-regulator = satellite / survey-uav. Rows carrying a note were "
    "filled in to complete their block and deserve extra scrutiny when editing.",
    "Guidance rows (auto-steer, section-control) reduce all seed, fertiliser "
    "and pesticide inputs of the operations the scenario covers; every other "
    "row reduces only its own operation's input.",
    "Both hoeing rows carry the standard 50% labour saving of steering the "
    "hoe without an additional operator.",
    "Investment figures and cost profiles are placeholders "
    "(provenance: placeholder), meant to be replaced with real quotes.",
]


def build_document():
    cost_profiles = []
    for region, (input_mult, fuel_price, labour_cost) in REGIONS.items():
        for crop in CROPS:
            for op in ALL_OPS:
                price, unit, rate, treatments, fuel, labour = OPERATION_BASELINES[op][crop]
                cost_profiles.append({
                    "region": region,
                    "crop": crop,
                    "operation": op,
                    "inputPrice": round(price * input_mult, 4),
                    "inputUnit": unit,
                    "applicationRate": rate,
                    "treatmentsPerYear": treatments,
                    "fuelPrice": fuel_price,
                    "fuelConsumption": fuel,
                    "labourCost": labour_cost,
                    "labourHours": labour,
                    "provenance": "placeholder",
                })

    investments = []
    for tech, (investment, recurring) in MAIN_INVESTMENTS.items():
        investments.append({
            "component": "main",
            "technology": tech,
            "investment": investment,
            "recurringCost": recurring,
            "provenance": "placeholder",
        })
    for tech, (investment, recurring) in SUPPORT_INVESTMENTS.items():
        investments.append({
            "component": "support",
            "technology": tech,
            "investment": investment,
            "recurringCost": recurring,
            "provenance": "placeholder",
        })

    return {
        "version": VERSION,
        "notes": NOTES,
        "benefits": BENEFITS,
        "compatibility": COMPATIBILITY,
        "costProfiles": cost_profiles,
        "investments": investments,
    }


def main():
    target = Path(__file__).resolve().parent.parent / "src" / "agrivest" / "data" / "seed_catalog.json"
    target.parent.mkdir(parents=True, exist_ok=True)
    document = build_document()
    target.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {target} ({len(document['benefits'])} benefit rows, "
          f"{len(document['costProfiles'])} cost profiles)")


if __name__ == "__main__":
    main()
