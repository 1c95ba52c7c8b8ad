import { describe, expect, it } from "vitest";

import {
  addBuiltinCrop,
  addCustomCrop,
  advance,
  applyMeta,
  canAdvance,
  editBenefit,
  editInvestment,
  initialState,
  isDirty,
  isRateDirty,
  optionKey,
  resetField,
  stepComplete,
  toScenarioDocument,
  toggleChoice,
  toggleOperation,
  updateCrop,
  violationsForStep,
  withViolations,
} from "./state";
import type { Meta, TechnologyChoice } from "./types";

const META: Meta = {
  regions: ["northern-europe", "central-europe"],
  crops: [
    { name: "wheat", builtin: true, defaultYield: 7.5, defaultPrice: 180 },
    { name: "maize", builtin: true, defaultYield: 9.5, defaultPrice: 170 },
  ],
  operations: ["seeding", "fertilization", "mechanical-weeding"],
  mainTechnologies: [],
  supportTechnologies: [],
  discountDefault: 0.04,
  horizonDefault: 8,
  catalogVersion: "seed-test",
};

const HOEING: TechnologyChoice = {
  main: "inter-row-hoeing-camera",
  supports: [],
  operation: "mechanical-weeding",
  group: "weeding",
  benefits: { inputReduction: 0, yieldIncrease: 0, fuelReduction: 0, labourReduction: 50 },
  investment: { baseInvestment: 25000, recurringCost: 250, provenance: "placeholder" },
};

function farmReady() {
  let state = applyMeta(initialState(), META);
  state = { ...state, region: "central-europe" };
  state = addBuiltinCrop(state, META.crops[0]!);
  state = updateCrop(state, 0, { area: 100 });
  return state;
}

describe("step gating", () => {
  it("blocks my-farm until region and complete crop rows exist", () => {
    let state = applyMeta(initialState(), META);
    expect(stepComplete(state, "my-farm")).toBe(false);
    state = { ...state, region: "central-europe" };
    expect(stepComplete(state, "my-farm")).toBe(false);
    state = addBuiltinCrop(state, META.crops[0]!);
    expect(stepComplete(state, "my-farm")).toBe(false); // area still missing
    state = updateCrop(state, 0, { area: 100 });
    expect(stepComplete(state, "my-farm")).toBe(true);
  });

  it("does not advance while server violations are present", () => {
    let state = farmReady();
    state = withViolations(state, [{ field: "crops[0].area", message: "must be > 0" }]);
    expect(canAdvance(state)).toBe(false);
    expect(advance(state).step).toBe("my-farm");
    state = withViolations(state, []);
    expect(advance(state).step).toBe("options-technology");
  });

  it("blocks leaving the options step without any selected option", () => {
    let state = advance(farmReady());
    expect(stepComplete(state, "options-technology")).toBe(false);
    state = toggleOperation(state, "mechanical-weeding");
    state = toggleChoice(state, HOEING);
    expect(stepComplete(state, "options-technology")).toBe(true);
    expect(advance(state).step).toBe("economic-benefits");
  });

  it("routes violations to the step that owns the field", () => {
    const violations = [
      { field: "crops[0].area", message: "a" },
      { field: "options[0].benefits.inputReduction", message: "b" },
      { field: "discount_rate", message: "c" },
    ];
    expect(violationsForStep(violations, "my-farm").map((v) => v.field))
      .toEqual(["crops[0].area"]);
    expect(violationsForStep(violations, "options-technology").map((v) => v.field))
      .toEqual(["options[0].benefits.inputReduction"]);
    expect(violationsForStep(violations, "economic-benefits").map((v) => v.field))
      .toEqual(["discount_rate"]);
  });
});

describe("operation and option selection", () => {
  it("unticking an operation removes its options", () => {
    let state = toggleOperation(farmReady(), "mechanical-weeding");
    state = toggleChoice(state, HOEING);
    expect(state.options).toHaveLength(1);
    state = toggleOperation(state, "mechanical-weeding");
    expect(state.operations).not.toContain("mechanical-weeding");
    expect(state.options).toHaveLength(0);
  });

  it("toggling the same choice twice removes it", () => {
    let state = toggleOperation(farmReady(), "mechanical-weeding");
    state = toggleChoice(state, HOEING);
    state = toggleChoice(state, HOEING);
    expect(state.options).toHaveLength(0);
  });

  it("option keys are support-order independent", () => {
    expect(optionKey({ main: "a", supports: ["x", "y"], operation: "op" }))
      .toBe(optionKey({ main: "a", supports: ["y", "x"], operation: "op" }));
  });
});

describe("dirty flags and reset", () => {
  function withOption() {
    let state = toggleOperation(farmReady(), "mechanical-weeding");
    return toggleChoice(state, HOEING);
  }

  it("fresh catalog options are clean", () => {
    const state = withOption();
    expect(isDirty(state.options[0]!, "labourReduction")).toBe(false);
    expect(isDirty(state.options[0]!, "baseInvestment")).toBe(false);
  });

  it("editing 50 to 40 flags the field and reset clears it", () => {
    let state = editBenefit(withOption(), 0, "labourReduction", 40);
    expect(state.options[0]!.benefits.labourReduction).toBe(40);
    expect(isDirty(state.options[0]!, "labourReduction")).toBe(true);
    state = resetField(state, 0, "labourReduction");
    expect(state.options[0]!.benefits.labourReduction).toBe(50);
    expect(isDirty(state.options[0]!, "labourReduction")).toBe(false);
  });

  it("investment edits flag and reset the same way", () => {
    let state = editInvestment(withOption(), 0, { baseInvestment: 30000 });
    expect(isDirty(state.options[0]!, "baseInvestment")).toBe(true);
    state = resetField(state, 0, "baseInvestment");
    expect(state.options[0]!.baseInvestment).toBe(25000);
    expect(isDirty(state.options[0]!, "baseInvestment")).toBe(false);
  });

  it("discount rate dirtiness compares against the server default", () => {
    let state = applyMeta(initialState(), META);
    expect(isRateDirty(state)).toBe(false);
    state = { ...state, discountRate: 0.07 };
    expect(isRateDirty(state)).toBe(true);
  });
});

describe("scenario document", () => {
  it("mirrors the draft in API units", () => {
    let state = toggleOperation(farmReady(), "mechanical-weeding");
    state = toggleChoice(state, HOEING);
    state = { ...state, discountRate: 0.05, horizonYears: 10 };
    const document = toScenarioDocument(state);
    expect(document.region).toBe("central-europe");
    expect(document.crops).toEqual([
      { crop: "wheat", area: 100, yield: 7.5, price: 180 },
    ]);
    expect(document.options).toHaveLength(1);
    expect(document.options[0]!.benefits.labourReduction).toBe(50);
    expect(document.options[0]!.custom).toBeUndefined();
    expect(document.discountRate).toBe(0.05);
    expect(document.horizonYears).toBe(10);
  });

  it("keeps custom crops and their typed-in values", () => {
    let state = applyMeta(initialState(), META);
    state = { ...state, region: "northern-europe" };
    state = addCustomCrop(state, "spelt");
    state = updateCrop(state, 0, { area: 30, yield: 5, price: 320 });
    const document = toScenarioDocument(state);
    expect(document.crops[0]).toEqual({ crop: "spelt", area: 30, yield: 5, price: 320 });
  });
});
