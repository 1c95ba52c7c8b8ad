/** Wizard state and its pure transition/derivation functions.
 *
 * The state is plain data; every mutation goes through a function here so
 * the gating, dirty-flag and reset semantics are testable without a DOM.
 * All financial figures in the state came from the API; the UI adds
 * nothing numeric of its own.
 */

import type {
  BenefitValues,
  CropMeta,
  Meta,
  ResultDocument,
  ScenarioDocument,
  TechnologyChoice,
  Violation,
} from "./types";

export const STEPS = ["my-farm", "options-technology", "economic-benefits"] as const;
export type Step = (typeof STEPS)[number];

export interface CropRow {
  crop: string;
  custom: boolean;
  area: number | null;
  yield: number | null;
  price: number | null;
  /** catalog defaults for builtin crops, used for dirty flags and reset */
  defaultYield: number | null;
  defaultPrice: number | null;
}

export interface OptionRow {
  main: string;
  supports: string[];
  operation: string;
  benefits: BenefitValues;
  baseInvestment: number;
  recurringCost: number;
  custom: boolean;
  /** the catalog defaults this row started from; null for custom combos */
  defaults: { benefits: BenefitValues; baseInvestment: number; recurringCost: number } | null;
}

export interface WizardState {
  step: Step;
  meta: Meta | null;
  region: string | null;
  crops: CropRow[];
  /** operation tokens ticked on screen 2 */
  operations: string[];
  options: OptionRow[];
  discountRate: number; // fraction, as the API speaks it
  horizonYears: number;
  scenarioId: string | null;
  violations: Violation[];
  lastResult: ResultDocument | null;
  lastRunId: string | null;
  busy: boolean;
  error: string | null;
}

export function initialState(): WizardState {
  return {
    step: "my-farm",
    meta: null,
    region: null,
    crops: [],
    operations: [],
    options: [],
    discountRate: 0.04,
    horizonYears: 8,
    scenarioId: null,
    violations: [],
    lastResult: null,
    lastRunId: null,
    busy: false,
    error: null,
  };
}

export function applyMeta(state: WizardState, meta: Meta): WizardState {
  const next = { ...state, meta };
  if (state.crops.length === 0) {
    next.discountRate = meta.discountDefault;
    next.horizonYears = meta.horizonDefault;
  }
  return next;
}

// -- crops -------------------------------------------------------------------

export function addBuiltinCrop(state: WizardState, cropMeta: CropMeta): WizardState {
  const row: CropRow = {
    crop: cropMeta.name,
    custom: false,
    area: null,
    yield: cropMeta.defaultYield,
    price: cropMeta.defaultPrice,
    defaultYield: cropMeta.defaultYield,
    defaultPrice: cropMeta.defaultPrice,
  };
  return { ...state, crops: [...state.crops, row] };
}

export function addCustomCrop(state: WizardState, name: string): WizardState {
  const row: CropRow = {
    crop: name,
    custom: true,
    area: null,
    yield: null,
    price: null,
    defaultYield: null,
    defaultPrice: null,
  };
  return { ...state, crops: [...state.crops, row] };
}

export function updateCrop(state: WizardState, index: number,
                           patch: Partial<Pick<CropRow, "area" | "yield" | "price">>):
    WizardState {
  const crops = state.crops.map((row, i) => (i === index ? { ...row, ...patch } : row));
  return { ...state, crops };
}

export function removeCrop(state: WizardState, index: number): WizardState {
  return { ...state, crops: state.crops.filter((_, i) => i !== index) };
}

// -- options ------------------------------------------------------------------

export function toggleOperation(state: WizardState, operation: string): WizardState {
  const selected = state.operations.includes(operation);
  const operations = selected
    ? state.operations.filter((op) => op !== operation)
    : [...state.operations, operation];
  // dropping an operation drops its options too
  const options = selected
    ? state.options.filter((o) => o.operation !== operation)
    : state.options;
  return { ...state, operations, options };
}

export function optionKey(option: Pick<OptionRow, "main" | "supports" | "operation">): string {
  return `${option.main}|${[...option.supports].sort().join(",")}|${option.operation}`;
}

export function toggleChoice(state: WizardState, choice: TechnologyChoice): WizardState {
  const key = optionKey(choice);
  const existing = state.options.find((o) => optionKey(o) === key);
  if (existing) {
    return { ...state, options: state.options.filter((o) => optionKey(o) !== key) };
  }
  const row: OptionRow = {
    main: choice.main,
    supports: [...choice.supports],
    operation: choice.operation,
    benefits: { ...choice.benefits },
    baseInvestment: choice.investment.baseInvestment,
    recurringCost: choice.investment.recurringCost,
    custom: false,
    defaults: {
      benefits: { ...choice.benefits },
      baseInvestment: choice.investment.baseInvestment,
      recurringCost: choice.investment.recurringCost,
    },
  };
  return { ...state, options: [...state.options, row] };
}

export type BenefitField = "inputReduction" | "yieldIncrease" | "fuelReduction"
  | "labourReduction";

export function editBenefit(state: WizardState, index: number, field: BenefitField,
                            value: number): WizardState {
  const options = state.options.map((row, i) =>
    i === index ? { ...row, benefits: { ...row.benefits, [field]: value } } : row);
  return { ...state, options };
}

export function editInvestment(state: WizardState, index: number,
                               patch: Partial<Pick<OptionRow, "baseInvestment" | "recurringCost">>):
    WizardState {
  const options = state.options.map((row, i) => (i === index ? { ...row, ...patch } : row));
  return { ...state, options };
}

// -- dirty flags and reset ------------------------------------------------------

/** Is this benefit/investment field edited away from its catalog default? */
export function isDirty(row: OptionRow, field: BenefitField | "baseInvestment"
  | "recurringCost"): boolean {
  if (!row.defaults) return true; // custom combos have no defaults: always flagged
  if (field === "baseInvestment") return row.baseInvestment !== row.defaults.baseInvestment;
  if (field === "recurringCost") return row.recurringCost !== row.defaults.recurringCost;
  return row.benefits[field] !== row.defaults.benefits[field];
}

export function resetField(state: WizardState, index: number,
                           field: BenefitField | "baseInvestment" | "recurringCost"):
    WizardState {
  const row = state.options[index];
  if (!row || !row.defaults) return state;
  if (field === "baseInvestment") {
    return editInvestment(state, index, { baseInvestment: row.defaults.baseInvestment });
  }
  if (field === "recurringCost") {
    return editInvestment(state, index, { recurringCost: row.defaults.recurringCost });
  }
  return editBenefit(state, index, field, row.defaults.benefits[field]);
}

export function isRateDirty(state: WizardState): boolean {
  return state.meta !== null && state.discountRate !== state.meta.discountDefault;
}

// -- step gating ----------------------------------------------------------------

/** Client-side completeness needed before the server round trip; the
 * decisive validation is the server's, echoed into state.violations. */
export function stepComplete(state: WizardState, step: Step): boolean {
  if (step === "my-farm") {
    return state.region !== null && state.crops.length > 0
      && state.crops.every((c) => c.area !== null && c.yield !== null && c.price !== null);
  }
  if (step === "options-technology") {
    return state.options.length > 0;
  }
  return true;
}

export function canAdvance(state: WizardState): boolean {
  return stepComplete(state, state.step) && state.violations.length === 0;
}

export function advance(state: WizardState): WizardState {
  const index = STEPS.indexOf(state.step);
  if (index < 0 || index === STEPS.length - 1 || !canAdvance(state)) return state;
  const nextStep = STEPS[index + 1];
  return nextStep ? { ...state, step: nextStep } : state;
}

export function goBack(state: WizardState): WizardState {
  const index = STEPS.indexOf(state.step);
  if (index <= 0) return state;
  const previous = STEPS[index - 1];
  return previous ? { ...state, step: previous } : state;
}

export function withViolations(state: WizardState, violations: Violation[]): WizardState {
  return { ...state, violations };
}

/** Violations whose field path points into the given step's inputs. */
export function violationsForStep(violations: Violation[], step: Step): Violation[] {
  return violations.filter((violation) => {
    const field = violation.field;
    if (step === "my-farm") {
      return field.startsWith("crops") || field === "$.region" || field === "region"
        || field === "crops";
    }
    if (step === "options-technology") {
      return field.startsWith("options");
    }
    return field.includes("discount") || field.includes("horizon")
      || field.startsWith("costOverrides");
  });
}

// -- scenario document ------------------------------------------------------------

/** The exact request body for POST/PUT /v1/scenarios. Percent values are
 * already in API units; the discount rate stays a fraction. */
export function toScenarioDocument(state: WizardState): ScenarioDocument {
  return {
    region: state.region ?? "",
    crops: state.crops.map((row) => ({
      crop: row.crop,
      area: row.area ?? 0,
      yield: row.yield ?? 0,
      price: row.price ?? 0,
    })),
    options: state.options.map((row) => ({
      main: row.main,
      supports: [...row.supports],
      operation: row.operation,
      benefits: { ...row.benefits },
      baseInvestment: row.baseInvestment,
      recurringCost: row.recurringCost,
      ...(row.custom ? { custom: true } : {}),
    })),
    discountRate: state.discountRate,
    horizonYears: state.horizonYears,
  };
}
