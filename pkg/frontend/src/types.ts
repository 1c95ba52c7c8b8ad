/** Wire types for the /v1 API. Keys are camelCase, enumeration values
 * kebab-case tokens, benefit percentages human percent units, the
 * discount rate a fraction. */

export interface Meta {
  regions: string[];
  crops: CropMeta[];
  operations: string[];
  mainTechnologies: string[];
  supportTechnologies: string[];
  discountDefault: number;
  horizonDefault: number;
  catalogVersion: string;
}

export interface CropMeta {
  name: string;
  builtin: boolean;
  defaultYield: number;
  defaultPrice: number;
}

export interface BenefitValues {
  inputReduction: number;
  yieldIncrease: number;
  fuelReduction: number;
  labourReduction: number;
  inputScope?: string;
}

export interface TechnologyListing {
  operation: string;
  options: TechnologyChoice[];
}

export interface TechnologyChoice {
  main: string;
  supports: string[];
  operation: string;
  group: string;
  benefits: BenefitValues;
  investment: {
    baseInvestment: number;
    recurringCost: number;
    provenance: string;
  };
  note?: string;
}

export interface ScenarioDocument {
  schema?: string;
  id?: string;
  region: string;
  crops: Array<{ crop: string; area: number; yield: number; price: number }>;
  options: OptionDocument[];
  discountRate?: number;
  horizonYears?: number;
  costOverrides?: Array<Record<string, unknown>>;
}

export interface OptionDocument {
  main: string;
  supports: string[];
  operation: string;
  benefits: BenefitValues;
  baseInvestment: number;
  recurringCost: number;
  custom?: boolean;
}

export interface Violation {
  field: string;
  message: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: Violation[];
}

export interface InputSaving {
  input: string;
  quantityPerYear: number;
  unit: string;
}

export interface OptionResult {
  option: OptionDocument;
  scaledInvestment: number;
  annualRevenue: number;
  annualCostDelta: number;
  cashFlows: number[];
  npv: number;
  irr: number | null;
  bcr: number | null;
  inputSaved: InputSaving[];
}

export interface PortfolioResult {
  investment: number;
  annualRevenue: number;
  annualCostDelta: number;
  cashFlows: number[];
  npv: number;
  irr: number | null;
  bcr: number | null;
  inputSaved: InputSaving[];
  sharedSupports: Array<{ support: string; scaledInvestment: number; optionCount: number }>;
}

export interface ResultDocument {
  schema: string;
  catalogVersion: string;
  totalArea: number;
  scenario: ScenarioDocument;
  options: OptionResult[];
  portfolio: PortfolioResult;
  deviations: Array<{ path: string; value: number; default: number | null }>;
  placeholders: { investments: boolean; costProfiles: boolean };
}

export interface EvaluateResponse {
  result: ResultDocument;
  runId?: string;
}

export interface RunSummary {
  runId: string;
  createdAt: string;
  catalogVersion: string;
  region: string;
  totalArea: number;
  crops: string[];
  optionCount: number;
  npv: number;
}

export interface ComparisonRow {
  runId: string;
  createdAt: string;
  catalogVersion: string;
  npv: number;
  irr: number | null;
  bcr: number | null;
  totalInvestment: number;
  inputSaved: InputSaving[];
}

export interface ComparisonResponse {
  rows: ComparisonRow[];
  warnings: string[];
}
