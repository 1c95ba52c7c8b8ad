/** Screen 3: check and change proposed benefits, costs and investments;
 * adjust the discount rate; evaluate; inspect the results panel. Every
 * number in the results came from the API response. */

import type { Store } from "../store";
import {
  BenefitField,
  WizardState,
  editBenefit,
  editInvestment,
  isDirty,
  isRateDirty,
  resetField,
} from "../state";
import { money, quantity, ratio } from "../format";
import { el, numberInput } from "./helpers";

const BENEFIT_FIELDS: Array<[BenefitField, string]> = [
  ["inputReduction", "Input reduction (%)"],
  ["yieldIncrease", "Yield increase (%)"],
  ["fuelReduction", "Fuel reduction (%)"],
  ["labourReduction", "Labour reduction (%)"],
];

export function renderBenefits(container: HTMLElement, store: Store<WizardState>,
                               onEvaluate: (save: boolean) => void,
                               onDownload: () => void): void {
  const state = store.get();
  container.appendChild(el("h2", {}, "Economic benefits"));

  state.options.forEach((row, index) => {
    const card = el("section", { class: "option-card" });
    const title = row.supports.length
      ? `${row.main} + ${row.supports.join(" + ")}` : row.main;
    card.appendChild(el("h3", {}, `${title} — ${row.operation}`));

    const table = el("table", { class: "benefit-table" });
    for (const [field, label] of BENEFIT_FIELDS) {
      table.appendChild(benefitRow(store, index, field, label));
    }
    table.appendChild(investmentRow(store, index, "baseInvestment",
                                    "Investment (EUR, 50 ha basis)"));
    table.appendChild(investmentRow(store, index, "recurringCost",
                                    "Recurring cost (EUR/yr)"));
    card.appendChild(table);
    container.appendChild(card);
  });

  const rateRow = el("div", { class: "field-row" });
  const rateLabel = el("label", { for: "discount-rate" }, "Discount rate (%)");
  if (isRateDirty(state)) rateLabel.classList.add("dirty");
  rateRow.appendChild(rateLabel);
  const rateInput = numberInput(state.discountRate * 100, (value) => {
    if (value === null) return;
    store.update((s) => ({ ...s, discountRate: value / 100, violations: [] }));
  }, { id: "discount-rate" });
  rateRow.appendChild(rateInput);
  const horizonLabel = el("label", { for: "horizon" }, "Horizon (years)");
  rateRow.appendChild(horizonLabel);
  rateRow.appendChild(numberInput(state.horizonYears, (value) => {
    if (value === null) return;
    store.update((s) => ({ ...s, horizonYears: Math.round(value), violations: [] }));
  }, { id: "horizon", step: "1", min: "1" }));
  container.appendChild(rateRow);

  const actions = el("div", { class: "actions" });
  const evaluateButton = el("button", { type: "button", id: "evaluate" }, "Evaluate");
  evaluateButton.disabled = state.busy;
  evaluateButton.addEventListener("click", () => onEvaluate(false));
  actions.appendChild(evaluateButton);
  const saveButton = el("button", { type: "button", id: "save-run" },
                        "Evaluate and save run");
  saveButton.disabled = state.busy;
  saveButton.addEventListener("click", () => onEvaluate(true));
  actions.appendChild(saveButton);
  container.appendChild(actions);

  if (state.lastResult) {
    container.appendChild(resultsPanel(state, onDownload));
  }
}

function benefitRow(store: Store<WizardState>, index: number, field: BenefitField,
                    label: string): HTMLElement {
  const state = store.get();
  const row = state.options[index];
  if (!row) return el("tr");
  const tr = el("tr");
  const name = el("td", {}, label);
  const dirty = isDirty(row, field);
  if (dirty) name.classList.add("dirty");
  tr.appendChild(name);
  const cell = el("td");
  cell.appendChild(numberInput(row.benefits[field], (value) => {
    if (value === null) return;
    store.update((s) => ({ ...editBenefit(s, index, field, value), violations: [] }));
  }, { "data-field": `options[${index}].benefits.${field}` }));
  tr.appendChild(cell);
  tr.appendChild(resetCell(store, index, field, dirty, row.defaults !== null));
  return tr;
}

function investmentRow(store: Store<WizardState>, index: number,
                       field: "baseInvestment" | "recurringCost",
                       label: string): HTMLElement {
  const state = store.get();
  const row = state.options[index];
  if (!row) return el("tr");
  const tr = el("tr");
  const name = el("td", {}, label);
  const dirty = isDirty(row, field);
  if (dirty) name.classList.add("dirty");
  tr.appendChild(name);
  const cell = el("td");
  cell.appendChild(numberInput(row[field], (value) => {
    if (value === null) return;
    store.update((s) => ({
      ...editInvestment(s, index, { [field]: value }),
      violations: [],
    }));
  }, { "data-field": `options[${index}].${field}` }));
  tr.appendChild(cell);
  tr.appendChild(resetCell(store, index, field, dirty, row.defaults !== null));
  return tr;
}

function resetCell(store: Store<WizardState>, index: number,
                   field: BenefitField | "baseInvestment" | "recurringCost",
                   dirty: boolean, hasDefaults: boolean): HTMLElement {
  const td = el("td");
  if (hasDefaults) {
    const button = el("button", {
      type: "button",
      class: "reset",
      "data-reset": `options[${index}].${field}`,
    }, "reset");
    button.disabled = !dirty;
    button.addEventListener("click", () => {
      store.update((s) => ({ ...resetField(s, index, field), violations: [] }));
    });
    td.appendChild(button);
  } else {
    td.appendChild(el("span", { class: "hint" }, "user-defined"));
  }
  return td;
}

function resultsPanel(state: WizardState, onDownload: () => void): HTMLElement {
  const result = state.lastResult!;
  const panel = el("section", { class: "results", id: "results" });
  panel.appendChild(el("h3", {}, "Results"));

  const table = el("table", { class: "results-table" });
  const head = el("tr");
  for (const title of ["Technology", "Investment (EUR)", "NPV (EUR)", "IRR", "BCR"]) {
    head.appendChild(el("th", {}, title));
  }
  table.appendChild(head);
  for (const option of result.options) {
    const tr = el("tr");
    const supports = option.option.supports.length
      ? ` + ${option.option.supports.join(" + ")}` : "";
    tr.appendChild(el("td", {}, `${option.option.main}${supports}`));
    tr.appendChild(el("td", {}, money(option.scaledInvestment)));
    tr.appendChild(el("td", {}, money(option.npv)));
    tr.appendChild(el("td", {}, ratio(option.irr)));
    tr.appendChild(el("td", {}, ratio(option.bcr)));
    table.appendChild(tr);
  }
  const portfolio = result.portfolio;
  const total = el("tr", { class: "portfolio" });
  total.appendChild(el("td", {}, "Whole portfolio"));
  total.appendChild(el("td", {}, money(portfolio.investment)));
  total.appendChild(el("td", {}, money(portfolio.npv)));
  total.appendChild(el("td", {}, ratio(portfolio.irr)));
  total.appendChild(el("td", {}, ratio(portfolio.bcr)));
  table.appendChild(total);
  panel.appendChild(table);

  if (portfolio.inputSaved.length) {
    panel.appendChild(el("h4", {}, "Input saved per year"));
    const list = el("ul", { class: "savings" });
    for (const saving of portfolio.inputSaved) {
      list.appendChild(el("li", {},
        `${saving.input}: ${quantity(saving.quantityPerYear, saving.unit)}`));
    }
    panel.appendChild(list);
  }

  if (result.placeholders.investments || result.placeholders.costProfiles) {
    panel.appendChild(el("p", { class: "hint" },
      "Some figures come from placeholder seed data; replace them with your "
      + "own quotes for a decision-grade answer."));
  }

  if (state.lastRunId) {
    const download = el("button", { type: "button", id: "download-report" },
                        "Download printable report");
    download.addEventListener("click", onDownload);
    panel.appendChild(download);
  } else {
    panel.appendChild(el("p", { class: "hint" },
      "Save the run to enable the report download."));
  }
  return panel;
}
