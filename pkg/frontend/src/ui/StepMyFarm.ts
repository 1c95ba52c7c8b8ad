/** Screen 1: region, crops (built-in or custom), area/yield/price. */

import type { Store } from "../store";
import {
  WizardState,
  addBuiltinCrop,
  addCustomCrop,
  removeCrop,
  updateCrop,
} from "../state";
import { el, fieldViolation, numberInput } from "./helpers";

export function renderMyFarm(container: HTMLElement, store: Store<WizardState>): void {
  const state = store.get();
  const meta = state.meta;
  container.appendChild(el("h2", {}, "My farm"));
  if (!meta) {
    container.appendChild(el("p", {}, "Loading catalog metadata..."));
    return;
  }

  const regionRow = el("div", { class: "field-row" });
  regionRow.appendChild(el("label", { for: "region" }, "Region (sets default values)"));
  const select = el("select", { id: "region" });
  select.appendChild(el("option", { value: "" }, "choose a region"));
  for (const region of meta.regions) {
    const option = el("option", { value: region }, region);
    if (region === state.region) option.selected = true;
    select.appendChild(option);
  }
  select.addEventListener("change", () => {
    store.update((s) => ({ ...s, region: select.value || null, violations: [] }));
  });
  regionRow.appendChild(select);
  container.appendChild(regionRow);

  const table = el("table", { class: "crops" });
  const head = el("tr");
  for (const title of ["Crop", "Area (ha)", "Yield (t/ha)", "Price (EUR/t)", ""]) {
    head.appendChild(el("th", {}, title));
  }
  table.appendChild(head);

  state.crops.forEach((row, index) => {
    const tr = el("tr");
    tr.appendChild(el("td", {}, row.custom ? `${row.crop} (custom)` : row.crop));
    for (const field of ["area", "yield", "price"] as const) {
      const td = el("td");
      const input = numberInput(row[field], (value) => {
        store.update((s) => ({
          ...updateCrop(s, index, { [field]: value }),
          violations: [],
        }));
      }, { "data-field": `crops[${index}].${field}` });
      td.appendChild(input);
      const messages = store.get().violations
        .filter((v) => v.field === `crops[${index}].${field}`)
        .map((v) => v.message);
      const note = fieldViolation(messages);
      if (note) td.appendChild(note);
      tr.appendChild(td);
    }
    const removeCell = el("td");
    const remove = el("button", { type: "button" }, "remove");
    remove.addEventListener("click", () => {
      store.update((s) => ({ ...removeCrop(s, index), violations: [] }));
    });
    removeCell.appendChild(remove);
    tr.appendChild(removeCell);
    table.appendChild(tr);
  });
  container.appendChild(table);

  const addRow = el("div", { class: "field-row" });
  const picker = el("select", { id: "crop-picker" });
  picker.appendChild(el("option", { value: "" }, "add a crop"));
  for (const crop of meta.crops) {
    picker.appendChild(el("option", { value: crop.name },
                          `${crop.name} (${crop.defaultYield} t/ha, ${crop.defaultPrice} EUR/t)`));
  }
  picker.addEventListener("change", () => {
    const chosen = meta.crops.find((c) => c.name === picker.value);
    if (chosen) {
      store.update((s) => ({ ...addBuiltinCrop(s, chosen), violations: [] }));
    }
  });
  addRow.appendChild(picker);

  const customName = el("input", { type: "text", placeholder: "custom crop name" });
  const customAdd = el("button", { type: "button" }, "add custom crop");
  customAdd.addEventListener("click", () => {
    const name = customName.value.trim();
    if (name) {
      store.update((s) => ({ ...addCustomCrop(s, name), violations: [] }));
    }
  });
  addRow.appendChild(customName);
  addRow.appendChild(customAdd);
  container.appendChild(addRow);
  container.appendChild(el("p", { class: "hint" },
    "Custom crops need their own yield, price and treatment data; built-in "
    + "crops start from the region's editable defaults."));
}
