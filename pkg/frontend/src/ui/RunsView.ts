/** Saved runs: list, select several, compare side by side, download reports. */

import type { Client } from "../api";
import { money, ratio } from "../format";
import { downloadText } from "../download";
import type { ComparisonResponse, RunSummary } from "../types";
import { el } from "./helpers";

export function renderRuns(container: HTMLElement, client: Client): void {
  container.appendChild(el("h2", {}, "Saved runs"));
  const host = el("div", {}, "loading...");
  container.appendChild(host);

  client.listRuns().then(({ runs }) => {
    host.textContent = "";
    if (runs.length === 0) {
      host.appendChild(el("p", {}, "No saved runs yet; evaluate and save one "
        + "from the wizard."));
      return;
    }
    const selected = new Set<string>();
    const table = el("table", { class: "runs" });
    const head = el("tr");
    for (const title of ["", "Run", "Created", "Region", "Area (ha)", "Crops",
                         "Options", "NPV (EUR)", ""]) {
      head.appendChild(el("th", {}, title));
    }
    table.appendChild(head);
    for (const run of runs) {
      table.appendChild(runRow(run, selected, client));
    }
    host.appendChild(table);

    const compareButton = el("button", { type: "button", id: "compare" },
                             "Compare selected");
    const comparisonHost = el("div", { id: "comparison" });
    compareButton.addEventListener("click", () => {
      if (selected.size < 2) {
        comparisonHost.textContent = "select at least two runs to compare";
        return;
      }
      client.compareRuns([...selected]).then((comparison) => {
        comparisonHost.textContent = "";
        comparisonHost.appendChild(comparisonTable(comparison));
      }).catch((error) => {
        comparisonHost.textContent = `comparison failed: ${String(error)}`;
      });
    });
    host.appendChild(compareButton);
    host.appendChild(comparisonHost);
  }).catch((error) => {
    host.textContent = `could not list runs: ${String(error)}`;
  });
}

function runRow(run: RunSummary, selected: Set<string>, client: Client): HTMLElement {
  const tr = el("tr");
  const pick = el("td");
  const box = el("input", { type: "checkbox", "data-run": run.runId });
  box.addEventListener("change", () => {
    if (box.checked) selected.add(run.runId);
    else selected.delete(run.runId);
  });
  pick.appendChild(box);
  tr.appendChild(pick);
  tr.appendChild(el("td", {}, run.runId.slice(0, 8)));
  tr.appendChild(el("td", {}, run.createdAt.slice(0, 19).replace("T", " ")));
  tr.appendChild(el("td", {}, run.region));
  tr.appendChild(el("td", {}, String(run.totalArea)));
  tr.appendChild(el("td", {}, run.crops.join(", ")));
  tr.appendChild(el("td", {}, String(run.optionCount)));
  tr.appendChild(el("td", {}, money(run.npv)));
  const actions = el("td");
  const download = el("button", { type: "button" }, "report");
  download.addEventListener("click", () => {
    client.printableReport(run.runId).then((html) => {
      downloadText(html, `agrivest-report-${run.runId.slice(0, 8)}.html`);
    });
  });
  actions.appendChild(download);
  tr.appendChild(actions);
  return tr;
}

function comparisonTable(comparison: ComparisonResponse): HTMLElement {
  const wrapper = el("div");
  if (comparison.warnings.length) {
    wrapper.appendChild(el("p", { class: "warning" },
      `warning: ${comparison.warnings.join(", ")}`));
  }
  const table = el("table", { class: "comparison" });
  const head = el("tr");
  for (const title of ["Run", "Catalog", "Total investment (EUR)", "NPV (EUR)",
                       "IRR", "BCR", "Input saved"]) {
    head.appendChild(el("th", {}, title));
  }
  table.appendChild(head);
  for (const row of comparison.rows) {
    const tr = el("tr");
    tr.appendChild(el("td", {}, row.runId.slice(0, 8)));
    tr.appendChild(el("td", {}, row.catalogVersion));
    tr.appendChild(el("td", {}, money(row.totalInvestment)));
    tr.appendChild(el("td", {}, money(row.npv)));
    tr.appendChild(el("td", {}, ratio(row.irr)));
    tr.appendChild(el("td", {}, ratio(row.bcr)));
    tr.appendChild(el("td", {}, row.inputSaved
      .map((s) => `${s.input} ${s.quantityPerYear.toFixed(1)} ${s.unit}`)
      .join("; ")));
    table.appendChild(tr);
  }
  wrapper.appendChild(table);
  return wrapper;
}
