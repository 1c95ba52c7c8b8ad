/** Screen 2: tick operations, then pick compatible technology combinations
 * (fetched per operation from the API), including CTF where the catalog
 * offers it. */

import type { Client } from "../api";
import type { Store } from "../store";
import { WizardState, optionKey, toggleChoice, toggleOperation } from "../state";
import type { TechnologyChoice, TechnologyListing } from "../types";
import { el } from "./helpers";

const listings = new Map<string, TechnologyListing>();

export async function fetchListing(client: Client, operation: string):
    Promise<TechnologyListing> {
  const cached = listings.get(operation);
  if (cached) return cached;
  const listing = await client.technologies(operation);
  listings.set(operation, listing);
  return listing;
}

export function choiceLabel(choice: TechnologyChoice): string {
  const supports = choice.supports.length ? ` + ${choice.supports.join(" + ")}` : "";
  return `${choice.main}${supports}`;
}

export function renderOptions(container: HTMLElement, store: Store<WizardState>,
                              client: Client): void {
  const state = store.get();
  container.appendChild(el("h2", {}, "Operations and technology"));
  if (!state.meta) return;

  const checklist = el("div", { class: "operations" });
  for (const operation of state.meta.operations) {
    const label = el("label", { class: "operation" });
    const box = el("input", { type: "checkbox", "data-operation": operation });
    box.checked = state.operations.includes(operation);
    box.addEventListener("change", () => {
      store.update((s) => ({ ...toggleOperation(s, operation), violations: [] }));
    });
    label.appendChild(box);
    label.appendChild(el("span", {}, operation));
    checklist.appendChild(label);
  }
  container.appendChild(checklist);

  for (const operation of state.operations) {
    const section = el("section", { class: "tech-block", "data-operation": operation });
    section.appendChild(el("h3", {}, operation));
    const host = el("div", {}, "loading suitable technologies...");
    section.appendChild(host);
    container.appendChild(section);

    fetchListing(client, operation).then((listing) => {
      host.textContent = "";
      if (listing.options.length === 0) {
        host.appendChild(el("p", { class: "hint" },
          "No catalog defaults for this operation; add a custom option with "
          + "your own benefit figures on the next screen."));
        return;
      }
      for (const choice of listing.options) {
        const row = el("label", { class: "tech-choice" });
        const box = el("input", {
          type: "checkbox",
          "data-choice": optionKey(choice),
        });
        box.checked = store.get().options.some((o) => optionKey(o) === optionKey(choice));
        box.addEventListener("change", () => {
          store.update((s) => ({ ...toggleChoice(s, choice), violations: [] }));
        });
        row.appendChild(box);
        const benefits = choice.benefits;
        const summary = [
          benefits.inputReduction ? `input -${benefits.inputReduction}%` : "",
          benefits.yieldIncrease ? `yield +${benefits.yieldIncrease}%` : "",
          benefits.fuelReduction ? `fuel -${benefits.fuelReduction}%` : "",
          benefits.labourReduction ? `labour -${benefits.labourReduction}%` : "",
        ].filter(Boolean).join(", ") || "no default benefits";
        row.appendChild(el("span", {},
          `${choiceLabel(choice)} — ${summary}`));
        if (choice.supports.includes("ctf")) {
          row.appendChild(el("em", { class: "ctf" }, " (controlled traffic farming)"));
        }
        host.appendChild(row);
      }
    }).catch((error) => {
      host.textContent = `could not load technologies: ${String(error)}`;
    });
  }
}
