/** The three-step wizard shell: gated navigation, server-side validation
 * echoed inline, plus the saved-runs view. */

import { ApiError, Client } from "../api";
import { Evaluator } from "../evaluator";
import { downloadText } from "../download";
import type { Store } from "../store";
import {
  STEPS,
  Step,
  WizardState,
  advance,
  canAdvance,
  goBack,
  stepComplete,
  toScenarioDocument,
  withViolations,
} from "../state";
import { el } from "./helpers";
import { renderMyFarm } from "./StepMyFarm";
import { renderOptions } from "./StepOptions";
import { renderBenefits } from "./StepBenefits";
import { renderRuns } from "./RunsView";

const STEP_TITLES: Record<Step, string> = {
  "my-farm": "1. My farm",
  "options-technology": "2. Options / technology",
  "economic-benefits": "3. Economic benefits",
};

export interface WizardServices {
  client: Client;
  evaluator: Evaluator;
}

type View = Step | "runs";

export function renderWizard(root: HTMLElement, store: Store<WizardState>,
                             services: WizardServices): void {
  let view: View = store.get().step;

  const nav = el("nav", { class: "wizard-nav" });
  const content = el("section", { class: "wizard-content" });
  const banner = el("div", { class: "banner", hidden: "hidden" });
  root.appendChild(nav);
  root.appendChild(banner);
  root.appendChild(content);

  /** Push the draft to the server; returns true when it validated. */
  async function syncScenario(): Promise<boolean> {
    const state = store.get();
    const document = toScenarioDocument(state);
    try {
      const saved = state.scenarioId
        ? await services.client.replaceScenario(state.scenarioId, document)
        : await services.client.createScenario(document);
      store.update((s) => ({
        ...withViolations(s, []),
        scenarioId: saved.id,
        // the server echoes effective defaults; mirror them so the UI
        // never shows a silently-filled value
        discountRate: saved.scenario.discountRate ?? s.discountRate,
        horizonYears: saved.scenario.horizonYears ?? s.horizonYears,
        error: null,
      }));
      return true;
    } catch (error) {
      if (error instanceof ApiError) {
        store.update((s) => ({
          ...withViolations(s, error.violations),
          error: error.violations.length ? null : error.message,
        }));
        return false;
      }
      store.update((s) => ({ ...s, error: String(error) }));
      return false;
    }
  }

  async function evaluate(save: boolean): Promise<void> {
    store.update((s) => ({ ...s, busy: true }));
    try {
      const ok = await syncScenario();
      const scenarioId = store.get().scenarioId;
      if (!ok || !scenarioId) return;
      const response = await services.evaluator.evaluate(scenarioId, save);
      if (response === null) return; // superseded by a newer click
      store.update((s) => ({
        ...s,
        lastResult: response.result,
        lastRunId: response.runId ?? (save ? s.lastRunId : null),
        error: null,
      }));
    } catch (error) {
      if (error instanceof ApiError) {
        store.update((s) => ({
          ...withViolations(s, error.violations),
          error: error.violations.length ? null : error.message,
        }));
      } else {
        store.update((s) => ({ ...s, error: String(error) }));
      }
    } finally {
      store.update((s) => ({ ...s, busy: false }));
    }
  }

  async function downloadReport(): Promise<void> {
    const runId = store.get().lastRunId;
    if (!runId) return;
    const html = await services.client.printableReport(runId);
    downloadText(html, `agrivest-report-${runId.slice(0, 8)}.html`);
  }

  function renderNav(state: WizardState): void {
    nav.textContent = "";
    STEPS.forEach((step, index) => {
      const button = el("button", { type: "button", "data-step": step },
                        STEP_TITLES[step]);
      const currentIndex = STEPS.indexOf(state.step);
      button.disabled = index > currentIndex; // forward jumps go through Next
      if (step === view) button.classList.add("active");
      button.addEventListener("click", () => {
        view = step;
        store.update((s) => ({ ...s, step }));
      });
      nav.appendChild(button);
    });
    const runsButton = el("button", { type: "button", "data-step": "runs" },
                          "Saved runs");
    if (view === "runs") runsButton.classList.add("active");
    runsButton.addEventListener("click", () => {
      view = "runs";
      sync();
    });
    nav.appendChild(runsButton);
  }

  function renderFooter(state: WizardState): HTMLElement {
    const footer = el("div", { class: "wizard-footer" });
    if (state.step !== STEPS[0]) {
      const back = el("button", { type: "button", id: "back" }, "Back");
      back.addEventListener("click", () => {
        store.update(goBack);
        view = store.get().step;
      });
      footer.appendChild(back);
    }
    if (state.step !== STEPS[STEPS.length - 1]) {
      const next = el("button", { type: "button", id: "next" }, "Next");
      next.disabled = !stepComplete(state, state.step) || state.busy;
      next.addEventListener("click", async () => {
        // server-side validation gates the transition
        const ok = await syncScenario();
        if (ok && canAdvance(store.get())) {
          store.update(advance);
          view = store.get().step;
        }
      });
      footer.appendChild(next);
    }
    return footer;
  }

  function sync(): void {
    const state = store.get();
    if (view !== "runs") view = state.step;
    renderNav(state);
    banner.textContent = state.error ?? "";
    if (state.error) banner.removeAttribute("hidden");
    else banner.setAttribute("hidden", "hidden");

    content.textContent = "";
    if (view === "runs") {
      renderRuns(content, services.client);
      return;
    }
    if (state.step === "my-farm") {
      renderMyFarm(content, store);
    } else if (state.step === "options-technology") {
      renderOptions(content, store, services.client);
    } else {
      renderBenefits(content, store, (save) => void evaluate(save),
                     () => void downloadReport());
    }
    if (state.violations.length) {
      const list = el("ul", { class: "violations" });
      for (const violation of state.violations) {
        list.appendChild(el("li", {}, `${violation.field}: ${violation.message}`));
      }
      content.appendChild(list);
    }
    content.appendChild(renderFooter(state));
  }

  sync();
  store.subscribe(sync);
}
