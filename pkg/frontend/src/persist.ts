/** Draft persistence in browser local storage, keyed by scenario id.
 * The server stores only explicit saves; a mid-wizard refresh restores
 * everything from here. */

import type { WizardState } from "./state";

const PREFIX = "agrivest-draft:";
const CURRENT = "agrivest-current-draft";

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export function draftKey(scenarioId: string | null): string {
  return PREFIX + (scenarioId ?? "new");
}

export function saveDraft(storage: StorageLike, state: WizardState): void {
  const key = draftKey(state.scenarioId);
  storage.setItem(key, JSON.stringify(state));
  storage.setItem(CURRENT, key);
}

export function loadDraft(storage: StorageLike): WizardState | null {
  const key = storage.getItem(CURRENT);
  if (!key) return null;
  const raw = storage.getItem(key);
  if (!raw) return null;
  try {
    return JSON.parse(raw) as WizardState;
  } catch {
    return null;
  }
}

export function clearDraft(storage: StorageLike, scenarioId: string | null): void {
  storage.removeItem(draftKey(scenarioId));
  storage.removeItem(CURRENT);
}
