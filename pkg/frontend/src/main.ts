import { Client, resolveApiBase } from "./api";
import { Evaluator } from "./evaluator";
import { loadDraft, saveDraft } from "./persist";
import { applyMeta, initialState } from "./state";
import { Store } from "./store";
import { renderWizard } from "./ui/Wizard";

const apiBase = resolveApiBase(
  window.location.search,
  document.querySelector('meta[name="agrivest-api"]')?.getAttribute("content") ?? null,
);
const client = new Client(apiBase);
const evaluator = new Evaluator(client);

const restored = loadDraft(window.localStorage);
const store = new Store(restored ? { ...restored, busy: false, error: null }
                                 : initialState());

store.subscribe((state) => saveDraft(window.localStorage, state));

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");
renderWizard(root, store, { client, evaluator });

client.meta()
  .then((meta) => store.update((state) => applyMeta(state, meta)))
  .catch((error) => store.update((state) => ({
    ...state,
    error: `API unreachable at ${apiBase}: ${String(error)}`,
  })));
