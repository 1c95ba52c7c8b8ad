/** Tiny DOM helpers: element creation and labeled number inputs. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, attrs: Record<string, string> = {}, text?: string):
    HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

export function numberInput(value: number | null,
                            onChange: (value: number | null) => void,
                            attrs: Record<string, string> = {}): HTMLInputElement {
  const input = el("input", { type: "number", step: "any", ...attrs });
  if (value !== null) input.value = String(value);
  input.addEventListener("change", () => {
    const parsed = input.value === "" ? null : Number(input.value);
    onChange(parsed !== null && Number.isFinite(parsed) ? parsed : null);
  });
  return input;
}

export function fieldViolation(messages: string[]): HTMLElement | null {
  if (messages.length === 0) return null;
  const div = el("div", { class: "violation" }, messages.join("; "));
  return div;
}
