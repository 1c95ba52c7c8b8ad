/** At most one evaluation request in flight: a newer click supersedes and
 * aborts the previous request, and stale responses are dropped. */

import type { Client } from "./api";
import type { EvaluateResponse } from "./types";

export class Evaluator {
  private controller: AbortController | null = null;
  private ticket = 0;

  constructor(private readonly client: Client) {}

  /** Resolves with null when a newer evaluation superseded this one. */
  async evaluate(scenarioId: string, save = false): Promise<EvaluateResponse | null> {
    this.controller?.abort();
    this.controller = new AbortController();
    const myTicket = ++this.ticket;
    try {
      const response = await this.client.evaluate(scenarioId, save,
                                                  this.controller.signal);
      return myTicket === this.ticket ? response : null;
    } catch (error) {
      if (myTicket !== this.ticket) return null; // superseded, ignore the abort
      if ((error as { name?: string }).name === "AbortError") return null;
      throw error;
    }
  }
}
