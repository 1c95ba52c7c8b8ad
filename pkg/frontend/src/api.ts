/** Typed client for the /v1 API. Fetch is injectable so tests can run
 * against recorded responses; the UI never computes financial figures,
 * it only displays what these calls return. */

import type {
  ApiErrorBody,
  ComparisonResponse,
  EvaluateResponse,
  Meta,
  ScenarioDocument,
  TechnologyListing,
  RunSummary,
  Violation,
} from "./types";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly violations: Violation[];

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.violations = body.details ?? [];
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class Client {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown,
                           signal?: AbortSignal): Promise<T> {
    const init: RequestInit = { method, signal };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(`${this.base}${path}`, init);
    if (!response.ok) {
      let parsed: ApiErrorBody;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        parsed = { code: "unknown", message: `HTTP ${response.status}` };
      }
      throw new ApiError(response.status, parsed);
    }
    if (response.status === 204) {
      return undefined as T;
    }
    return (await response.json()) as T;
  }

  meta(): Promise<Meta> {
    return this.request("GET", "/v1/meta");
  }

  technologies(operation: string): Promise<TechnologyListing> {
    return this.request("GET", `/v1/technologies?operation=${encodeURIComponent(operation)}`);
  }

  createScenario(doc: ScenarioDocument): Promise<{ id: string; scenario: ScenarioDocument }> {
    return this.request("POST", "/v1/scenarios", doc);
  }

  replaceScenario(id: string, doc: ScenarioDocument):
      Promise<{ id: string; scenario: ScenarioDocument }> {
    return this.request("PUT", `/v1/scenarios/${id}`, doc);
  }

  evaluate(id: string, save = false, signal?: AbortSignal): Promise<EvaluateResponse> {
    const query = save ? "?save=true" : "";
    return this.request("POST", `/v1/scenarios/${id}/evaluate${query}`, undefined, signal);
  }

  listRuns(): Promise<{ runs: RunSummary[] }> {
    return this.request("GET", "/v1/runs");
  }

  compareRuns(runIds: string[]): Promise<ComparisonResponse> {
    return this.request("POST", "/v1/runs/compare", { runIds });
  }

  /** Printable report as delivered by the API, byte-for-byte unmodified. */
  async printableReport(runId: string): Promise<string> {
    const response = await this.fetchImpl(
      `${this.base}/v1/runs/${runId}/report?format=printable`, { method: "GET" });
    if (!response.ok) {
      throw new ApiError(response.status, (await response.json()) as ApiErrorBody);
    }
    return response.text();
  }
}

/** API base URL: ?api= query parameter, then <meta name="agrivest-api">,
 * then same-origin default port 8000. */
export function resolveApiBase(locationSearch: string,
                               metaContent: string | null): string {
  const fromQuery = new URLSearchParams(locationSearch).get("api");
  if (fromQuery) return fromQuery;
  if (metaContent) return metaContent;
  return "http://localhost:8000";
}
