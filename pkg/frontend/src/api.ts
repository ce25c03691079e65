// Thin client for the rendering service. The fetch function is injected
// so tests can run against canned responses.

import type {
  CatalogResponse,
  DiffResponse,
  LintReport,
  RenderResponse,
  Scene,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ServiceError(
        response.status,
        typeof payload.code === "string" ? payload.code : "error",
        typeof payload.message === "string" ? payload.message : "service error",
      );
    }
    return payload as T;
  }

  health(): Promise<{ ok: boolean }> {
    return this.request("GET", "/api/health");
  }

  catalog(): Promise<CatalogResponse> {
    return this.request("GET", "/api/catalog");
  }

  render(scene: Scene): Promise<RenderResponse> {
    return this.request("POST", "/api/render", { scene });
  }

  lint(scene: Scene): Promise<LintReport> {
    return this.request("POST", "/api/lint", { scene });
  }

  diff(before: Scene, after: Scene): Promise<DiffResponse> {
    return this.request("POST", "/api/diff", { before, after });
  }
}
