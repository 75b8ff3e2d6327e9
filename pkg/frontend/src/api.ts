/**
 * Thin typed client for the vendor-selection HTTP API.
 * The fetch implementation is injectable so tests can stub the service.
 */

import type {
  CurveDocument,
  ErrorDocument,
  InstanceDescriptor,
  PoliciesDocument,
  SolutionDocument,
} from "./types.js";

export interface FetchResponse {
  ok: boolean;
  status: number;
  text(): Promise<string>;
}

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<FetchResponse>;

export type ApiResult<T> =
  | { ok: true; data: T }
  | { ok: false; status: number; error: ErrorDocument };

export interface OptimumQuery {
  require?: string[];
  forbid?: string[];
  k?: number | null;
}

async function parseBody(response: FetchResponse): Promise<unknown> {
  const raw = await response.text();
  try {
    return JSON.parse(raw);
  } catch {
    return { error: "BadResponse", detail: raw.slice(0, 200) };
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init)
  ) {}

  private async request<T>(url: string, init?: Parameters<FetchLike>[1]): Promise<ApiResult<T>> {
    const response = await this.fetchFn(this.baseUrl + url, init);
    const body = await parseBody(response);
    if (!response.ok) {
      return { ok: false, status: response.status, error: body as ErrorDocument };
    }
    return { ok: true, data: body as T };
  }

  uploadInstance(csvText: string): Promise<ApiResult<InstanceDescriptor>> {
    return this.request("/api/instances", {
      method: "POST",
      headers: { "content-type": "text/csv" },
      body: csvText,
    });
  }

  getDescriptor(id: string): Promise<ApiResult<InstanceDescriptor>> {
    return this.request(`/api/instances/${encodeURIComponent(id)}`);
  }

  getOptimum(id: string, query: OptimumQuery): Promise<ApiResult<SolutionDocument>> {
    const params = new URLSearchParams();
    if (query.require && query.require.length) params.set("require", query.require.join(","));
    if (query.forbid && query.forbid.length) params.set("forbid", query.forbid.join(","));
    if (query.k != null) params.set("k", String(query.k));
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.request(`/api/instances/${encodeURIComponent(id)}/optimum${suffix}`);
  }

  getCurve(id: string, query: Omit<OptimumQuery, "k">): Promise<ApiResult<CurveDocument>> {
    const params = new URLSearchParams();
    if (query.require && query.require.length) params.set("require", query.require.join(","));
    if (query.forbid && query.forbid.length) params.set("forbid", query.forbid.join(","));
    const suffix = params.toString() ? `?${params.toString()}` : "";
    return this.request(`/api/instances/${encodeURIComponent(id)}/curve${suffix}`);
  }

  getPolicies(id: string): Promise<ApiResult<PoliciesDocument>> {
    return this.request(`/api/instances/${encodeURIComponent(id)}/policies`);
  }
}
