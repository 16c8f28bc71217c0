import type {
  CorrelationResponse,
  LayoutResponse,
  MergeMetric,
  MergeResponse,
  MetricsResponse,
  NetworkResponse,
  SweepResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

/** Thin typed client over the read-only JSON service. */
export class Api {
  constructor(
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
    private readonly base: string = "",
  ) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const resp = await this.fetchFn(this.base + path, { signal });
    if (!resp.ok) {
      let detail = `HTTP ${resp.status}`;
      try {
        const body = (await resp.json()) as { error?: string };
        if (body.error) detail = body.error;
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  network(): Promise<NetworkResponse> {
    return this.get("/api/network");
  }

  metrics(kind: string): Promise<MetricsResponse> {
    return this.get(`/api/metrics?kind=${encodeURIComponent(kind)}`);
  }

  merge(metric: MergeMetric, threshold: number, signal?: AbortSignal): Promise<MergeResponse> {
    return this.get(`/api/merge?metric=${metric}&threshold=${threshold}`, signal);
  }

  sweep(metric: MergeMetric, thresholds: string, replicates: number): Promise<SweepResponse> {
    return this.get(
      `/api/sweep?metric=${metric}&thresholds=${encodeURIComponent(thresholds)}` +
        `&replicates=${replicates}`,
    );
  }

  layout(mode: "shared" | "independent"): Promise<LayoutResponse> {
    return this.get(`/api/layout?mode=${mode}`);
  }

  correlation(): Promise<CorrelationResponse> {
    return this.get("/api/correlation");
  }
}
