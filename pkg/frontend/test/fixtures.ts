import type {
  MergeMetric,
  MergeResponse,
  MetricsResponse,
  NetworkResponse,
  SweepResponse,
} from "../src/types.js";

export const network: NetworkResponse = {
  actors: ["a", "b", "c", "d"],
  layers: ["work", "lunch"],
  edges: [
    { a: "a", b: "b", layer: "work" },
    { a: "b", b: "c", layer: "work" },
    { a: "a", b: "b", layer: "lunch" },
    { a: "a", b: "c", layer: "lunch" },
    { a: "c", b: "d", layer: "lunch" },
  ],
};

export const layout: Record<string, [number, number]> = {
  a: [0.1, 0.2],
  b: [0.9, 0.2],
  c: [0.5, 0.8],
  d: [0.2, 0.9],
};

export const degreeTable: MetricsResponse = {
  kind: "degree",
  actors: ["a", "b", "c", "d"],
  layers: ["work", "lunch"],
  values: [
    [1, 2],
    [2, 1],
    [1, 2],
    [0, 1],
  ],
};

/** Canned per-(metric, threshold) merge payloads the fake server returns. */
export function mergeResponse(metric: MergeMetric, threshold: number): MergeResponse {
  const all: Record<string, [string, string][]> = {
    work: [["a", "b"], ["b", "c"]],
    lunch: [["a", "b"], ["a", "c"], ["c", "d"]],
  };
  const filtered: Record<string, [string, string][]> =
    threshold >= 0.6
      ? { work: [["a", "b"]], lunch: [["a", "c"]] }
      : threshold > 0
        ? { work: [["a", "b"], ["b", "c"]], lunch: [["a", "c"], ["c", "d"]] }
        : all;
  return {
    metric,
    threshold,
    edges: filtered,
    node_pass_counts: { work: 2, lunch: 2 },
    transitivity: threshold >= 0.6 ? null : 0.25,
  };
}

export const sweepResponse: SweepResponse = {
  kind: "relevance",
  thresholds: [0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
  observed: [0.4, 0.41, 0.42, 0.45, 0.5, 0.55, null, 0.7, null, null],
  null_mean: [0.4, 0.38, 0.36, 0.33, 0.3, 0.28, 0.2, null, null, null],
  null_sd: [0, 0.01, 0.01, 0.02, 0.02, 0.03, 0.05, null, null, null],
  null_replicates: [],
  replicates: 10,
  seed: 42,
};

export interface FakeCall {
  url: string;
  resolve(): void;
}

/**
 * Controllable fake fetch: records every request and, in manual mode,
 * holds responses until the test releases them (to script out-of-order
 * completions).
 */
export function makeFakeFetch(options: { manual?: boolean } = {}) {
  const calls: FakeCall[] = [];

  function payloadFor(url: string): unknown {
    const parsed = new URL(url, "http://fake");
    if (parsed.pathname === "/api/merge") {
      const metric = parsed.searchParams.get("metric") as MergeMetric;
      const threshold = Number(parsed.searchParams.get("threshold"));
      return mergeResponse(metric, threshold);
    }
    if (parsed.pathname === "/api/network") return network;
    if (parsed.pathname === "/api/sweep") return sweepResponse;
    throw new Error(`fake server has no route for ${url}`);
  }

  const fetchFn = (url: string, init?: { signal?: AbortSignal }) =>
    new Promise<Response>((resolve, reject) => {
      const settle = () => {
        if (init?.signal?.aborted) {
          reject(Object.assign(new Error("aborted"), { name: "AbortError" }));
          return;
        }
        resolve(new Response(JSON.stringify(payloadFor(url)), { status: 200 }));
      };
      init?.signal?.addEventListener("abort", () => {
        reject(Object.assign(new Error("aborted"), { name: "AbortError" }));
      });
      if (options.manual) {
        calls.push({ url, resolve: settle });
      } else {
        calls.push({ url, resolve: settle });
        settle();
      }
    });

  return { fetchFn, calls };
}
