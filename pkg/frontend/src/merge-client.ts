import type { Api } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import type { MergeMetric, MergeResponse } from "./types.js";

export interface MergeHandlers {
  onResult(merge: MergeResponse): void;
  onError(error: unknown): void;
}

/**
 * Debounced merge fetcher with staleness protection. Requests are
 * debounced (default 150 ms), the previous in-flight request is aborted
 * when a new one fires, and responses carry a sequence number so a late
 * stale response can never overwrite a newer one.
 */
export class MergeClient {
  private seq = 0;
  private controller: AbortController | null = null;
  private readonly debounced: Debounced<[MergeMetric, number]>;

  constructor(
    private readonly api: Api,
    private readonly handlers: MergeHandlers,
    debounceMs = 150,
  ) {
    this.debounced = debounce((metric, threshold) => {
      void this.fire(metric, threshold);
    }, debounceMs);
  }

  /** Schedule a merge request; rapid calls collapse into the last one. */
  request(metric: MergeMetric, threshold: number): void {
    this.debounced(metric, threshold);
  }

  cancel(): void {
    this.debounced.cancel();
    this.controller?.abort();
  }

  private async fire(metric: MergeMetric, threshold: number): Promise<void> {
    const id = ++this.seq;
    this.controller?.abort();
    this.controller = typeof AbortController === "undefined" ? null : new AbortController();
    try {
      const merge = await this.api.merge(metric, threshold, this.controller?.signal);
      if (id === this.seq) this.handlers.onResult(merge);
    } catch (error) {
      if (id !== this.seq) return; // superseded, drop silently
      if ((error as { name?: string }).name === "AbortError") return;
      this.handlers.onError(error);
    }
  }
}
