import type { ExplorerState, MergeMetric, ViewMode } from "./types.js";

export const THRESHOLD_STEP = 0.05;

export type Listener = (state: ExplorerState) => void;

function snapThreshold(value: number): number {
  const clamped = Math.min(1, Math.max(0, value));
  // keep slider values on the 0.05 grid free of float drift
  return Math.round(clamped / THRESHOLD_STEP) * THRESHOLD_STEP === clamped
    ? clamped
    : Number((Math.round(clamped / THRESHOLD_STEP) * THRESHOLD_STEP).toFixed(2));
}

/**
 * Single source of truth for the explorer. State changes only through the
 * mutators below, every one of which re-enforces the invariants (threshold
 * on the slider grid, at least one visible layer) and notifies listeners.
 */
export class Store {
  private state: ExplorerState;
  private listeners: Listener[] = [];

  constructor(layers: string[]) {
    this.state = {
      metric: "relevance",
      threshold: 0,
      visibleLayers: Object.fromEntries(layers.map((l) => [l, true])),
      view: "flattened",
      hovered: null,
      selected: null,
      sweepOverlay: false,
    };
  }

  get(): ExplorerState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private commit(next: ExplorerState): void {
    this.state = next;
    for (const listener of this.listeners) listener(next);
  }

  setMetric(metric: MergeMetric): void {
    if (metric !== this.state.metric) this.commit({ ...this.state, metric });
  }

  setThreshold(value: number): void {
    const threshold = snapThreshold(value);
    if (threshold !== this.state.threshold) this.commit({ ...this.state, threshold });
  }

  setView(view: ViewMode): void {
    if (view !== this.state.view) this.commit({ ...this.state, view });
  }

  /** Refuses to hide the last visible layer: layered views need one. */
  toggleLayer(layer: string): boolean {
    const visible = { ...this.state.visibleLayers };
    if (!(layer in visible)) return false;
    if (visible[layer] && Object.values(visible).filter(Boolean).length === 1) {
      return false;
    }
    visible[layer] = !visible[layer];
    this.commit({ ...this.state, visibleLayers: visible });
    return true;
  }

  setHovered(actor: string | null): void {
    if (actor !== this.state.hovered) this.commit({ ...this.state, hovered: actor });
  }

  setSelected(actor: string | null): void {
    if (actor !== this.state.selected) this.commit({ ...this.state, selected: actor });
  }

  setSweepOverlay(on: boolean): void {
    if (on !== this.state.sweepOverlay) this.commit({ ...this.state, sweepOverlay: on });
  }
}
