// Shapes of the JSON API served by `multiviz serve`.

export interface NetworkEdge {
  a: string;
  b: string;
  layer: string;
}

export interface NetworkResponse {
  actors: string[];
  layers: string[];
  edges: NetworkEdge[];
}

export interface MergeResponse {
  metric: string;
  threshold: number;
  edges: Record<string, [string, string][]>;
  node_pass_counts: Record<string, number>;
  transitivity: number | null;
}

export interface SweepResponse {
  kind: string;
  thresholds: number[];
  observed: (number | null)[];
  null_mean: (number | null)[];
  null_sd: (number | null)[];
  null_replicates: (number | null)[][];
  replicates: number;
  seed: number;
}

export interface MetricsResponse {
  kind: string;
  actors: string[];
  layers: string[];
  values: number[][];
}

export interface LayoutResponse {
  mode: string;
  layouts: Record<string, Record<string, [number, number]>>;
}

export interface CorrelationResponse {
  layers: string[];
  values: number[][];
}

export type MergeMetric = "relevance" | "xrelevance";
export type ViewMode = "flattened" | "slices" | "merged" | "ranked";

export interface ExplorerState {
  metric: MergeMetric;
  threshold: number; // slider value, step 0.05
  visibleLayers: Record<string, boolean>;
  view: ViewMode;
  hovered: string | null;
  selected: string | null;
  sweepOverlay: boolean;
}
