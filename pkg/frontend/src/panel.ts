import type { MetricsResponse } from "./types.js";

// Actor inspection panel: every number is a raw server value, the client
// only arranges them per layer.

export interface PanelRow {
  layer: string;
  degree: number;
  relevance: number;
  xrelevance: number;
}

export interface PanelData {
  actor: string;
  rows: PanelRow[];
}

function rowOf(table: MetricsResponse | null, actor: string): number[] {
  if (!table) return [];
  const index = table.actors.indexOf(actor);
  return index < 0 ? [] : (table.values[index] ?? []);
}

export function buildPanel(
  actor: string,
  layers: string[],
  degree: MetricsResponse | null,
  relevance: MetricsResponse | null,
  xrelevance: MetricsResponse | null,
): PanelData {
  const deg = rowOf(degree, actor);
  const rel = rowOf(relevance, actor);
  const xrel = rowOf(xrelevance, actor);
  return {
    actor,
    rows: layers.map((layer, i) => ({
      layer,
      degree: deg[i] ?? 0,
      relevance: rel[i] ?? 0,
      xrelevance: xrel[i] ?? 0,
    })),
  };
}
