import { layerColor } from "./palette.js";
import type {
  ExplorerState,
  MergeResponse,
  MetricsResponse,
  NetworkResponse,
} from "./types.js";

// A scene is plain data: the DOM layer turns it into SVG elements and the
// tests assert on it directly. Same inputs, same scene.

export interface SceneNode {
  id: string;
  x: number;
  y: number;
  r: number;
  fill: string;
  stroke: string;
}

export interface SceneEdge {
  key: string; // "a|b|layer"
  a: string;
  b: string;
  layer: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  color: string;
  width: number;
}

export interface SceneLabel {
  x: number;
  y: number;
  text: string;
}

export interface Scene {
  width: number;
  height: number;
  nodes: SceneNode[];
  edges: SceneEdge[];
  labels: SceneLabel[];
}

export interface SceneInputs {
  network: NetworkResponse;
  layout: Record<string, [number, number]>; // shared layout, unit square
  state: ExplorerState;
  merge: MergeResponse | null; // latest merge result (merged view)
  degrees: MetricsResponse | null; // per-layer degree table (ranked view)
  width: number;
  height: number;
}

const MARGIN = 28;
const NODE_R = 5;

function project(
  layout: Record<string, [number, number]>,
  actor: string,
  width: number,
  height: number,
  margin = MARGIN,
): [number, number] {
  const pos = layout[actor] ?? [0.5, 0.5];
  return [
    margin + pos[0] * (width - 2 * margin),
    margin + (1 - pos[1]) * (height - 2 * margin),
  ];
}

function edgeTriples(inputs: SceneInputs): { a: string; b: string; layer: string }[] {
  const { network, state, merge } = inputs;
  if (state.view === "merged") {
    if (!merge) return [];
    const out: { a: string; b: string; layer: string }[] = [];
    for (const layer of network.layers) {
      if (!state.visibleLayers[layer]) continue;
      for (const [a, b] of merge.edges[layer] ?? []) out.push({ a, b, layer });
    }
    return out;
  }
  return network.edges.filter((e) => state.visibleLayers[e.layer]);
}

/** Perpendicular offset so edges of the same pair on several layers render
 * as parallel strands instead of hiding each other. */
function offsetFor(slot: number, count: number): number {
  return (slot - (count - 1) / 2) * 2.4;
}

function nodeFill(state: ExplorerState, actor: string): string {
  if (state.selected === actor) return "#000000";
  if (state.hovered === actor) return "#FFD166";
  return "#FFFFFF";
}

function buildNodeLink(inputs: SceneInputs): Scene {
  const { network, layout, state, width, height } = inputs;
  const triples = edgeTriples(inputs);
  const perPair = new Map<string, string[]>();
  for (const { a, b, layer } of triples) {
    const key = a < b ? `${a}|${b}` : `${b}|${a}`;
    const layers = perPair.get(key) ?? [];
    layers.push(layer);
    perPair.set(key, layers);
  }
  const edges: SceneEdge[] = [];
  for (const { a, b, layer } of triples) {
    const key = a < b ? `${a}|${b}` : `${b}|${a}`;
    const strands = perPair.get(key) as string[];
    const slot = strands.indexOf(layer);
    const [x1, y1] = project(layout, a, width, height);
    const [x2, y2] = project(layout, b, width, height);
    const norm = Math.hypot(x2 - x1, y2 - y1) || 1;
    const shift = offsetFor(slot, strands.length);
    const ox = (-(y2 - y1) / norm) * shift;
    const oy = ((x2 - x1) / norm) * shift;
    const incident = state.selected === a || state.selected === b;
    edges.push({
      key: `${key}|${layer}`,
      a,
      b,
      layer,
      x1: x1 + ox,
      y1: y1 + oy,
      x2: x2 + ox,
      y2: y2 + oy,
      color: layerColor(network.layers, layer),
      width: incident ? 2.6 : 1.2,
    });
  }
  edges.sort((p, q) => (p.key < q.key ? -1 : 1));
  const nodes = network.actors.map((actor) => {
    const [x, y] = project(layout, actor, width, height);
    return {
      id: actor,
      x,
      y,
      r: state.selected === actor || state.hovered === actor ? NODE_R * 1.5 : NODE_R,
      fill: nodeFill(state, actor),
      stroke: "#222222",
    };
  });
  const labels: SceneLabel[] = [];
  const focus = state.selected ?? state.hovered;
  if (focus && layout[focus]) {
    const [x, y] = project(layout, focus, width, height);
    labels.push({ x: x + 9, y: y - 8, text: focus });
  }
  return { width, height, nodes, edges, labels };
}

function buildSlices(inputs: SceneInputs): Scene {
  const { network, layout, state, width, height } = inputs;
  const visible = network.layers.filter((l) => state.visibleLayers[l]);
  const panelW = width / Math.max(visible.length, 1);
  const nodes: SceneNode[] = [];
  const edges: SceneEdge[] = [];
  const labels: SceneLabel[] = [];
  visible.forEach((layer, index) => {
    const x0 = index * panelW;
    const place = (actor: string): [number, number] => {
      const pos = layout[actor] ?? [0.5, 0.5];
      return [
        x0 + 14 + pos[0] * (panelW - 28),
        34 + (1 - pos[1]) * (height - 48),
      ];
    };
    labels.push({ x: x0 + panelW / 2, y: 16, text: layer });
    for (const e of network.edges) {
      if (e.layer !== layer) continue;
      const [x1, y1] = place(e.a);
      const [x2, y2] = place(e.b);
      edges.push({
        key: `${e.a}|${e.b}|${layer}`,
        a: e.a,
        b: e.b,
        layer,
        x1,
        y1,
        x2,
        y2,
        color: layerColor(network.layers, layer),
        width: 1.0,
      });
    }
    for (const actor of network.actors) {
      const [x, y] = place(actor);
      nodes.push({
        id: `${layer}:${actor}`,
        x,
        y,
        r: 2.6,
        fill: nodeFill(state, actor),
        stroke: "#555555",
      });
    }
  });
  return { width, height, nodes, edges, labels };
}

function buildRanked(inputs: SceneInputs): Scene {
  const { network, state, degrees, width, height } = inputs;
  if (!degrees) return { width, height, nodes: [], edges: [], labels: [] };
  // presentation-level aggregation of the server's per-layer degrees
  const total = new Map<string, number>();
  degrees.actors.forEach((actor, i) => {
    const row = degrees.values[i] ?? [];
    total.set(actor, row.reduce((acc, v) => acc + v, 0));
  });
  const order = [...network.actors].sort(
    (p, q) => (total.get(q) ?? 0) - (total.get(p) ?? 0) || (p < q ? -1 : 1),
  );
  const incident = new Map<string, { layer: string; partner: string }[]>();
  for (const actor of order) incident.set(actor, []);
  for (const layer of network.layers) {
    if (!state.visibleLayers[layer]) continue;
    for (const e of network.edges) {
      if (e.layer !== layer) continue;
      incident.get(e.a)?.push({ layer, partner: e.b });
      incident.get(e.b)?.push({ layer, partner: e.a });
    }
  }
  const widths = order.map((a) => Math.max(incident.get(a)?.length ?? 0, 1));
  const totalWidth = widths.reduce((acc, w) => acc + w, 0);
  const unit = (width - 2 * MARGIN) / Math.max(totalWidth, 1);
  const vmax = Math.max(...order.map((a) => total.get(a) ?? 0), 1);
  const yOf = (v: number) => MARGIN + (1 - v / vmax) * (height - 2 * MARGIN);
  const rank = new Map(order.map((a, i) => [a, i]));

  const nodes: SceneNode[] = [];
  const edges: SceneEdge[] = [];
  const labels: SceneLabel[] = [];
  let x0 = MARGIN;
  order.forEach((actor, i) => {
    const slots = [...(incident.get(actor) ?? [])].sort(
      (p, q) =>
        network.layers.indexOf(p.layer) - network.layers.indexOf(q.layer) ||
        (rank.get(p.partner) ?? 0) - (rank.get(q.partner) ?? 0),
    );
    slots.forEach((slot, j) => {
      const x = x0 + (j + 0.5) * unit;
      edges.push({
        key: `${actor}|${slot.partner}|${slot.layer}|${j}`,
        a: actor,
        b: slot.partner,
        layer: slot.layer,
        x1: x,
        y1: yOf(total.get(actor) ?? 0),
        x2: x,
        y2: yOf(total.get(slot.partner) ?? 0),
        color: layerColor(network.layers, slot.layer),
        width: 1.0,
      });
    });
    const w = widths[i] as number;
    const cx = x0 + (w * unit) / 2;
    nodes.push({
      id: actor,
      x: cx,
      y: yOf(total.get(actor) ?? 0),
      r: 2.4,
      fill: state.selected === actor ? "#CC6677" : "#000000",
      stroke: "none",
    });
    if (i < 5) labels.push({ x: cx, y: yOf(total.get(actor) ?? 0) - 7, text: actor });
    x0 += w * unit;
  });
  return { width, height, nodes, edges, labels };
}

/** Pure function of (server responses, explorer state). */
export function buildScene(inputs: SceneInputs): Scene {
  switch (inputs.state.view) {
    case "slices":
      return buildSlices(inputs);
    case "ranked":
      return buildRanked(inputs);
    default:
      return buildNodeLink(inputs);
  }
}
