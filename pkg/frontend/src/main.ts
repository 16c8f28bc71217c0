import { Api, ApiError } from "./api.js";
import { buildSweepChart } from "./chart.js";
import { MergeClient } from "./merge-client.js";
import { buildPanel } from "./panel.js";
import { buildScene } from "./scene.js";
import { Store } from "./store.js";
import type {
  MergeMetric,
  MergeResponse,
  MetricsResponse,
  NetworkResponse,
  SweepResponse,
  ViewMode,
} from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SWEEP_GRID = "0:0.9:0.05";
const REPLICATES = 10; // fixed sweep protocol

const api = new Api();

interface Loaded {
  network: NetworkResponse;
  layout: Record<string, [number, number]>;
  degree: MetricsResponse;
  relevance: MetricsResponse;
  xrelevance: MetricsResponse;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

class ExplorerApp {
  private store!: Store;
  private mergeClient!: MergeClient;
  private merge: MergeResponse | null = null;
  private sweeps = new Map<MergeMetric, SweepResponse>();
  private loaded!: Loaded;

  private readonly root = document.getElementById("app") as HTMLElement;
  private readonly banner = el("div", { class: "banner hidden" });
  private readonly controls = el("div", { class: "controls" });
  private readonly canvasBox = el("div", { class: "canvas" });
  private readonly sidePanel = el("div", { class: "panel" });
  private readonly chartBox = el("div", { class: "chart hidden" });
  private readonly readout = el("span", { class: "readout" });

  async start(): Promise<void> {
    this.root.append(this.banner, this.controls, this.canvasBox, this.chartBox, this.sidePanel);
    try {
      const [network, layout, degree, relevance, xrelevance] = await Promise.all([
        api.network(),
        api.layout("shared"),
        api.metrics("degree"),
        api.metrics("relevance"),
        api.metrics("xrelevance"),
      ]);
      const layer0 = network.layers[0] as string;
      this.loaded = {
        network,
        layout: layout.layouts[layer0] ?? {},
        degree,
        relevance,
        xrelevance,
      };
    } catch (error) {
      this.showBanner(`Server unreachable: ${String(error)}`, () => void this.start());
      return;
    }
    this.store = new Store(this.loaded.network.layers);
    this.mergeClient = new MergeClient(api, {
      onResult: (merge) => {
        this.merge = merge;
        this.hideBanner();
        this.render();
      },
      onError: (error) => {
        if (error instanceof ApiError && error.status === 400) {
          this.showInlineError(error.message);
        } else {
          this.showBanner(`Merge request failed: ${String(error)}`, () =>
            this.requestMerge(),
          );
        }
      },
    });
    this.buildControls();
    this.store.subscribe(() => this.render());
    this.requestMerge();
    this.render();
  }

  private requestMerge(): void {
    const { metric, threshold } = this.store.get();
    this.mergeClient.request(metric, threshold);
  }

  private async ensureSweep(metric: MergeMetric): Promise<void> {
    if (this.sweeps.has(metric)) return;
    try {
      const sweep = await api.sweep(metric, SWEEP_GRID, REPLICATES);
      this.sweeps.set(metric, sweep);
      this.render();
    } catch (error) {
      this.showBanner(`Sweep failed: ${String(error)}`, () => {
        void this.ensureSweep(metric);
      });
    }
  }

  private buildControls(): void {
    const metricSel = el("select", { id: "metric" });
    for (const m of ["relevance", "xrelevance"]) {
      metricSel.append(el("option", { value: m }, m));
    }
    metricSel.addEventListener("change", () => {
      this.store.setMetric(metricSel.value as MergeMetric);
      this.requestMerge();
      if (this.store.get().sweepOverlay) void this.ensureSweep(this.store.get().metric);
    });

    const slider = el("input", {
      id: "threshold", type: "range", min: "0", max: "1", step: "0.05", value: "0",
    });
    slider.addEventListener("input", () => {
      this.store.setThreshold(Number(slider.value));
      this.requestMerge();
    });

    const viewSel = el("select", { id: "view" });
    for (const v of ["flattened", "slices", "merged", "ranked"]) {
      viewSel.append(el("option", { value: v }, v));
    }
    viewSel.addEventListener("change", () => this.store.setView(viewSel.value as ViewMode));

    const sweepToggle = el("input", { id: "sweep-toggle", type: "checkbox" });
    sweepToggle.addEventListener("change", () => {
      this.store.setSweepOverlay(sweepToggle.checked);
      if (sweepToggle.checked) void this.ensureSweep(this.store.get().metric);
    });

    const layerBox = el("span", { class: "layers" });
    for (const layer of this.loaded.network.layers) {
      const box = el("input", { type: "checkbox", id: `layer-${layer}` });
      box.checked = true;
      box.addEventListener("change", () => {
        if (!this.store.toggleLayer(layer)) box.checked = true; // last one stays on
      });
      const label = el("label", { for: `layer-${layer}` }, layer);
      layerBox.append(box, label);
    }

    this.controls.append(
      el("label", { for: "view" }, "view"), viewSel,
      el("label", { for: "metric" }, "metric"), metricSel,
      el("label", { for: "threshold" }, "threshold"), slider, this.readout,
      layerBox,
      el("label", { for: "sweep-toggle" }, "sweep overlay"), sweepToggle,
    );
  }

  private showBanner(message: string, retry: () => void): void {
    this.banner.classList.remove("hidden");
    this.banner.textContent = message + " ";
    const button = el("button", {}, "retry");
    button.addEventListener("click", retry);
    this.banner.append(button);
  }

  private hideBanner(): void {
    this.banner.classList.add("hidden");
  }

  private showInlineError(message: string): void {
    this.readout.textContent = `invalid request: ${message}`;
  }

  private render(): void {
    const state = this.store.get();
    const scene = buildScene({
      network: this.loaded.network,
      layout: this.loaded.layout,
      state,
      merge: this.merge,
      degrees: this.loaded.degree,
      width: 900,
      height: 560,
    });
    const svg = svgEl("svg", {
      width: String(scene.width), height: String(scene.height),
      viewBox: `0 0 ${scene.width} ${scene.height}`,
    });
    for (const e of scene.edges) {
      svg.append(svgEl("line", {
        x1: e.x1.toFixed(1), y1: e.y1.toFixed(1),
        x2: e.x2.toFixed(1), y2: e.y2.toFixed(1),
        stroke: e.color, "stroke-width": String(e.width),
      }));
    }
    for (const n of scene.nodes) {
      const circle = svgEl("circle", {
        cx: n.x.toFixed(1), cy: n.y.toFixed(1), r: String(n.r),
        fill: n.fill, stroke: n.stroke,
      });
      const actor = n.id.includes(":") ? (n.id.split(":")[1] as string) : n.id;
      circle.addEventListener("mouseenter", () => this.store.setHovered(actor));
      circle.addEventListener("mouseleave", () => this.store.setHovered(null));
      circle.addEventListener("click", () =>
        this.store.setSelected(this.store.get().selected === actor ? null : actor),
      );
      svg.append(circle);
    }
    for (const label of scene.labels) {
      const text = svgEl("text", {
        x: label.x.toFixed(1), y: label.y.toFixed(1),
        "font-size": "11", "text-anchor": "middle",
      });
      text.textContent = label.text;
      svg.append(text);
    }
    this.canvasBox.replaceChildren(svg);

    const transitivity =
      state.view === "merged" && this.merge
        ? this.merge.transitivity === null
          ? "undefined"
          : this.merge.transitivity.toFixed(4)
        : "";
    const nullMean = this.currentNullMean(state.metric, state.threshold);
    this.readout.textContent =
      `t=${state.threshold.toFixed(2)}` +
      (transitivity ? ` transitivity=${transitivity}` : "") +
      (nullMean !== null ? ` null=${nullMean.toFixed(4)}` : "");

    this.renderChart(state);
    this.renderPanel(state);
  }

  private currentNullMean(metric: MergeMetric, threshold: number): number | null {
    const sweep = this.sweeps.get(metric);
    if (!sweep) return null;
    let best: number | null = null;
    let gap = Infinity;
    sweep.thresholds.forEach((t, i) => {
      const d = Math.abs(t - threshold);
      if (d < gap) {
        gap = d;
        best = sweep.null_mean[i] ?? null;
      }
    });
    return best;
  }

  private renderChart(state: { sweepOverlay: boolean; metric: MergeMetric; threshold: number }): void {
    if (!state.sweepOverlay) {
      this.chartBox.classList.add("hidden");
      return;
    }
    this.chartBox.classList.remove("hidden");
    const sweep = this.sweeps.get(state.metric) ?? null;
    const chart = buildSweepChart(sweep, state.threshold, 420, 200);
    if (sweep && chart.empty) {
      this.chartBox.replaceChildren(el("div", {}, "no defined transitivity"));
      return;
    }
    const svg = svgEl("svg", {
      width: String(chart.width), height: String(chart.height),
      viewBox: `0 0 ${chart.width} ${chart.height}`,
    });
    svg.append(svgEl("line", {
      x1: String(chart.xOf(0)), y1: String(chart.yOf(0)),
      x2: String(chart.xOf(0.9)), y2: String(chart.yOf(0)),
      stroke: "#333",
    }));
    for (const line of chart.lines) {
      svg.append(svgEl("polyline", {
        points: line.points.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(" "),
        fill: "none",
        stroke: line.series === "observed" ? "#117733" : "#CC6677",
        "stroke-width": "1.8",
        ...(line.dashed ? { "stroke-dasharray": "6,4" } : {}),
      }));
    }
    for (const point of chart.points) {
      svg.append(svgEl("circle", {
        cx: point.x.toFixed(1), cy: point.y.toFixed(1), r: "2.5",
        fill: point.series === "observed" ? "#117733" : "#CC6677",
      }));
    }
    svg.append(svgEl("line", {
      x1: chart.cursorX.toFixed(1), y1: "0",
      x2: chart.cursorX.toFixed(1), y2: String(chart.height),
      stroke: "#999999", "stroke-dasharray": "3,3",
    }));
    this.chartBox.replaceChildren(svg);
  }

  private renderPanel(state: { selected: string | null; hovered: string | null }): void {
    const actor = state.selected ?? state.hovered;
    if (!actor) {
      this.sidePanel.replaceChildren(
        el("div", { class: "hint" }, "hover or click an actor to inspect it"),
      );
      return;
    }
    const panel = buildPanel(
      actor,
      this.loaded.network.layers,
      this.loaded.degree,
      this.loaded.relevance,
      this.loaded.xrelevance,
    );
    const table = el("table");
    const head = el("tr");
    for (const h of ["layer", "degree", "relevance", "xrelevance"]) {
      head.append(el("th", {}, h));
    }
    table.append(head);
    for (const row of panel.rows) {
      const tr = el("tr");
      tr.append(
        el("td", {}, row.layer),
        el("td", {}, String(row.degree)),
        el("td", {}, row.relevance.toFixed(3)),
        el("td", {}, row.xrelevance.toFixed(3)),
      );
      table.append(tr);
    }
    this.sidePanel.replaceChildren(el("h3", {}, panel.actor), table);
  }
}

void new ExplorerApp().start();
