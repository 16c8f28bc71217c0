"""Deterministic vector rendering of every figure family: sociograms
(plain, provenance-colored, highlighted), sliced panels, pie-augmented and
ranked sociograms, parallel coordinates, correlation heatmaps, sweep
charts and degree histograms.

Every renderer returns a :class:`SceneDocument`, an ordered list of typed
drawing primitives that serializes to standalone SVG 1.1.  Identical
inputs produce byte-identical SVG: iteration is always over sorted or
declaration-ordered structures and coordinates are emitted with a fixed
number of decimals.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence
from xml.sax.saxutils import escape

from .model import ActorId, LayerId, MultiplexNetwork, SimpleGraph, flatten
from .metrics import JaccardMatrix, MetricTable
from .simplify import SweepResult
from .layout import LayoutMap

# Paul Tol's muted scheme: ten colourblind-safe hues.
DEFAULT_PALETTE = (
    "#332288", "#88CCEE", "#44AA99", "#117733", "#999933",
    "#DDCC77", "#CC6677", "#882255", "#AA4499", "#DDDDDD",
)

NEUTRAL_EDGE = "#888888"
NODE_FILL = "#FFFFFF"
NODE_STROKE = "#222222"
MUTED_FILL = "#DDDDDD"


@dataclass(frozen=True)
class Style:
    palette: tuple[str, ...] = DEFAULT_PALETTE
    node_radius: float = 6.0
    edge_width: float = 1.2
    width: int = 800
    height: int = 600
    font_size: int = 11

    def layer_color(self, index: int) -> str:
        return self.palette[index % len(self.palette)]

    def check_palette(self, layer_count: int) -> None:
        if layer_count > len(self.palette):
            warnings.warn(
                f"palette has {len(self.palette)} colors for {layer_count} layers; cycling",
                stacklevel=3,
            )


def _fin(v: float) -> float:
    if not math.isfinite(v):
        raise ValueError(f"non-finite coordinate {v!r}")
    return float(v)


def _f(v: float) -> str:
    return f"{_fin(v):.2f}"


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    r: float
    fill: str = NODE_FILL
    stroke: str = NODE_STROKE
    stroke_width: float = 1.0
    cls: str = "node"

    def to_svg(self) -> str:
        return (
            f'<circle class="{self.cls}" cx="{_f(self.cx)}" cy="{_f(self.cy)}" '
            f'r="{_f(self.r)}" fill="{self.fill}" stroke="{self.stroke}" '
            f'stroke-width="{_f(self.stroke_width)}"/>'
        )


@dataclass(frozen=True)
class Segment:
    x1: float
    y1: float
    x2: float
    y2: float
    color: str = NEUTRAL_EDGE
    width: float = 1.2
    cls: str = "edge"
    dashed: bool = False

    def to_svg(self) -> str:
        dash = ' stroke-dasharray="6,4"' if self.dashed else ""
        return (
            f'<line class="{self.cls}" x1="{_f(self.x1)}" y1="{_f(self.y1)}" '
            f'x2="{_f(self.x2)}" y2="{_f(self.y2)}" stroke="{self.color}" '
            f'stroke-width="{_f(self.width)}"{dash}/>'
        )


@dataclass(frozen=True)
class Sector:
    """Pie wedge from start_deg spanning sweep_deg clockwise (0 = up)."""

    cx: float
    cy: float
    r: float
    start_deg: float
    sweep_deg: float
    fill: str
    cls: str = "pie-sector"

    def _point(self, deg: float) -> tuple[float, float]:
        rad = math.radians(deg - 90.0)
        return self.cx + self.r * math.cos(rad), self.cy + self.r * math.sin(rad)

    def to_svg(self) -> str:
        if self.sweep_deg >= 360.0 - 1e-9:
            # full disc: two half arcs keep the path well defined
            x0, y0 = self._point(self.start_deg)
            x1, y1 = self._point(self.start_deg + 180.0)
            d = (
                f"M {_f(x0)} {_f(y0)} "
                f"A {_f(self.r)} {_f(self.r)} 0 1 1 {_f(x1)} {_f(y1)} "
                f"A {_f(self.r)} {_f(self.r)} 0 1 1 {_f(x0)} {_f(y0)} Z"
            )
        else:
            x0, y0 = self._point(self.start_deg)
            x1, y1 = self._point(self.start_deg + self.sweep_deg)
            large = 1 if self.sweep_deg > 180.0 else 0
            d = (
                f"M {_f(self.cx)} {_f(self.cy)} L {_f(x0)} {_f(y0)} "
                f"A {_f(self.r)} {_f(self.r)} 0 {large} 1 {_f(x1)} {_f(y1)} Z"
            )
        return f'<path class="{self.cls}" d="{d}" fill="{self.fill}" stroke="none"/>'


@dataclass(frozen=True)
class Polyline:
    points: tuple[tuple[float, float], ...]
    color: str = "#4477AA"
    width: float = 1.5
    cls: str = "line"
    dashed: bool = False

    def to_svg(self) -> str:
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in self.points)
        dash = ' stroke-dasharray="6,4"' if self.dashed else ""
        return (
            f'<polyline class="{self.cls}" points="{pts}" fill="none" '
            f'stroke="{self.color}" stroke-width="{_f(self.width)}"{dash}/>'
        )


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float
    fill: str = "#FFFFFF"
    stroke: str = "none"
    cls: str = "rect"

    def to_svg(self) -> str:
        return (
            f'<rect class="{self.cls}" x="{_f(self.x)}" y="{_f(self.y)}" '
            f'width="{_f(self.w)}" height="{_f(self.h)}" fill="{self.fill}" '
            f'stroke="{self.stroke}"/>'
        )


@dataclass(frozen=True)
class Label:
    x: float
    y: float
    text: str
    size: float = 11.0
    anchor: str = "middle"
    color: str = "#111111"
    cls: str = "label"

    def to_svg(self) -> str:
        return (
            f'<text class="{self.cls}" x="{_f(self.x)}" y="{_f(self.y)}" '
            f'font-size="{_f(self.size)}" font-family="sans-serif" '
            f'text-anchor="{self.anchor}" fill="{self.color}">{escape(self.text)}</text>'
        )


Primitive = Circle | Segment | Sector | Polyline | Rect | Label


@dataclass
class SceneDocument:
    width: int
    height: int
    primitives: list[Primitive] = field(default_factory=list)

    def add(self, *prims: Primitive) -> None:
        self.primitives.extend(prims)

    def count(self, cls: str) -> int:
        return sum(1 for p in self.primitives if p.cls == cls)

    def to_svg(self) -> str:
        body = "\n".join(p.to_svg() for p in self.primitives)
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">\n'
            f"{body}\n</svg>\n"
        )


def _project(layout: LayoutMap, width: float, height: float, margin: float):
    def to_canvas(a: ActorId) -> tuple[float, float]:
        x, y = layout[a]
        return (
            margin + x * (width - 2 * margin),
            margin + (1.0 - y) * (height - 2 * margin),
        )

    return to_canvas


def _require_layout(layout: LayoutMap, actors: Iterable[ActorId]) -> None:
    missing = sorted(a for a in actors if a not in layout)
    if missing:
        raise ValueError(f"layout is missing actors: {', '.join(missing)}")


def _offset_segments(
    scene: SceneDocument,
    graph: SimpleGraph,
    to_canvas,
    style: Style,
    color_by_provenance: bool,
) -> None:
    """One segment per (edge, provenance layer): multi-layer edges become
    parallel offset lines, drawn in (layer, endpoints) order."""
    spacing = max(style.edge_width * 1.8, 2.2)
    layer_pos = {l: i for i, l in enumerate(graph.layers)}
    for li, layer in enumerate(graph.layers):
        color = style.layer_color(li) if color_by_provenance else NEUTRAL_EDGE
        for a, b in sorted(e for e in graph.edges if layer in graph.provenance[e]):
            prov = sorted(graph.provenance[(a, b)], key=layer_pos.get)
            slot = prov.index(layer)
            shift = (slot - (len(prov) - 1) / 2.0) * spacing
            x1, y1 = to_canvas(a)
            x2, y2 = to_canvas(b)
            dx, dy = x2 - x1, y2 - y1
            norm = math.hypot(dx, dy) or 1.0
            ox, oy = -dy / norm * shift, dx / norm * shift
            scene.add(
                Segment(x1 + ox, y1 + oy, x2 + ox, y2 + oy, color, style.edge_width)
            )


def render_sociogram(
    g: SimpleGraph,
    layout: LayoutMap,
    style: Style = Style(),
    *,
    color_by_provenance: bool = False,
    node_size_by_degree: bool = False,
    highlight: Iterable[ActorId] = (),
    labels: bool = False,
) -> SceneDocument:
    """Classic node-link drawing; every provenance entry of an edge gets its
    own (optionally layer-colored) parallel segment."""
    _require_layout(layout, g.actors)
    style.check_palette(len(g.layers))
    scene = SceneDocument(style.width, style.height)
    to_canvas = _project(layout, style.width, style.height, margin=30.0)
    _offset_segments(scene, g, to_canvas, style, color_by_provenance)

    adj = g.adjacency()
    max_deg = max((len(s) for s in adj.values()), default=0)
    marked = set(highlight)
    for a in sorted(g.actors):
        x, y = to_canvas(a)
        r = style.node_radius
        if node_size_by_degree and max_deg > 0:
            r = style.node_radius * (0.4 + 1.2 * math.sqrt(len(adj[a]) / max_deg))
        fill = "#000000" if a in marked else NODE_FILL
        scene.add(Circle(x, y, r, fill=fill))
        if labels:
            scene.add(
                Label(x + r + 2, y + 3, a, size=style.font_size * 0.8, anchor="start")
            )
    return scene


def render_slices(
    net: MultiplexNetwork,
    layouts: Mapping[LayerId, LayoutMap],
    style: Style = Style(),
) -> SceneDocument:
    """Horizontal strip of per-layer panels in layer order; actors without
    edges in a panel's layer are drawn grayed out."""
    missing = [l for l in net.layers if l not in layouts]
    if missing:
        raise ValueError(f"missing layouts for layers: {', '.join(missing)}")
    style.check_palette(len(net.layers))
    scene = SceneDocument(style.width, style.height)
    n = max(len(net.layers), 1)
    panel_w = style.width / n
    margin = max(10.0, panel_w * 0.08)
    for li, layer in enumerate(net.layers):
        layer_graph = flatten(net, [layer])
        layout = layouts[layer]
        _require_layout(layout, net.actors)
        x0 = li * panel_w
        scene.add(
            Rect(x0 + 1, 1, panel_w - 2, style.height - 2, fill="none",
                 stroke="#BBBBBB", cls="panel")
        )
        scene.add(
            Label(x0 + panel_w / 2, 16, layer, size=style.font_size, cls="panel-title")
        )

        def to_canvas(a, _x0=x0):
            x, y = layout[a]
            return (
                _x0 + margin + x * (panel_w - 2 * margin),
                24 + margin + (1.0 - y) * (style.height - 24 - 2 * margin - 10),
            )

        color = style.layer_color(li)
        for a, b in sorted(net.edges[layer]):
            x1, y1 = to_canvas(a)
            x2, y2 = to_canvas(b)
            scene.add(Segment(x1, y1, x2, y2, color, style.edge_width))
        members = net.incident_actors(layer)
        for a in sorted(net.actors):
            x, y = to_canvas(a)
            if a in members:
                scene.add(Circle(x, y, style.node_radius * 0.6))
            else:
                scene.add(
                    Circle(x, y, style.node_radius * 0.45, fill=MUTED_FILL,
                           stroke="#AAAAAA", cls="node-absent")
                )
    return scene


def render_pie_augmented(
    net: MultiplexNetwork, layout: LayoutMap, style: Style = Style()
) -> SceneDocument:
    """Sociogram whose nodes are pie charts of per-layer degree, sized by
    the square root of total multiplex degree."""
    _require_layout(layout, net.actors)
    style.check_palette(len(net.layers))
    scene = SceneDocument(style.width, style.height)
    to_canvas = _project(layout, style.width, style.height, margin=34.0)
    _offset_segments(scene, flatten(net), to_canvas, style, color_by_provenance=True)

    degs = {
        a: [sum(1 for e in net.edges[l] if a in e) for l in net.layers]
        for a in net.actors
    }
    max_total = max((sum(d) for d in degs.values()), default=0)
    for a in sorted(net.actors):
        x, y = to_canvas(a)
        total = sum(degs[a])
        if total == 0:
            scene.add(
                Circle(x, y, 2.5, fill="none", stroke="#999999", cls="node-hollow")
            )
            continue
        r = 3.0 + 2.2 * style.node_radius * math.sqrt(total / max_total)
        start = 0.0
        for li, layer in enumerate(net.layers):
            d = degs[a][li]
            if d == 0:
                continue
            sweep = 360.0 * d / total
            scene.add(Sector(x, y, r, start, sweep, style.layer_color(li)))
            start += sweep
    return scene


def render_ranked(
    net: MultiplexNetwork,
    values: Mapping[ActorId, float],
    style: Style = Style(),
    *,
    top_labels: int = 5,
) -> SceneDocument:
    """Ranking-based positioning: actors sorted by metric left to right,
    each occupying a slot as wide as its incident multiplex edge count;
    every incident edge is a vertical layer-colored segment from the
    owner's metric value to the partner's, so each edge appears twice."""
    missing = sorted(a for a in net.actors if a not in values)
    if missing:
        raise ValueError(f"metric values missing for actors: {', '.join(missing)}")
    style.check_palette(len(net.layers))
    scene = SceneDocument(style.width, style.height)
    left, right, top, bottom = 46.0, 14.0, 20.0, 30.0
    plot_w = style.width - left - right
    plot_h = style.height - top - bottom

    order = sorted(net.actors, key=lambda a: (-values[a], a))
    rank = {a: i for i, a in enumerate(order)}
    incident: dict[ActorId, list[tuple[int, ActorId]]] = {a: [] for a in order}
    for li, layer in enumerate(net.layers):
        for a, b in sorted(net.edges[layer]):
            incident[a].append((li, b))
            incident[b].append((li, a))
    widths = {a: max(len(incident[a]), 1) for a in order}
    total_w = sum(widths[a] for a in order)
    unit = plot_w / max(total_w, 1)
    vmax = max((v for v in values.values()), default=0.0) or 1.0

    def y_of(v: float) -> float:
        return top + (1.0 - v / vmax) * plot_h

    scene.add(Segment(left, top, left, top + plot_h, "#333333", 1.0, cls="axis"))
    for frac in (0.0, 0.5, 1.0):
        yv = y_of(frac * vmax)
        scene.add(Segment(left - 4, yv, left, yv, "#333333", 1.0, cls="axis"))
        scene.add(
            Label(left - 6, yv + 3, f"{frac * vmax:g}", size=style.font_size * 0.8,
                  anchor="end", cls="axis-label")
        )

    x0 = left
    for a in order:
        # within-slot order: by (layer, partner rank)
        slots = sorted(incident[a], key=lambda e: (e[0], rank[e[1]]))
        for i, (li, partner) in enumerate(slots):
            x = x0 + (i + 0.5) * unit
            scene.add(
                Segment(x, y_of(values[a]), x, y_of(values[partner]),
                        style.layer_color(li), max(style.edge_width * 0.8, 0.8))
            )
        cx = x0 + widths[a] * unit / 2.0
        scene.add(Circle(cx, y_of(values[a]), 2.6, fill="#000000", stroke="none"))
        if rank[a] < top_labels:
            scene.add(
                Label(cx, y_of(values[a]) - 6, a, size=style.font_size * 0.8)
            )
        x0 += widths[a] * unit
    return scene


def render_parallel_coords(table: MetricTable, style: Style = Style()) -> SceneDocument:
    """One vertical axis per layer scaled to its column range; one polyline
    per actor.  Constant columns pin their crossings to the axis midpoint."""
    if not table.actors or not table.layers:
        raise ValueError("metric table must have at least one actor and layer")
    scene = SceneDocument(style.width, style.height)
    left, right, top, bottom = 40.0, 40.0, 24.0, 34.0
    plot_w = style.width - left - right
    plot_h = style.height - top - bottom
    n_axes = len(table.layers)
    xs = [
        left + (plot_w / 2 if n_axes == 1 else i * plot_w / (n_axes - 1))
        for i in range(n_axes)
    ]
    columns = list(zip(*table.values))
    ranges = [(min(col), max(col)) for col in columns]

    def y_of(col_idx: int, v: float) -> float:
        lo, hi = ranges[col_idx]
        frac = 0.5 if hi == lo else (v - lo) / (hi - lo)
        return top + (1.0 - frac) * plot_h

    for i, layer in enumerate(table.layers):
        scene.add(Segment(xs[i], top, xs[i], top + plot_h, "#333333", 1.0, cls="axis"))
        scene.add(
            Label(xs[i], style.height - 14, layer, size=style.font_size,
                  cls="axis-label")
        )
        lo, hi = ranges[i]
        scene.add(
            Label(xs[i], top - 8, f"{hi:g}", size=style.font_size * 0.7,
                  cls="axis-range")
        )
        scene.add(
            Label(xs[i], top + plot_h + 12, f"{lo:g}", size=style.font_size * 0.7,
                  cls="axis-range")
        )
    for a, row in zip(table.actors, table.values):
        pts = tuple((xs[i], y_of(i, v)) for i, v in enumerate(row))
        scene.add(Polyline(pts, color="#4477AA", width=1.0, cls="actor-line"))
    return scene


def _gray(v: float) -> str:
    level = round(255 * (1.0 - v))
    return f"#{level:02X}{level:02X}{level:02X}"


def render_heatmap(m: JaccardMatrix, style: Style = Style()) -> SceneDocument:
    """Layer-by-layer block matrix on a linear grayscale (0 white, 1 black)
    with the numeric value printed in each cell."""
    scene = SceneDocument(style.width, style.height)
    n = len(m.layers)
    if n == 0:
        return scene
    left, top = 90.0, 60.0
    cell = min((style.width - left - 20) / n, (style.height - top - 20) / n)
    for i, layer in enumerate(m.layers):
        scene.add(
            Label(left + (i + 0.5) * cell, top - 10, layer, size=style.font_size,
                  cls="col-label")
        )
        scene.add(
            Label(left - 8, top + (i + 0.5) * cell + 4, layer, size=style.font_size,
                  anchor="end", cls="row-label")
        )
    for i in range(n):
        for j in range(n):
            v = m.values[i][j]
            x, y = left + j * cell, top + i * cell
            scene.add(
                Rect(x, y, cell, cell, fill=_gray(v), stroke="#666666", cls="cell")
            )
            scene.add(
                Label(x + cell / 2, y + cell / 2 + 4, f"{v:.2f}",
                      size=style.font_size * 0.9,
                      color="#FFFFFF" if v > 0.5 else "#111111", cls="cell-value")
            )
    return scene


def _runs(points: Sequence[tuple[float, float | None]]):
    """Split an (x, optional y) series into maximal defined runs."""
    run: list[tuple[float, float]] = []
    for x, y in points:
        if y is None:
            if run:
                yield run
                run = []
        else:
            run.append((x, y))
    if run:
        yield run


def render_sweep_chart(r: SweepResult, style: Style = Style()) -> SceneDocument:
    """Observed transitivity as a solid polyline, null-model mean dashed;
    undefined values break the lines instead of being interpolated."""
    scene = SceneDocument(style.width, style.height)
    left, right, top, bottom = 52.0, 16.0, 16.0, 40.0
    plot_w = style.width - left - right
    plot_h = style.height - top - bottom
    tmin, tmax = min(r.thresholds), max(r.thresholds)
    span = (tmax - tmin) or 1.0

    def x_of(t: float) -> float:
        return left + (t - tmin) / span * plot_w

    def y_of(v: float) -> float:
        return top + (1.0 - v) * plot_h

    scene.add(Segment(left, top + plot_h, left + plot_w, top + plot_h,
                      "#333333", 1.0, cls="axis"))
    scene.add(Segment(left, top, left, top + plot_h, "#333333", 1.0, cls="axis"))
    for t in r.thresholds:
        scene.add(Segment(x_of(t), top + plot_h, x_of(t), top + plot_h + 4,
                          "#333333", 1.0, cls="axis"))
        scene.add(Label(x_of(t), top + plot_h + 16, f"{t:g}",
                        size=style.font_size * 0.8, cls="axis-label"))
    for v in (0.0, 0.5, 1.0):
        scene.add(Segment(left - 4, y_of(v), left, y_of(v), "#333333", 1.0,
                          cls="axis"))
        scene.add(Label(left - 7, y_of(v) + 3, f"{v:g}", size=style.font_size * 0.8,
                        anchor="end", cls="axis-label"))

    series = [
        (list(zip(r.thresholds, r.observed)), "#117733", False, "observed"),
        (list(zip(r.thresholds, r.null_means())), "#CC6677", True, "null"),
    ]
    for points, color, dashed, cls in series:
        for run in _runs(points):
            if len(run) == 1:
                t, v = run[0]
                scene.add(Circle(x_of(t), y_of(v), 2.4, fill=color, stroke="none",
                                 cls=f"{cls}-point"))
            else:
                pts = tuple((x_of(t), y_of(v)) for t, v in run)
                scene.add(Polyline(pts, color=color, width=1.8, dashed=dashed,
                                   cls=cls))
    return scene


def render_histogram(
    h: Mapping[int, int], style: Style = Style(), scale: str = "linear"
) -> SceneDocument:
    """Degree histogram: linear bars, or a log-log scatter for long-tailed
    distributions (zero-degree bin only shown on the linear scale)."""
    if scale not in ("linear", "loglog"):
        raise ValueError(f"unknown scale {scale!r}")
    scene = SceneDocument(style.width, style.height)
    left, right, top, bottom = 52.0, 16.0, 16.0, 40.0
    plot_w = style.width - left - right
    plot_h = style.height - top - bottom
    scene.add(Segment(left, top + plot_h, left + plot_w, top + plot_h,
                      "#333333", 1.0, cls="axis"))
    scene.add(Segment(left, top, left, top + plot_h, "#333333", 1.0, cls="axis"))

    if scale == "linear":
        bins = sorted(h.items())
        if not bins:
            return scene
        max_count = max(c for _, c in bins)
        bar_w = plot_w / len(bins)
        for i, (deg, count) in enumerate(bins):
            bh = count / max_count * plot_h
            scene.add(Rect(left + i * bar_w + 1, top + plot_h - bh,
                           max(bar_w - 2, 1.0), bh, fill="#4477AA", cls="bar"))
            scene.add(Label(left + (i + 0.5) * bar_w, top + plot_h + 14, str(deg),
                            size=style.font_size * 0.75, cls="axis-label"))
        scene.add(Label(left - 7, top + 4, str(max_count),
                        size=style.font_size * 0.8, anchor="end", cls="axis-label"))
        return scene

    positive = sorted((d, c) for d, c in h.items() if d > 0)
    if not positive:
        raise ValueError("log-log scale requires at least one positive degree")
    max_ld = max(math.log10(d) for d, _ in positive) or 1.0
    max_lc = max(math.log10(c) for _, c in positive) or 1.0
    for d, c in positive:
        x = left + (math.log10(d) / max_ld) * (plot_w - 10)
        y = top + (1.0 - math.log10(c) / max_lc) * (plot_h - 10) + 5
        scene.add(Circle(x, y, 3.0, fill="#4477AA", stroke="none", cls="point"))
    for exp in range(int(max_ld) + 1):
        x = left + (exp / max_ld) * (plot_w - 10)
        scene.add(Label(x, top + plot_h + 14, f"10^{exp}",
                        size=style.font_size * 0.75, cls="axis-label"))
    for exp in range(int(max_lc) + 1):
        y = top + (1.0 - exp / max_lc) * (plot_h - 10) + 5
        scene.add(Label(left - 7, y + 3, f"10^{exp}", size=style.font_size * 0.75,
                        anchor="end", cls="axis-label"))
    return scene
