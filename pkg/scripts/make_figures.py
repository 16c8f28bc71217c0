#!/usr/bin/env python3
"""Render the full figure catalog from a multinet file into an output
directory: sociograms (plain, colored, highlighted), sliced views with
shared and independent layouts, pie-augmented and ranked sociograms,
parallel coordinates, the layer correlation heatmap, degree histograms,
the relevance/exclusive-relevance transitivity sweeps against the null
model, and the locally merged sociograms at the two reference thresholds.

One shared layout (computed on the flattened network) is reused across
all node-link figures so they can be compared side by side.

    python3 scripts/make_figures.py [--net tests/data/aucs.mpx] [--out out/figures]

Also renders the ranked sociograms for a generated preferential vs
uniform two-layer pair, mirroring the synthetic-network comparison.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from multiviz.generate import GeneratorSpec, generate, matched_uniform_probability
from multiviz.layout import LayoutParams, force_layout, slice_layouts
from multiviz.metrics import (
    degree,
    degree_distribution,
    jaccard_matrix,
    metric_table,
)
from multiviz.model import flatten, parse_multinet
from multiviz.render import (
    Style,
    render_heatmap,
    render_histogram,
    render_parallel_coords,
    render_pie_augmented,
    render_ranked,
    render_slices,
    render_sociogram,
    render_sweep_chart,
)
from multiviz.simplify import MergeSpec, local_merge, sweep


def write(path: Path, scene):
    path.write_text(scene.to_svg())
    print(f"wrote {path}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    default_net = Path(__file__).resolve().parent.parent / "tests/data/aucs.mpx"
    ap.add_argument("--net", default=str(default_net))
    ap.add_argument("--out", default="out/figures")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--iterations", type=int, default=500)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    net = parse_multinet(Path(args.net).read_text()).network
    params = LayoutParams(iterations=args.iterations, seed=args.seed)
    style = Style()
    flat = flatten(net)
    shared = force_layout(flat, params)

    lunch_graph = flatten(net, ["lunch"]) if "lunch" in net.layers else flat
    lunch_layout = force_layout(lunch_graph, params)
    write(out / "01_single_layer.svg",
          render_sociogram(lunch_graph, lunch_layout, style, node_size_by_degree=True))
    write(out / "02_degree_histogram.svg",
          render_histogram(degree_distribution(net, ["lunch"] if "lunch" in net.layers else None), style))
    write(out / "03_flattened_plain.svg", render_sociogram(flat, shared, style))
    write(out / "04_flattened_colored.svg",
          render_sociogram(flat, shared, style, color_by_provenance=True))
    write(out / "05_slices_shared.svg",
          render_slices(net, slice_layouts(net, "shared", params), style))
    write(out / "06_slices_independent.svg",
          render_slices(net, slice_layouts(net, "independent", params), style))
    write(out / "07_pies.svg", render_pie_augmented(net, shared, style))
    values = {a: float(degree(net, a, net.layers)) for a in net.actors}
    write(out / "08_ranked.svg", render_ranked(net, values, style))
    write(out / "09_parallel_coords_relevance.svg",
          render_parallel_coords(metric_table(net, "relevance"), style))
    write(out / "10_parallel_coords_xrelevance.svg",
          render_parallel_coords(metric_table(net, "xrelevance"), style))
    write(out / "11_jaccard_heatmap.svg", render_heatmap(jaccard_matrix(net), style))

    for kind, threshold, name in (("relevance", 0.6, "12_merge_relevance_06"),
                                  ("xrelevance", 0.3, "13_merge_xrelevance_03")):
        merged = local_merge(net, MergeSpec(kind, threshold))
        write(out / f"{name}.svg",
              render_sociogram(flatten(merged), shared, style,
                               color_by_provenance=True, labels=True))

    grid = [round(0.1 * i, 10) for i in range(10)]
    write(out / "14_sweep_relevance.svg",
          render_sweep_chart(sweep(net, "relevance", grid, 10, args.seed), style))
    write(out / "15_sweep_xrelevance.svg",
          render_sweep_chart(sweep(net, "xrelevance", grid[:7], 10, args.seed), style))

    pref_spec = GeneratorSpec(model="preferential", actor_count=200, layer_count=2,
                              attachment_count=2, seed_clique=2, seed=args.seed)
    pref = generate(pref_spec)
    uni = generate(GeneratorSpec(model="uniform", actor_count=200, layer_count=2,
                                 edge_probability=matched_uniform_probability(pref_spec),
                                 seed=args.seed))
    for name, g in (("16_ranked_preferential", pref), ("17_ranked_uniform", uni)):
        vals = {a: float(degree(g, a, g.layers)) for a in g.actors}
        write(out / f"{name}.svg", render_ranked(g, vals, style, top_labels=3))
    write(out / "18_histogram_loglog_preferential.svg",
          render_histogram(degree_distribution(pref, [pref.layers[0]]), style,
                           scale="loglog"))


if __name__ == "__main__":
    main()
