"""Command-line surface binding all pipelines.

Exit codes: 0 success, 1 usage error, 2 data error.  The path ``-`` means
standard input/output for network and CSV payloads.  Every command is
deterministic given ``--seed``; when the flag is omitted the default seed
42 is used and reported on the diagnostic stream.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import layout as lay
from . import metrics as met
from . import render as ren
from . import simplify as simp
from .generate import GeneratorSpec, generate as generate_network
from .model import flatten, layer_stats, parse_multinet, write_multinet

FIGURES = (
    "sociogram", "flattened", "slices", "pies", "ranked",
    "parcoords", "heatmap", "sweep", "histogram",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with status 2
        raise UsageError(message)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, payload: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(payload)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(payload)


def _load_network(path: str):
    result = parse_multinet(_read_input(path))
    if result.duplicate_edges:
        print(
            f"warning: {result.duplicate_edges} duplicate edge line(s) ignored",
            file=sys.stderr,
        )
    return result.network


def _resolve_seed(args) -> int:
    """Default the seed to 42 and report the value actually used."""
    if args.seed is None:
        args.seed = 42
        print("seed: 42 (default)", file=sys.stderr)
    return args.seed


def build_parser() -> _Parser:
    parser = _Parser(prog="multiviz", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, needs_input: bool = True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_input:
            p.add_argument("input", help="multinet file, or - for stdin")
        p.add_argument("--out", default=None, help="output path, - for stdout")
        p.add_argument("--seed", type=int, default=None)
        return p

    add("stats", help="per-layer edge/component/average-degree table")

    p = add("metrics", help="actor x layer metric table as CSV")
    p.add_argument("--metric", required=True, choices=met.METRIC_KINDS)

    add("correlate", help="layer x layer Jaccard correlation as CSV")

    p = add("merge", help="local-merge filter, emits a multinet file")
    p.add_argument("--metric", required=True, choices=simp.MERGE_KINDS)
    p.add_argument("--threshold", required=True)

    p = add("sweep", help="threshold sweep of observed vs null transitivity")
    p.add_argument("--metric", required=True, choices=simp.MERGE_KINDS)
    p.add_argument("--threshold", default="0:0.9:0.1",
                   help="value, comma list, or start:stop:step")
    p.add_argument("--replicates", type=int, default=10)

    p = add("generate", needs_input=False, help="synthetic multiplex generator")
    p.add_argument("--model", required=True, choices=("uniform", "preferential"))
    p.add_argument("--actors", type=int, required=True)
    p.add_argument("--layers", type=int, default=2)
    p.add_argument("--p", type=float, default=None, help="uniform edge probability")
    p.add_argument("--m", type=int, default=None, help="preferential attachment count")
    p.add_argument("--m0", type=int, default=None, help="preferential seed clique size")
    p.add_argument("--q", type=float, default=0.0, help="cross-layer coupling")

    p = add("layout", help="force-directed coordinates as CSV")
    p.add_argument("--mode", choices=("shared", "independent"), default="shared")
    p.add_argument("--iterations", type=int, default=500)

    p = add("render", help="render one figure family to SVG")
    p.add_argument("--figure", required=True, choices=FIGURES)
    p.add_argument("--metric", default=None)
    p.add_argument("--threshold", default="0:0.9:0.1")
    p.add_argument("--replicates", type=int, default=10)
    p.add_argument("--mode", choices=("shared", "independent"), default="shared")
    p.add_argument("--layout-file", default=None,
                   help="reuse coordinates from a layout CSV")
    p.add_argument("--scale", choices=("linear", "loglog"), default="linear")
    p.add_argument("--highlight", default=None, help="comma list of actors")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--iterations", type=int, default=500)

    p = add("serve", help="serve the JSON API and explorer assets")
    p.add_argument("--assets", default=None, help="static explorer asset directory")

    return parser


def _cmd_stats(args) -> None:
    net = _load_network(args.input)
    stats = layer_stats(net)
    lines = ["layer,edges,components,avg_degree"]
    for layer in net.layers:
        s = stats[layer]
        comp = "" if s.component_count is None else str(s.component_count)
        lines.append(f"{layer},{s.edge_count},{comp},{s.avg_degree:.2f}")
    _write_output(args.out, "\n".join(lines) + "\n")


def _cmd_metrics(args) -> None:
    net = _load_network(args.input)
    _write_output(args.out, met.metric_table(net, args.metric).to_csv())


def _cmd_correlate(args) -> None:
    net = _load_network(args.input)
    _write_output(args.out, met.jaccard_matrix(net).to_csv())


def _parse_single_threshold(text: str) -> float:
    values = simp.parse_threshold_spec(text)
    if len(values) != 1:
        raise UsageError("merge expects a single threshold value")
    return values[0]


def _cmd_merge(args) -> None:
    net = _load_network(args.input)
    spec = simp.MergeSpec(kind=args.metric, threshold=_parse_single_threshold(args.threshold))
    _write_output(args.out, write_multinet(simp.local_merge(net, spec)))


def _cmd_sweep(args) -> None:
    net = _load_network(args.input)
    seed = args.seed
    thresholds = simp.parse_threshold_spec(args.threshold)
    result = simp.sweep(net, args.metric, thresholds, args.replicates, seed)
    _write_output(args.out, result.to_csv())


def _cmd_generate(args) -> None:
    spec = GeneratorSpec(
        model=args.model,
        actor_count=args.actors,
        layer_count=args.layers,
        edge_probability=args.p,
        attachment_count=args.m,
        seed_clique=args.m0,
        coupling=args.q,
        seed=args.seed,
    )
    _write_output(args.out, write_multinet(generate_network(spec)))


def _cmd_layout(args) -> None:
    net = _load_network(args.input)
    params = lay.LayoutParams(iterations=args.iterations, seed=args.seed)
    if args.mode == "shared":
        _write_output(args.out, lay.layout_to_csv(lay.force_layout(flatten(net), params)))
        return
    maps = lay.slice_layouts(net, "independent", params)
    lines = ["layer,actor,x,y"]
    for layer in net.layers:
        for a in sorted(maps[layer]):
            x, y = maps[layer][a]
            lines.append(f"{layer},{a},{x:.6f},{y:.6f}")
    _write_output(args.out, "\n".join(lines) + "\n")


def _cmd_render(args) -> None:
    net = _load_network(args.input)
    seed = args.seed
    params = lay.LayoutParams(iterations=args.iterations, seed=seed)
    style = ren.Style()

    def shared_layout():
        if args.layout_file:
            return lay.layout_from_csv(_read_input(args.layout_file))
        return lay.force_layout(flatten(net), params)

    fig = args.figure
    if fig == "sociogram":
        highlight = args.highlight.split(",") if args.highlight else ()
        scene = ren.render_sociogram(
            flatten(net), shared_layout(), style,
            node_size_by_degree=True, highlight=highlight, labels=args.labels,
        )
    elif fig == "flattened":
        scene = ren.render_sociogram(
            flatten(net), shared_layout(), style, color_by_provenance=True,
            labels=args.labels,
        )
    elif fig == "slices":
        if args.layout_file:
            shared = lay.layout_from_csv(_read_input(args.layout_file))
            layouts = {layer: shared for layer in net.layers}
        else:
            layouts = lay.slice_layouts(net, args.mode, params)
        scene = ren.render_slices(net, layouts, style)
    elif fig == "pies":
        scene = ren.render_pie_augmented(net, shared_layout(), style)
    elif fig == "ranked":
        kind = args.metric or "degree"
        if kind not in met.METRIC_KINDS:
            raise UsageError(f"--metric must be one of {met.METRIC_KINDS}")
        values = {a: met.metric_value(net, a, net.layers, kind) for a in net.actors}
        scene = ren.render_ranked(net, values, style)
    elif fig == "parcoords":
        kind = args.metric or "degree"
        if kind not in met.METRIC_KINDS:
            raise UsageError(f"--metric must be one of {met.METRIC_KINDS}")
        scene = ren.render_parallel_coords(met.metric_table(net, kind), style)
    elif fig == "heatmap":
        scene = ren.render_heatmap(met.jaccard_matrix(net), style)
    elif fig == "sweep":
        kind = args.metric or "relevance"
        if kind not in simp.MERGE_KINDS:
            raise UsageError(f"--metric must be one of {simp.MERGE_KINDS}")
        thresholds = simp.parse_threshold_spec(args.threshold)
        result = simp.sweep(net, kind, thresholds, args.replicates, seed)
        scene = ren.render_sweep_chart(result, style)
    else:  # histogram
        scene = ren.render_histogram(met.degree_distribution(net), style, args.scale)
    _write_output(args.out, scene.to_svg())


def _cmd_serve(args) -> None:
    from .server import ApiSession, serve_forever

    net = _load_network(args.input)
    port = int(os.environ.get("MULTIVIZ_PORT", "8675"))
    session = ApiSession(net, seed=args.seed)
    print(f"serving on http://127.0.0.1:{port}/", file=sys.stderr)
    serve_forever(session, port=port, assets_dir=args.assets)


_COMMANDS = {
    "stats": _cmd_stats,
    "metrics": _cmd_metrics,
    "correlate": _cmd_correlate,
    "merge": _cmd_merge,
    "sweep": _cmd_sweep,
    "generate": _cmd_generate,
    "layout": _cmd_layout,
    "render": _cmd_render,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    _resolve_seed(args)
    try:
        _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except KeyboardInterrupt:
        return 130
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def console_main() -> None:
    sys.exit(main())
