import math
import xml.etree.ElementTree as ET

import pytest

from multiviz.model import MultiplexNetwork, flatten
from multiviz.metrics import degree, degree_distribution, jaccard_matrix, metric_table
from multiviz.layout import LayoutParams, force_layout, slice_layouts
from multiviz.render import (
    Circle,
    Label,
    Polyline,
    Rect,
    SceneDocument,
    Sector,
    Segment,
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
from multiviz.simplify import SweepResult, sweep

FAST = LayoutParams(iterations=40)


def strict_parse(svg_text):
    root = ET.fromstring(svg_text)
    assert root.tag.endswith("svg")
    return root


@pytest.fixture(scope="module")
def aucs_layout(request):
    aucs = request.getfixturevalue("aucs")
    return force_layout(flatten(aucs), FAST)


class TestSceneDocument:
    def test_rejects_non_finite_coordinates(self):
        with pytest.raises(ValueError):
            Segment(0, 0, math.inf, 1).to_svg()
        with pytest.raises(ValueError):
            Circle(math.nan, 0, 1).to_svg()

    def test_svg_has_dimensions_and_viewbox(self):
        svg = SceneDocument(640, 480).to_svg()
        root = strict_parse(svg)
        assert root.get("width") == "640"
        assert root.get("viewBox") == "0 0 640 480"

    def test_labels_escape_xml(self):
        scene = SceneDocument(100, 100)
        scene.add(Label(10, 10, 'a<b>&"c'))
        strict_parse(scene.to_svg())


class TestSociogram:
    def test_empty_graph_three_isolates(self):
        g = flatten(MultiplexNetwork.build(["a", "b", "c"], ["L1"], []))
        scene = render_sociogram(g, force_layout(g, FAST))
        assert scene.count("node") == 3
        assert scene.count("edge") == 0
        strict_parse(scene.to_svg())

    def test_two_layer_edge_draws_two_parallel_segments(self):
        net = MultiplexNetwork.build(
            ["a", "b"], ["L1", "L2"], [("a", "b", "L1"), ("a", "b", "L2")]
        )
        g = flatten(net)
        scene = render_sociogram(g, force_layout(g, FAST), color_by_provenance=True)
        segs = [p for p in scene.primitives if isinstance(p, Segment) and p.cls == "edge"]
        assert len(segs) == 2
        d1 = (segs[0].x2 - segs[0].x1, segs[0].y2 - segs[0].y1)
        d2 = (segs[1].x2 - segs[1].x1, segs[1].y2 - segs[1].y1)
        assert d1 == pytest.approx(d2)  # parallel
        assert (segs[0].x1, segs[0].y1) != (segs[1].x1, segs[1].y1)
        assert segs[0].color != segs[1].color

    def test_aucs_segment_count_matches_provenance_tally(self, aucs, aucs_layout):
        g = flatten(aucs)
        scene = render_sociogram(g, aucs_layout, color_by_provenance=True)
        tally = sum(len(p) for p in g.provenance.values())
        assert tally == sum(len(aucs.edges[l]) for l in aucs.layers)
        assert scene.count("edge") == tally
        assert scene.count("node") == len(aucs.actors)
        strict_parse(scene.to_svg())

    def test_highlight_paints_black(self):
        net = MultiplexNetwork.build(["a", "b"], ["L1"], [("a", "b", "L1")])
        g = flatten(net)
        scene = render_sociogram(g, force_layout(g, FAST), highlight={"a"})
        fills = {p.fill for p in scene.primitives if isinstance(p, Circle)}
        assert "#000000" in fills

    def test_missing_layout_actor_rejected(self, small_net):
        g = flatten(small_net)
        with pytest.raises(ValueError, match="c"):
            render_sociogram(g, {"a": (0, 0), "b": (1, 1)})

    def test_deterministic_bytes(self, aucs, aucs_layout):
        g = flatten(aucs)
        one = render_sociogram(g, aucs_layout, color_by_provenance=True).to_svg()
        two = render_sociogram(g, aucs_layout, color_by_provenance=True).to_svg()
        assert one == two


class TestSlices:
    def test_aucs_five_panels(self, aucs):
        layouts = slice_layouts(aucs, "shared", FAST)
        scene = render_slices(aucs, layouts)
        assert scene.count("panel-title") == 5
        assert scene.count("panel") == 5
        strict_parse(scene.to_svg())

    def test_missing_layout_rejected(self, aucs):
        layouts = slice_layouts(aucs, "shared", FAST)
        layouts.pop("lunch")
        with pytest.raises(ValueError, match="lunch"):
            render_slices(aucs, layouts)

    def test_absent_actors_grayed(self, aucs):
        layouts = slice_layouts(aucs, "shared", FAST)
        scene = render_slices(aucs, layouts)
        # one actor missing per work/lunch layer, more on the small layers
        assert scene.count("node-absent") == (61 - 60) + (61 - 47) + (61 - 25) + (61 - 60) + (61 - 32)


class TestPies:
    def test_sector_counts_match_active_layers(self, aucs, aucs_layout):
        scene = render_pie_augmented(aucs, aucs_layout)
        sectors = scene.count("pie-sector")
        expected = sum(
            1
            for a in aucs.actors
            for l in aucs.layers
            if degree(aucs, a, [l]) > 0
        )
        assert sectors == expected
        strict_parse(scene.to_svg())

    def test_single_layer_actor_full_disc(self):
        net = MultiplexNetwork.build(["a", "b"], ["L1", "L2"], [("a", "b", "L1")])
        scene = render_pie_augmented(net, {"a": (0.2, 0.5), "b": (0.8, 0.5)})
        sectors = [p for p in scene.primitives if isinstance(p, Sector)]
        assert len(sectors) == 2
        assert all(s.sweep_deg == pytest.approx(360.0) for s in sectors)

    def test_even_split_gives_half_circles(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["L1", "L2"], [("a", "b", "L1"), ("a", "c", "L2")]
        )
        scene = render_pie_augmented(
            net, {"a": (0.5, 0.5), "b": (0.1, 0.1), "c": (0.9, 0.9)}
        )
        a_sectors = [p for p in scene.primitives
                     if isinstance(p, Sector) and (p.cx, p.cy) != (0.0, 0.0)]
        halves = [s for s in a_sectors if s.sweep_deg == pytest.approx(180.0)]
        assert len(halves) == 2

    def test_zero_degree_actor_is_hollow(self):
        net = MultiplexNetwork.build(["a", "b", "x"], ["L1"], [("a", "b", "L1")])
        scene = render_pie_augmented(
            net, {"a": (0.1, 0.1), "b": (0.9, 0.9), "x": (0.5, 0.5)}
        )
        assert scene.count("node-hollow") == 1

    def test_u4_has_largest_radius(self, aucs, aucs_layout):
        scene = render_pie_augmented(aucs, aucs_layout)
        by_center = {}
        for p in scene.primitives:
            if isinstance(p, Sector):
                by_center[(p.cx, p.cy)] = max(by_center.get((p.cx, p.cy), 0), p.r)
        x, y = aucs_layout["U4"]
        # recompute U4's canvas center the way the renderer does
        biggest = max(by_center.values())
        style = Style()
        cx = 34.0 + x * (style.width - 68.0)
        cy = 34.0 + (1 - y) * (style.height - 68.0)
        assert by_center[(cx, cy)] == biggest


class TestRanked:
    def test_star_slot_widths(self):
        net = MultiplexNetwork.build(
            ["hub", "x", "y", "z"], ["L1"],
            [("hub", "x", "L1"), ("hub", "y", "L1"), ("hub", "z", "L1")],
        )
        values = {a: float(degree(net, a, net.layers)) for a in net.actors}
        scene = render_ranked(net, values)
        segs = [p for p in scene.primitives if isinstance(p, Segment) and p.cls == "edge"]
        assert len(segs) == 6  # each edge twice
        assert all(s.x1 == s.x2 for s in segs)  # strictly vertical
        hub_y = min(s.y1 for s in segs)
        hub_segs = [s for s in segs if s.y1 == hub_y]
        assert len(hub_segs) == 3
        lengths = {round(abs(s.y2 - s.y1), 6) for s in hub_segs}
        assert len(lengths) == 1  # equal leaf values -> equal spans

    def test_aucs_total_segments_and_leftmost_actor(self, aucs):
        values = {a: float(degree(aucs, a, aucs.layers)) for a in aucs.actors}
        scene = render_ranked(aucs, values)
        segs = [p for p in scene.primitives if isinstance(p, Segment) and p.cls == "edge"]
        assert len(segs) == 2 * sum(len(aucs.edges[l]) for l in aucs.layers)
        labels = [p for p in scene.primitives if isinstance(p, Label) and p.cls == "label"]
        leftmost = min(labels, key=lambda p: p.x)
        assert leftmost.text == "U4"
        strict_parse(scene.to_svg())

    def test_u4_slot_colors(self, aucs):
        values = {a: float(degree(aucs, a, aucs.layers)) for a in aucs.actors}
        scene = render_ranked(aucs, values)
        style = Style()
        layer_color = {l: style.layer_color(i) for i, l in enumerate(aucs.layers)}
        segs = [p for p in scene.primitives if isinstance(p, Segment) and p.cls == "edge"]
        u4_y = min(s.y1 for s in segs)  # U4 tops the ranking
        u4_colors = {s.color for s in segs if s.y1 == u4_y}
        assert layer_color["work"] in u4_colors
        assert layer_color["lunch"] in u4_colors
        assert layer_color["facebook"] in u4_colors
        assert layer_color["leisure"] not in u4_colors
        assert layer_color["coauthor"] not in u4_colors

    def test_within_slot_segments_never_overlap(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c", "d"], ["L1", "L2"],
            [("a", "b", "L1"), ("a", "c", "L1"), ("a", "d", "L2"), ("b", "c", "L2")],
        )
        values = {a: float(degree(net, a, net.layers)) for a in net.actors}
        scene = render_ranked(net, values)
        xs = [p.x1 for p in scene.primitives if isinstance(p, Segment) and p.cls == "edge"]
        assert len(xs) == len(set(xs))

    def test_missing_value_rejected(self, small_net):
        with pytest.raises(ValueError, match="c"):
            render_ranked(small_net, {"a": 1.0, "b": 0.5})


class TestParallelCoords:
    def test_counts(self, aucs):
        table = metric_table(aucs, "relevance")
        scene = render_parallel_coords(table)
        lines = [p for p in scene.primitives if isinstance(p, Polyline)]
        assert len(lines) == len(aucs.actors)
        assert all(len(p.points) == len(aucs.layers) for p in lines)
        assert scene.count("axis") == len(aucs.layers)
        strict_parse(scene.to_svg())

    def test_single_actor_single_polyline(self):
        net = MultiplexNetwork.build(["a", "b"], ["L1"], [("a", "b", "L1")])
        table = metric_table(net, "degree")
        scene = render_parallel_coords(table)
        assert sum(isinstance(p, Polyline) for p in scene.primitives) == 2

    def test_constant_column_pins_to_midpoint(self):
        net = MultiplexNetwork.build(
            ["a", "b"], ["L1", "L2"], [("a", "b", "L1"), ("a", "b", "L2")]
        )
        table = metric_table(net, "degree")  # all values equal 1
        scene = render_parallel_coords(table)
        lines = [p for p in scene.primitives if isinstance(p, Polyline)]
        ys = {y for p in lines for _, y in p.points}
        assert len(ys) == 1  # every crossing at the shared midpoint

    def test_empty_table_rejected(self):
        net = MultiplexNetwork.build([], [], [])
        with pytest.raises(ValueError):
            render_parallel_coords(metric_table(net, "degree"))


class TestHeatmap:
    def test_aucs_grid(self, aucs):
        scene = render_heatmap(jaccard_matrix(aucs))
        assert scene.count("cell") == 25
        values = [p for p in scene.primitives if p.cls == "cell-value"]
        assert len(values) == 25
        strict_parse(scene.to_svg())

    def test_diagonal_prints_one(self, aucs):
        scene = render_heatmap(jaccard_matrix(aucs))
        texts = [p.text for p in scene.primitives if p.cls == "cell-value"]
        assert texts.count("1.00") >= 5

    def test_symmetric_shading(self, aucs):
        scene = render_heatmap(jaccard_matrix(aucs))
        cells = [p for p in scene.primitives if isinstance(p, Rect) and p.cls == "cell"]
        n = 5
        grid = {}
        xs = sorted({c.x for c in cells})
        ys = sorted({c.y for c in cells})
        for c in cells:
            grid[(ys.index(c.y), xs.index(c.x))] = c.fill
        for i in range(n):
            for j in range(n):
                assert grid[(i, j)] == grid[(j, i)]


class TestSweepChart:
    def test_unbroken_when_all_defined(self):
        r = SweepResult(
            kind="relevance", thresholds=(0.0, 0.1, 0.2),
            observed=(0.5, 0.4, 0.3),
            null_replicates=((0.2, 0.3), (0.2, 0.2), (0.1, 0.1)),
            replicates=2, seed=1,
        )
        scene = render_sweep_chart(r)
        observed = [p for p in scene.primitives if p.cls == "observed"]
        assert len(observed) == 1
        assert len(observed[0].points) == 3
        strict_parse(scene.to_svg())

    def test_absent_breaks_polyline(self):
        r = SweepResult(
            kind="xrelevance", thresholds=(0.0, 0.1, 0.2, 0.3, 0.4),
            observed=(0.5, 0.4, None, 0.3, 0.2),
            null_replicates=((None,),) * 5,
            replicates=1, seed=1,
        )
        scene = render_sweep_chart(r)
        observed = [p for p in scene.primitives if p.cls == "observed"]
        assert len(observed) == 2  # two defined runs around the gap
        assert scene.count("null") == 0

    def test_all_absent_draws_axes_only(self):
        r = SweepResult(
            kind="xrelevance", thresholds=(0.0, 0.5),
            observed=(None, None), null_replicates=((None,), (None,)),
            replicates=1, seed=1,
        )
        scene = render_sweep_chart(r)
        assert scene.count("observed") == 0
        assert scene.count("null") == 0
        assert scene.count("axis") > 0
        strict_parse(scene.to_svg())

    def test_singleton_run_marked_as_point(self):
        r = SweepResult(
            kind="relevance", thresholds=(0.0, 0.1, 0.2),
            observed=(None, 0.4, None), null_replicates=((None,),) * 3,
            replicates=1, seed=1,
        )
        scene = render_sweep_chart(r)
        assert scene.count("observed-point") == 1

    def test_aucs_observed_above_null(self, aucs):
        r = sweep(aucs, "relevance", [0.0, 0.3, 0.6], replicates=5, seed=42)
        scene = render_sweep_chart(r)
        strict_parse(scene.to_svg())


class TestHistogram:
    def test_two_bars(self):
        scene = render_histogram({1: 2, 2: 1})
        assert scene.count("bar") == 2
        bars = [p for p in scene.primitives if p.cls == "bar"]
        assert bars[0].h == pytest.approx(2 * bars[1].h)
        strict_parse(scene.to_svg())

    def test_complete_graph_single_bar(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["L1"],
            [("a", "b", "L1"), ("b", "c", "L1"), ("a", "c", "L1")],
        )
        scene = render_histogram(degree_distribution(net))
        assert scene.count("bar") == 1

    def test_zero_bin_shown_only_linear(self):
        hist = {0: 3, 1: 2}
        linear = render_histogram(hist, scale="linear")
        assert linear.count("bar") == 2
        loglog = render_histogram(hist, scale="loglog")
        assert loglog.count("point") == 1

    def test_loglog_all_zero_degrees_rejected(self):
        with pytest.raises(ValueError):
            render_histogram({0: 5}, scale="loglog")

    def test_unknown_scale_rejected(self):
        with pytest.raises(ValueError):
            render_histogram({1: 1}, scale="sqrt")

    def test_preferential_layer_spans_a_decade(self):
        from multiviz.generate import GeneratorSpec, generate

        hits = 0
        for seed in range(10):
            net = generate(GeneratorSpec(
                model="preferential", actor_count=200, layer_count=1,
                attachment_count=2, seed_clique=2, seed=seed,
            ))
            hist = degree_distribution(net)
            degrees = [d for d in hist if d > 0]
            hits += max(degrees) / min(degrees) >= 10
        assert hits >= 9
        scene = render_histogram(hist, scale="loglog")
        strict_parse(scene.to_svg())


class TestPaletteCycling:
    def test_more_layers_than_colors_warns(self):
        layers = [f"L{i}" for i in range(12)]
        net = MultiplexNetwork.build(
            ["a", "b"], layers, [("a", "b", l) for l in layers]
        )
        g = flatten(net)
        with pytest.warns(UserWarning, match="cycling"):
            render_sociogram(g, {"a": (0.0, 0.0), "b": (1.0, 1.0)},
                             color_by_provenance=True)
