import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multiviz.model import MultiplexNetwork, flatten
from multiviz.metrics import (
    degree,
    degree_distribution,
    jaccard,
    jaccard_matrix,
    metric_table,
    metric_value,
    neighborhood,
    relevance,
    transitivity,
    xrelevance,
)
from multiviz.generate import GeneratorSpec, generate, matched_uniform_probability

from conftest import brute_metrics, random_multiplex


def single_graph(pairs, actors=None):
    actor_set = set(actors or [])
    for a, b in pairs:
        actor_set |= {a, b}
    net = MultiplexNetwork.build(actor_set, ["L"], [(a, b, "L") for a, b in pairs])
    return flatten(net)


class TestDegreeAndNeighborhood:
    def test_degree_counts_per_layer(self, small_net):
        assert degree(small_net, "a", ["L1", "L2"]) == 3
        net2 = MultiplexNetwork.build(
            ["a", "b"], ["L1", "L2"], [("a", "b", "L1"), ("a", "b", "L2")]
        )
        assert degree(net2, "a", ["L1", "L2"]) == 2
        assert neighborhood(net2, "a", ["L1", "L2"]) == 1

    def test_isolated_actor_scores_zero(self):
        net = MultiplexNetwork.build(["a", "b", "x"], ["L1"], [("a", "b", "L1")])
        assert degree(net, "x", ["L1"]) == 0
        assert neighborhood(net, "x", ["L1"]) == 0

    def test_two_edges_one_layer(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["L1"], [("a", "b", "L1"), ("a", "c", "L1")]
        )
        assert neighborhood(net, "a", ["L1"]) == 2

    def test_unknown_actor_and_layer_rejected(self, small_net):
        with pytest.raises(ValueError):
            degree(small_net, "ghost", ["L1"])
        with pytest.raises(ValueError):
            degree(small_net, "a", ["L9"])

    def test_aucs_degree_argmax_is_u4(self, aucs):
        best = max(aucs.actors, key=lambda a: degree(aucs, a, aucs.layers))
        assert best == "U4"


class TestRelevance:
    def test_full_reach_through_one_layer(self, small_net):
        assert relevance(small_net, "a", ["L1"]) == 1.0

    def test_partial_reach(self, small_net):
        assert relevance(small_net, "a", ["L2"]) == 0.5

    def test_zero_when_absent_from_layer(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["L1", "L2"], [("a", "b", "L1"), ("b", "c", "L2")]
        )
        assert relevance(net, "a", ["L2"]) == 0.0

    def test_isolated_actor_defined_as_zero(self):
        net = MultiplexNetwork.build(["a", "b", "x"], ["L1"], [("a", "b", "L1")])
        assert relevance(net, "x", ["L1"]) == 0.0


class TestXRelevance:
    def test_exclusive_fraction(self, small_net):
        # b is also reachable via L2, only c is exclusive to L1
        assert xrelevance(small_net, "a", ["L1"]) == 0.5

    def test_zero_when_duplicated_elsewhere(self, small_net):
        assert xrelevance(small_net, "a", ["L2"]) == 0.0

    def test_single_layer_equals_relevance(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["L1"], [("a", "b", "L1"), ("a", "c", "L1")]
        )
        assert xrelevance(net, "a", ["L1"]) == relevance(net, "a", ["L1"])


class TestOracleEquivalence:
    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=100_000))
    def test_all_four_metrics_match_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        net = random_multiplex(rng, max_actors=12, isolates=True)
        layer_subsets = [[l] for l in net.layers] + [list(net.layers)]
        for a in sorted(net.actors):
            for layers in layer_subsets:
                deg, hood, rel, xrel = brute_metrics(net, a, layers)
                assert degree(net, a, layers) == deg
                assert neighborhood(net, a, layers) == hood
                assert relevance(net, a, layers) == rel
                assert xrelevance(net, a, layers) == xrel

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=100_000))
    def test_metric_bounds_and_orderings(self, seed):
        rng = np.random.default_rng(seed)
        net = random_multiplex(rng, max_actors=12, isolates=True)
        for a in sorted(net.actors):
            total = neighborhood(net, a, net.layers)
            if total:
                assert relevance(net, a, net.layers) == 1.0
            xrel_sum = 0.0
            for l in net.layers:
                r = relevance(net, a, [l])
                x = xrelevance(net, a, [l])
                assert 0.0 <= x <= r <= 1.0
                xrel_sum += x
            assert xrel_sum <= 1.0 + 1e-9


class TestJaccard:
    def test_hand_example(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c"], ["x", "y"],
            [("a", "b", "x"), ("a", "c", "x"), ("a", "b", "y")],
        )
        assert jaccard(net, "x", "y") == 0.5

    def test_identical_layers(self):
        net = MultiplexNetwork.build(
            ["a", "b"], ["x", "y"], [("a", "b", "x"), ("a", "b", "y")]
        )
        assert jaccard(net, "x", "y") == 1.0

    def test_disjoint_layers(self):
        net = MultiplexNetwork.build(
            ["a", "b", "c", "d"], ["x", "y"], [("a", "b", "x"), ("c", "d", "y")]
        )
        assert jaccard(net, "x", "y") == 0.0

    def test_empty_layer_conventions(self):
        net = MultiplexNetwork.build(["a", "b"], ["x", "y", "z"], [("a", "b", "x")])
        assert jaccard(net, "y", "z") == 1.0
        assert jaccard(net, "x", "y") == 0.0

    def test_matrix_properties(self, aucs):
        m = jaccard_matrix(aucs)
        n = len(m.layers)
        assert n == 5
        for i in range(n):
            assert m.values[i][i] == 1.0
            for j in range(n):
                assert m.values[i][j] == m.values[j][i]
                assert 0.0 <= m.values[i][j] <= 1.0

    def test_unknown_layer_rejected(self, small_net):
        with pytest.raises(ValueError):
            jaccard(small_net, "L1", "nope")


class TestTransitivity:
    def test_triangle(self):
        g = single_graph([("a", "b"), ("b", "c"), ("a", "c")])
        assert transitivity(g) == 1.0

    def test_path(self):
        g = single_graph([("a", "b"), ("b", "c")])
        assert transitivity(g) == 0.0

    def test_k4_minus_edge(self):
        # triangles {abc, abd}; triples C(3,2)*2 + C(2,2)*2 = 8 -> 6/8
        g = single_graph([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        assert transitivity(g) == 0.75

    def test_triple_free_graph_is_undefined(self):
        assert transitivity(single_graph([], actors=["a", "b"])) is None
        assert transitivity(single_graph([("a", "b")])) is None
        assert transitivity(single_graph([("a", "b"), ("c", "d")])) is None

    @pytest.mark.parametrize("n", [3, 4, 5, 7])
    def test_complete_graph(self, n):
        nodes = [f"v{i}" for i in range(n)]
        g = single_graph(list(itertools.combinations(nodes, 2)))
        assert transitivity(g) == 1.0

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=100_000))
    def test_any_tree_scores_zero(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 20))
        pairs = [(f"v{int(rng.integers(0, i))}", f"v{i}") for i in range(1, n)]
        assert transitivity(single_graph(pairs)) == 0.0

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=100_000))
    def test_bounded_when_defined(self, seed):
        rng = np.random.default_rng(seed)
        net = random_multiplex(rng, max_actors=12)
        t = transitivity(flatten(net))
        if t is not None:
            assert 0.0 <= t <= 1.0


class TestMetricTable:
    def test_relevance_rows_sum_to_at_least_one(self, aucs):
        table = metric_table(aucs, "relevance")
        for a, row in zip(table.actors, table.values):
            if neighborhood(aucs, a, aucs.layers) > 0:
                assert sum(row) >= 1.0 - 1e-9

    def test_xrelevance_rows_sum_to_at_most_one(self, aucs):
        table = metric_table(aucs, "xrelevance")
        for row in table.values:
            assert sum(row) <= 1.0 + 1e-9

    def test_u4_degree_profile(self, aucs):
        table = metric_table(aucs, "degree")
        row = dict(zip(table.layers, table.row("U4")))
        assert row["leisure"] == 0
        assert row["coauthor"] == 0
        for layer in ("work", "lunch", "facebook"):
            assert row[layer] > 0

    def test_csv_shape_and_precision(self, small_net):
        text = metric_table(small_net, "relevance").to_csv()
        lines = text.strip().split("\n")
        assert lines[0] == "actor,L1,L2"
        assert lines[1] == "a,1.000000,0.500000"

    def test_unknown_kind_rejected(self, small_net):
        with pytest.raises(ValueError):
            metric_table(small_net, "betweenness")
        with pytest.raises(ValueError):
            metric_value(small_net, "a", ["L1"], "nope")


class TestDegreeDistribution:
    def test_counts_cover_all_actors(self, aucs):
        hist = degree_distribution(aucs)
        assert sum(hist.values()) == len(aucs.actors)
        assert all(c > 0 for c in hist.values())

    def test_empty_network_single_bin(self):
        net = MultiplexNetwork.build(["a", "b", "c"], ["L1"], [])
        assert degree_distribution(net) == {0: 3}

    def test_preferential_beats_uniform_max_degree(self):
        wins = 0
        for seed in range(10):
            pref_spec = GeneratorSpec(
                model="preferential", actor_count=200, layer_count=1,
                attachment_count=2, seed_clique=2, seed=seed,
            )
            pref = generate(pref_spec)
            uni = generate(GeneratorSpec(
                model="uniform", actor_count=200, layer_count=1,
                edge_probability=matched_uniform_probability(pref_spec), seed=seed,
            ))
            pref_max = max(degree_distribution(pref))
            uni_max = max(degree_distribution(uni))
            wins += pref_max > uni_max
        assert wins >= 9
