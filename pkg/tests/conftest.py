import itertools
from pathlib import Path

import pytest

from multiviz.model import MultiplexNetwork, parse_multinet

DATA_DIR = Path(__file__).parent / "data"
AUCS_PATH = DATA_DIR / "aucs.mpx"


@pytest.fixture(scope="session")
def aucs():
    return parse_multinet(AUCS_PATH.read_text()).network


@pytest.fixture
def small_net():
    # the worked three-actor example: a reaches b twice, c once
    return MultiplexNetwork.build(
        actors=["a", "b", "c"],
        layers=["L1", "L2"],
        edges=[("a", "b", "L1"), ("a", "c", "L1"), ("a", "b", "L2")],
    )


def brute_neighbor_sets(net):
    """Independent oracle: per (actor, layer) neighbor sets computed by a
    plain scan over raw edge triples, no library calls."""
    sets = {(a, l): set() for a in net.actors for l in net.layers}
    for l in net.layers:
        for a, b in net.edges[l]:
            sets[(a, l)].add(b)
            sets[(b, l)].add(a)
    return sets


def brute_metrics(net, actor, layers):
    """Oracle values (degree, neighborhood, relevance, xrelevance) for an
    actor over a layer subset, from first principles."""
    layers = list(layers)
    sets = brute_neighbor_sets(net)
    deg = sum(1 for l in layers for e in net.edges[l] if actor in e)
    hood = set().union(*(sets[(actor, l)] for l in layers))
    total = set().union(*(sets[(actor, l)] for l in net.layers)) if net.layers else set()
    others = [l for l in net.layers if l not in layers]
    via_others = set().union(*(sets[(actor, l)] for l in others)) if others else set()
    rel = len(hood) / len(total) if total else 0.0
    xrel = len(hood - via_others) / len(total) if total else 0.0
    return deg, len(hood), rel, xrel


def random_multiplex(rng, max_actors=20, n_layers=3, p=0.3, isolates=False):
    """Small random multiplex for oracle-equivalence and property tests."""
    n = int(rng.integers(2, max_actors + 1))
    actors = [f"n{i}" for i in range(n)]
    layers = [f"L{j}" for j in range(n_layers)]
    edges = []
    for l in layers:
        for a, b in itertools.combinations(actors, 2):
            if rng.random() < p:
                edges.append((a, b, l))
    extra = [f"iso{i}" for i in range(int(rng.integers(0, 3)))] if isolates else []
    return MultiplexNetwork.build(actors + extra, layers, edges)
