"""Per-node per-layer multiplex metrics, layer correlation and transitivity.

All operations are pure functions over an immutable network.  The four
node metrics accept arbitrary layer subsets; the value of ``degree`` is
edge multiplicity (a pair linked in two requested layers counts twice)
while ``neighborhood`` counts distinct actors, which is what the two
relevance ratios are built on.
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from typing import Iterable

from .model import ActorId, LayerId, MultiplexNetwork, SimpleGraph, neighbors

METRIC_KINDS = ("degree", "neighborhood", "relevance", "xrelevance")


def degree(net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId]) -> int:
    """Edges incident to ``a`` in the given layers, counted per layer."""
    net.require_actor(a)
    requested = net.require_layers(layers)
    if not requested:
        raise ValueError("layer subset must be non-empty")
    return sum(1 for l in requested for e in net.edges[l] if a in e)


def neighborhood(net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId]) -> int:
    """Distinct actors adjacent to ``a`` in the given layers."""
    return len(neighbors(net, a, layers))


def relevance(net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId]) -> float:
    """Fraction of an actor's distinct neighbors reachable through the given
    layers; 0 for actors with no neighbors at all."""
    net.require_actor(a)
    requested = net.require_layers(layers)
    if not requested:
        raise ValueError("layer subset must be non-empty")
    total = neighbors(net, a, net.layers)
    if not total:
        return 0.0
    return len(neighbors(net, a, requested)) / len(total)


def xrelevance(net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId]) -> float:
    """Fraction of an actor's distinct neighbors reachable in one step only
    through the given layers; 0 for actors with no neighbors at all."""
    net.require_actor(a)
    requested = net.require_layers(layers)
    if not requested:
        raise ValueError("layer subset must be non-empty")
    total = neighbors(net, a, net.layers)
    if not total:
        return 0.0
    rest = set(net.layers) - set(requested)
    via_rest = neighbors(net, a, rest) if rest else set()
    exclusive = neighbors(net, a, requested) - via_rest
    return len(exclusive) / len(total)


_METRIC_FUNCS = {
    "degree": degree,
    "neighborhood": neighborhood,
    "relevance": relevance,
    "xrelevance": xrelevance,
}


def metric_value(
    net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId], kind: str
) -> float:
    if kind not in _METRIC_FUNCS:
        raise ValueError(f"unknown metric kind {kind!r}")
    return _METRIC_FUNCS[kind](net, a, layers)


def jaccard(net: MultiplexNetwork, x: LayerId, y: LayerId) -> float:
    """Intersection-over-union of two layers' edge sets.  Two empty layers
    compare as identical (1); one empty against one non-empty gives 0."""
    net.require_layers([x, y])
    px, py = net.edges[x], net.edges[y]
    union = px | py
    if not union:
        return 1.0
    return len(px & py) / len(union)


def transitivity(g: SimpleGraph) -> float | None:
    """Global transitivity 3*triangles / connected triples, or None when the
    graph has no connected triple."""
    adj = g.adjacency()
    triples = sum(d * (d - 1) // 2 for d in (len(s) for s in adj.values()))
    if triples == 0:
        return None
    # each triangle is seen once per edge, i.e. three times in total
    closed = sum(len(adj[a] & adj[b]) for a, b in g.edges)
    return closed / triples


@dataclass(frozen=True)
class MetricTable:
    """Actor x layer matrix of one metric, rows in canonical actor order."""

    actors: tuple[ActorId, ...]
    layers: tuple[LayerId, ...]
    values: tuple[tuple[float, ...], ...]
    kind: str

    def row(self, a: ActorId) -> tuple[float, ...]:
        return self.values[self.actors.index(a)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["actor", *self.layers])
        for a, row in zip(self.actors, self.values):
            w.writerow([a, *(f"{v:.6f}" for v in row)])
        return buf.getvalue()


def metric_table(net: MultiplexNetwork, kind: str) -> MetricTable:
    """Evaluate a metric on every (actor, singleton layer) cell."""
    if kind not in _METRIC_FUNCS:
        raise ValueError(f"unknown metric kind {kind!r}")
    actors = net.actor_order()
    values = tuple(
        tuple(float(metric_value(net, a, [l], kind)) for l in net.layers)
        for a in actors
    )
    return MetricTable(actors=actors, layers=net.layers, values=values, kind=kind)


@dataclass(frozen=True)
class JaccardMatrix:
    layers: tuple[LayerId, ...]
    values: tuple[tuple[float, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["layer", *self.layers])
        for layer, row in zip(self.layers, self.values):
            w.writerow([layer, *(f"{v:.6f}" for v in row)])
        return buf.getvalue()


def jaccard_matrix(net: MultiplexNetwork) -> JaccardMatrix:
    values = tuple(
        tuple(jaccard(net, x, y) for y in net.layers) for x in net.layers
    )
    return JaccardMatrix(layers=net.layers, values=values)


def degree_distribution(
    net: MultiplexNetwork, layers: Iterable[LayerId] | None = None
) -> dict[int, int]:
    """Histogram degree -> actor count over all actors; empty bins omitted."""
    requested = net.layers if layers is None else net.require_layers(layers)
    hist: dict[int, int] = {}
    for a in net.actors:
        d = sum(1 for l in requested for e in net.edges[l] if a in e)
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))
