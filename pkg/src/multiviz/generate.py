"""Synthetic multiplex generators: uniform random layers and preferential
attachment with optional cross-layer coupling.

The preferential model grows every layer from an initial clique; each
arriving node attaches ``m`` edges to distinct existing nodes chosen
proportionally to current layer degree.  With coupling probability ``q``
a new node copies its reference-layer (first layer) target set into a
non-reference layer instead of drawing fresh targets, so ``q=0`` gives
independent layers and ``q=1`` identical ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import MultiplexNetwork, pair


@dataclass(frozen=True)
class GeneratorSpec:
    model: str  # "uniform" | "preferential"
    actor_count: int
    layer_count: int = 2
    edge_probability: float | None = None  # uniform: per-pair probability
    attachment_count: int | None = None  # preferential: edges per new node
    seed_clique: int | None = None  # preferential: initial clique size
    coupling: float = 0.0
    seed: int = 42

    def __post_init__(self):
        if self.model not in ("uniform", "preferential"):
            raise ValueError(f"unknown generator model {self.model!r}")
        if self.actor_count < 1:
            raise ValueError("actor count must be positive")
        if self.layer_count < 1:
            raise ValueError("layer count must be positive")
        if not 0.0 <= self.coupling <= 1.0:
            raise ValueError("coupling must be in [0, 1]")
        if self.model == "uniform":
            p = self.edge_probability
            if p is None or not 0.0 <= p <= 1.0:
                raise ValueError("uniform model needs edge probability in [0, 1]")
            if self.coupling != 0.0:
                raise ValueError("coupling applies to the preferential model only")
        else:
            m, m0 = self.attachment_count, self.seed_clique
            if m is None or m < 1:
                raise ValueError("preferential model needs attachment count >= 1")
            if m0 is None:
                m0 = m
            if m0 < m:
                raise ValueError("seed clique must be at least the attachment count")
            if m0 > self.actor_count:
                raise ValueError("seed clique cannot exceed the actor count")
            object.__setattr__(self, "seed_clique", m0)


def _actor_names(n: int) -> list[str]:
    width = len(str(n - 1)) if n > 1 else 1
    return [f"a{i:0{width}d}" for i in range(n)]


def _layer_names(k: int) -> list[str]:
    return [f"L{i + 1}" for i in range(k)]


def generate(spec: GeneratorSpec) -> MultiplexNetwork:
    """Grow the network a GeneratorSpec describes; same seed, same network."""
    rng = np.random.default_rng(spec.seed)
    actors = _actor_names(spec.actor_count)
    layers = _layer_names(spec.layer_count)
    if spec.model == "uniform":
        edges = _uniform_layers(spec, actors, layers, rng)
    else:
        edges = _preferential_layers(spec, actors, layers, rng)
    return MultiplexNetwork(
        actors=frozenset(actors),
        layers=tuple(layers),
        edges={l: frozenset(e) for l, e in edges.items()},
    )


def _uniform_layers(spec, actors, layers, rng):
    n = len(actors)
    edges = {}
    for layer in layers:
        kept = set()
        for i in range(n):
            draws = rng.random(n - i - 1)
            for off, r in enumerate(draws):
                if r < spec.edge_probability:
                    kept.add(pair(actors[i], actors[i + off + 1]))
        edges[layer] = kept
    return edges


def _preferential_layers(spec, actors, layers, rng):
    n, m, m0 = spec.actor_count, spec.attachment_count, spec.seed_clique
    edges: dict[str, set] = {}
    degrees = {l: np.zeros(n, dtype=np.int64) for l in layers}
    for layer in layers:
        clique = set()
        for i in range(m0):
            for j in range(i + 1, m0):
                clique.add(pair(actors[i], actors[j]))
                degrees[layer][i] += 1
                degrees[layer][j] += 1
        edges[layer] = clique

    def draw_targets(layer, v):
        weights = degrees[layer][:v].astype(np.float64)
        total = weights.sum()
        if total == 0:  # degenerate 1-clique seed: fall back to uniform
            return rng.choice(v, size=m, replace=False)
        return rng.choice(v, size=m, replace=False, p=weights / total)

    for v in range(m0, n):
        reference = draw_targets(layers[0], v)
        per_layer = {layers[0]: reference}
        for layer in layers[1:]:
            if rng.random() < spec.coupling:
                per_layer[layer] = reference
            else:
                per_layer[layer] = draw_targets(layer, v)
        for layer, targets in per_layer.items():
            for t in targets:
                edges[layer].add(pair(actors[v], actors[int(t)]))
                degrees[layer][v] += 1
                degrees[layer][int(t)] += 1
    return edges


def matched_uniform_probability(spec: GeneratorSpec) -> float:
    """Edge probability giving a uniform layer the same expected edge count
    as the given preferential spec."""
    if spec.model != "preferential":
        raise ValueError("expected a preferential spec")
    n, m, m0 = spec.actor_count, spec.attachment_count, spec.seed_clique
    target = m0 * (m0 - 1) // 2 + m * (n - m0)
    return min(1.0, target / (n * (n - 1) / 2))
