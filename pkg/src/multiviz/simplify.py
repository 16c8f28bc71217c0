"""Dyadic local-merging filters, the node-sampling null model and the
threshold sweep comparing both.

Local merging keeps an edge of layer ``l`` only when the chosen metric on
``l`` meets the threshold for *both* endpoints, with all metric values
frozen on the original network.  The null model draws, per layer, as many
random nodes as passed the threshold and keeps the layer's edges among
them; comparing flattened transitivities tests whether filtered structure
exceeds chance.
"""

from __future__ import annotations

import io
import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .model import LayerId, MultiplexNetwork, flatten
from .metrics import metric_value, transitivity
from .rng import substream

MERGE_KINDS = ("relevance", "xrelevance")


@dataclass(frozen=True)
class MergeSpec:
    kind: str
    threshold: float

    def __post_init__(self):
        if self.kind not in MERGE_KINDS:
            raise ValueError(f"merge metric must be one of {MERGE_KINDS}, got {self.kind!r}")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold!r}")


def _metric_column(net: MultiplexNetwork, kind: str, layer: LayerId) -> dict[str, float]:
    return {a: metric_value(net, a, [layer], kind) for a in net.actors}


def local_merge(net: MultiplexNetwork, spec: MergeSpec) -> MultiplexNetwork:
    """Filtered copy of the network: edge (u, v, l) survives iff the chosen
    metric on layer l is >= threshold for both u and v, evaluated on the
    original network."""
    kept: dict[LayerId, frozenset] = {}
    for layer in net.layers:
        col = _metric_column(net, spec.kind, layer)
        kept[layer] = frozenset(
            e for e in net.edges[layer]
            if col[e[0]] >= spec.threshold and col[e[1]] >= spec.threshold
        )
    return MultiplexNetwork(actors=net.actors, layers=net.layers, edges=kept)


def node_pass_counts(net: MultiplexNetwork, spec: MergeSpec) -> dict[LayerId, int]:
    """Per layer, how many actors meet the threshold on that layer."""
    return {
        layer: sum(
            1 for v in _metric_column(net, spec.kind, layer).values()
            if v >= spec.threshold
        )
        for layer in net.layers
    }


def null_sample(
    net: MultiplexNetwork, spec: MergeSpec, rng: np.random.Generator
) -> MultiplexNetwork:
    """Random counterpart of ``local_merge``: per layer, draw as many actors
    as passed the threshold, uniformly without replacement from the actors
    incident to the layer, and keep the layer's edges among them.

    When the pass count exceeds the incident-actor count (only possible at
    threshold 0 with registered isolates) the draw falls back to the full
    actor set.
    """
    counts = node_pass_counts(net, spec)
    kept: dict[LayerId, frozenset] = {}
    for layer in net.layers:
        k = counts[layer]
        eligible = sorted(net.incident_actors(layer))
        if k > len(eligible):
            eligible = sorted(net.actors)
        chosen = {eligible[i] for i in rng.permutation(len(eligible))[:k]}
        kept[layer] = frozenset(
            e for e in net.edges[layer] if e[0] in chosen and e[1] in chosen
        )
    return MultiplexNetwork(actors=net.actors, layers=net.layers, edges=kept)


@dataclass(frozen=True)
class SweepResult:
    """Observed vs null-model transitivity over a threshold grid.

    ``observed[i]`` and every ``null_replicates[i][j]`` may be None when the
    corresponding filtered graph has no connected triple.
    """

    kind: str
    thresholds: tuple[float, ...]
    observed: tuple[float | None, ...]
    null_replicates: tuple[tuple[float | None, ...], ...]
    replicates: int
    seed: int

    def null_means(self) -> tuple[float | None, ...]:
        """Per-threshold mean over the defined replicates; None if none are."""
        out = []
        for reps in self.null_replicates:
            defined = [r for r in reps if r is not None]
            out.append(sum(defined) / len(defined) if defined else None)
        return tuple(out)

    def null_sds(self) -> tuple[float | None, ...]:
        """Sample standard deviation over defined replicates (>= 2 needed)."""
        out = []
        for reps in self.null_replicates:
            defined = [r for r in reps if r is not None]
            if len(defined) < 2:
                out.append(None)
                continue
            mean = sum(defined) / len(defined)
            out.append(math.sqrt(sum((r - mean) ** 2 for r in defined) / (len(defined) - 1)))
        return tuple(out)

    def defined_replicate_counts(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for r in reps if r is not None) for reps in self.null_replicates
        )

    def to_csv(self) -> str:
        def fmt(v: float | None) -> str:
            return "" if v is None else f"{v:.10g}"

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["threshold", "observed", "null_mean", "null_sd", "defined_replicates"])
        for t, obs, mean, sd, n in zip(
            self.thresholds,
            self.observed,
            self.null_means(),
            self.null_sds(),
            self.defined_replicate_counts(),
        ):
            w.writerow([f"{t:.10g}", fmt(obs), fmt(mean), fmt(sd), n])
        return buf.getvalue()


def sweep(
    net: MultiplexNetwork,
    kind: str,
    thresholds: Sequence[float],
    replicates: int,
    seed: int,
) -> SweepResult:
    """Observed and null-model transitivity of the flattened filtered
    network at each threshold.  Replicate ``i`` at threshold ``t`` owns the
    RNG substream hashed from (seed, t, i), so results do not depend on
    evaluation order and are stable when thresholds are added."""
    if not thresholds:
        raise ValueError("threshold grid must be non-empty")
    if replicates < 1:
        raise ValueError("replicate count must be positive")
    observed = []
    nulls = []
    for t in thresholds:
        spec = MergeSpec(kind=kind, threshold=float(t))
        observed.append(transitivity(flatten(local_merge(net, spec))))
        reps = []
        for i in range(replicates):
            rng = substream(seed, float(t), i)
            reps.append(transitivity(flatten(null_sample(net, spec, rng))))
        nulls.append(tuple(reps))
    return SweepResult(
        kind=kind,
        thresholds=tuple(float(t) for t in thresholds),
        observed=tuple(observed),
        null_replicates=tuple(nulls),
        replicates=replicates,
        seed=seed,
    )


def parse_threshold_spec(text: str) -> list[float]:
    """Threshold grammar shared by the CLI and the JSON service: a single
    value, a comma list, or an inclusive range ``start:stop:step``."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("range step must be positive")
        values = []
        i = 0
        while True:
            v = round(start + i * step, 10)
            if v > stop + 1e-9:
                break
            values.append(v)
            i += 1
        if not values:
            raise ValueError(f"empty threshold range {text!r}")
    elif "," in text:
        values = [float(p) for p in text.split(",") if p.strip()]
    else:
        values = [float(text)]
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"threshold {v} outside [0, 1]")
    return values
