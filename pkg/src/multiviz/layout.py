"""Node positioning for sociograms: seeded Fruchterman-Reingold force
layout plus shared/independent per-layer slice policies.

Positions live in the unit square.  Actors without edges do not take part
in the force simulation; they are parked on a ring around the drawing
area so they neither drift into corners nor crowd the structure.
"""

from __future__ import annotations

import io
import csv
import math
from dataclasses import dataclass

import numpy as np

from .model import ActorId, LayerId, MultiplexNetwork, SimpleGraph, flatten
from .rng import derive_seed

LayoutMap = dict[ActorId, tuple[float, float]]


@dataclass(frozen=True)
class LayoutParams:
    iterations: int = 500
    k: float | None = None  # optimal distance; default sqrt(area / n)
    temperature: float = 0.1  # initial temperature as fraction of canvas size
    seed: int = 42

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")


def _simulate(
    g: SimpleGraph, params: LayoutParams
) -> tuple[list[ActorId], np.ndarray, np.ndarray, float]:
    """Run FR on the non-isolated actors; returns (actors, initial
    positions, final raw positions, optimal distance k)."""
    adj = g.adjacency()
    movers = sorted(a for a in g.actors if adj[a])
    n = len(movers)
    if n == 0:
        return movers, np.zeros((0, 2)), np.zeros((0, 2)), 1.0
    index = {a: i for i, a in enumerate(movers)}
    edge_idx = np.array(
        [(index[a], index[b]) for a, b in sorted(g.edges)], dtype=np.int64
    )
    k = params.k if params.k is not None else math.sqrt(1.0 / n)
    rng = np.random.default_rng(params.seed)
    pos0 = rng.random((n, 2))
    pos = pos0.copy()
    t0 = params.temperature

    for it in range(params.iterations):
        temp = t0 * (1.0 - it / params.iterations)
        diff = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((diff**2).sum(axis=2))
        while True:  # jitter exactly coincident points apart
            coincident = np.argwhere((dist == 0) & ~np.eye(n, dtype=bool))
            if coincident.size == 0:
                break
            for i, j in coincident[coincident[:, 0] < coincident[:, 1]]:
                pos[j] += (rng.random(2) - 0.5) * 1e-6
            diff = pos[:, None, :] - pos[None, :, :]
            dist = np.sqrt((diff**2).sum(axis=2))
        np.fill_diagonal(dist, 1.0)
        # repulsion k^2/d between all pairs
        repulse = (k * k) / (dist**2)
        np.fill_diagonal(repulse, 0.0)
        disp = (diff * repulse[:, :, None]).sum(axis=1)
        # attraction d^2/k along edges
        if len(edge_idx):
            src, dst = edge_idx[:, 0], edge_idx[:, 1]
            evec = pos[src] - pos[dst]
            edist = np.sqrt((evec**2).sum(axis=1))
            edist[edist == 0] = 1e-12
            pull = evec * (edist / k)[:, None]
            np.subtract.at(disp, src, pull)
            np.add.at(disp, dst, pull)
        # displacement capped by the cooling temperature
        length = np.sqrt((disp**2).sum(axis=1))
        length[length == 0] = 1e-12
        step = np.minimum(length, temp)
        pos = pos + disp / length[:, None] * step[:, None]
    return movers, pos0, pos, k


def fr_energy(pos: np.ndarray, edge_idx: np.ndarray, k: float) -> float:
    """Potential whose negative gradient is the FR force field: d^3/(3k)
    per edge minus k^2 ln(d) per node pair."""
    n = len(pos)
    energy = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            d = float(np.linalg.norm(pos[i] - pos[j]))
            d = max(d, 1e-12)
            energy -= k * k * math.log(d)
    for s, t in edge_idx:
        d = float(np.linalg.norm(pos[s] - pos[t]))
        energy += d**3 / (3 * k)
    return energy


def _normalize(pos: np.ndarray) -> np.ndarray:
    out = np.empty_like(pos)
    for axis in range(2):
        lo, hi = pos[:, axis].min(), pos[:, axis].max()
        out[:, axis] = 0.5 if hi == lo else (pos[:, axis] - lo) / (hi - lo)
    return out


def force_layout(g: SimpleGraph, params: LayoutParams = LayoutParams()) -> LayoutMap:
    """Deterministic FR layout normalized into the unit square; isolated
    actors are placed on a surrounding ring."""
    movers, _, raw, _ = _simulate(g, params)
    layout: LayoutMap = {}
    if movers:
        norm = _normalize(raw)
        for a, (x, y) in zip(movers, norm):
            layout[a] = (float(x), float(y))
    isolates = sorted(set(g.actors) - set(movers))
    if isolates:
        if not movers and len(isolates) == 1:
            layout[isolates[0]] = (0.5, 0.5)
        else:
            for i, a in enumerate(isolates):
                angle = 2 * math.pi * i / len(isolates) - math.pi / 2
                layout[a] = (
                    0.5 + 0.48 * math.cos(angle),
                    0.5 + 0.48 * math.sin(angle),
                )
    return layout


def slice_layouts(
    net: MultiplexNetwork, mode: str, params: LayoutParams = LayoutParams()
) -> dict[LayerId, LayoutMap]:
    """Per-layer layouts: ``shared`` replicates one layout computed on the
    flattened network, ``independent`` lays out every layer on its own with
    a per-layer derived seed."""
    if mode == "shared":
        common = force_layout(flatten(net), params)
        return {layer: dict(common) for layer in net.layers}
    if mode == "independent":
        out = {}
        for layer in net.layers:
            layer_params = LayoutParams(
                iterations=params.iterations,
                k=params.k,
                temperature=params.temperature,
                seed=derive_seed(params.seed, "layer", layer),
            )
            out[layer] = force_layout(flatten(net, [layer]), layer_params)
        return out
    raise ValueError(f"unknown slice mode {mode!r}")


def layout_to_csv(layout: LayoutMap) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["actor", "x", "y"])
    for a in sorted(layout):
        x, y = layout[a]
        w.writerow([a, f"{x:.6f}", f"{y:.6f}"])
    return buf.getvalue()


def layout_from_csv(text: str) -> LayoutMap:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][:3] != ["actor", "x", "y"]:
        raise ValueError("layout CSV must start with header actor,x,y")
    out: LayoutMap = {}
    for row in rows[1:]:
        if not row:
            continue
        if len(row) != 3:
            raise ValueError(f"layout row must have 3 fields, got {row!r}")
        out[row[0]] = (float(row[1]), float(row[2]))
    return out
