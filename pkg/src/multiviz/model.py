"""Core multiplex data model and the multinet text format.

A multiplex network couples one shared set of actors through several named
layers, each an undirected simple graph over those actors.  Networks are
read from and written to a line-oriented text format::

    #LAYERS           -- optional, one layer name per line
    #ACTORS           -- optional, one actor name per line
    #EDGES            -- required, lines "actorA,actorB,layer"

Section headers are case-insensitive, lines starting with "--" are
comments, blank lines are ignored and CRLF endings are accepted.  Actors
and layers that only appear on edge lines are registered automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

ActorId = str
LayerId = str
# canonical unordered pair: (min endpoint, max endpoint)
Pair = tuple[ActorId, ActorId]


class MultinetParseError(ValueError):
    """Malformed multinet document; carries the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def pair(a: ActorId, b: ActorId) -> Pair:
    if a == b:
        raise ValueError(f"self-loop on actor {a!r}")
    return (a, b) if a < b else (b, a)


def _check_token(name: str, what: str) -> str:
    if not name or name != name.strip():
        raise ValueError(f"{what} name {name!r} is empty or padded with whitespace")
    if "," in name or "\n" in name:
        raise ValueError(f"{what} name {name!r} contains a comma or newline")
    return name


@dataclass(frozen=True)
class MultiplexNetwork:
    """Immutable actor set plus ordered, named layers of undirected edges.

    ``layers`` keeps declaration order, which drives colour assignment and
    slice order everywhere downstream.  ``edges`` maps every layer (also
    empty ones) to a frozenset of canonical pairs.
    """

    actors: frozenset[ActorId]
    layers: tuple[LayerId, ...]
    edges: Mapping[LayerId, frozenset[Pair]]

    def __post_init__(self):
        if len(set(self.layers)) != len(self.layers):
            raise ValueError("duplicate layer names")
        for name in self.actors:
            _check_token(name, "actor")
        for name in self.layers:
            _check_token(name, "layer")
        edges = {layer: frozenset(self.edges.get(layer, ())) for layer in self.layers}
        for layer, extra in self.edges.items():
            if layer not in edges:
                raise ValueError(f"edges reference unknown layer {layer!r}")
        for layer, pairs in edges.items():
            for a, b in pairs:
                if a == b:
                    raise ValueError(f"self-loop on actor {a!r} in layer {layer!r}")
                if a > b:
                    raise ValueError(f"non-canonical pair ({a!r}, {b!r})")
                if a not in self.actors or b not in self.actors:
                    raise ValueError(f"edge ({a!r}, {b!r}) uses an unregistered actor")
        object.__setattr__(self, "edges", edges)

    @staticmethod
    def build(
        actors: Iterable[ActorId],
        layers: Iterable[LayerId],
        edges: Iterable[tuple[ActorId, ActorId, LayerId]],
    ) -> "MultiplexNetwork":
        """Construct from raw (a, b, layer) triples, canonicalizing pairs."""
        layer_list = tuple(layers)
        actor_set = set(actors)
        per_layer: dict[LayerId, set[Pair]] = {layer: set() for layer in layer_list}
        for a, b, layer in edges:
            if layer not in per_layer:
                raise ValueError(f"edge ({a!r}, {b!r}) uses unknown layer {layer!r}")
            actor_set.add(a)
            actor_set.add(b)
            per_layer[layer].add(pair(a, b))
        return MultiplexNetwork(
            actors=frozenset(actor_set),
            layers=layer_list,
            edges={layer: frozenset(pairs) for layer, pairs in per_layer.items()},
        )

    def actor_order(self) -> tuple[ActorId, ...]:
        """Canonical (lexicographic) actor ordering used for serialization."""
        return tuple(sorted(self.actors))

    def layer_index(self, layer: LayerId) -> int:
        try:
            return self.layers.index(layer)
        except ValueError:
            raise ValueError(f"unknown layer {layer!r}") from None

    def require_actor(self, a: ActorId) -> None:
        if a not in self.actors:
            raise ValueError(f"unknown actor {a!r}")

    def require_layers(self, layers: Iterable[LayerId]) -> tuple[LayerId, ...]:
        """Validate a layer subset and return it in declaration order."""
        requested = set(layers)
        for layer in requested:
            if layer not in self.edges:
                raise ValueError(f"unknown layer {layer!r}")
        return tuple(l for l in self.layers if l in requested)

    def incident_actors(self, layer: LayerId) -> set[ActorId]:
        """Actors touching at least one edge of the layer."""
        out: set[ActorId] = set()
        for a, b in self.edges[layer]:
            out.add(a)
            out.add(b)
        return out

    def edge_triples(self) -> list[tuple[ActorId, ActorId, LayerId]]:
        """All edges in canonical order: (layer declaration index, a, b)."""
        out = []
        for layer in self.layers:
            for a, b in sorted(self.edges[layer]):
                out.append((a, b, layer))
        return out


@dataclass(frozen=True)
class SimpleGraph:
    """Flattened or filtered single-layer view with per-edge layer provenance.

    ``layers`` records which layers (in network order) were flattened, so
    colour binding stays consistent with the parent multiplex.
    """

    actors: frozenset[ActorId]
    layers: tuple[LayerId, ...]
    edges: frozenset[Pair]
    provenance: Mapping[Pair, frozenset[LayerId]]

    def __post_init__(self):
        if set(self.provenance) != set(self.edges):
            raise ValueError("provenance keys must exactly cover the edge set")
        for e, layers in self.provenance.items():
            if not layers:
                raise ValueError(f"edge {e} has empty provenance")

    def adjacency(self) -> dict[ActorId, set[ActorId]]:
        adj: dict[ActorId, set[ActorId]] = {a: set() for a in self.actors}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


class LayerStats(NamedTuple):
    edge_count: int
    component_count: int | None  # None when the layer is empty
    avg_degree: float


class ParseResult(NamedTuple):
    network: MultiplexNetwork
    duplicate_edges: int


_SECTIONS = {"#LAYERS": "layers", "#ACTORS": "actors", "#EDGES": "edges"}


def parse_multinet(text: str) -> ParseResult:
    """Parse a multinet document; duplicate edge lines are deduplicated and
    counted in the result."""
    layers: list[LayerId] = []
    layer_set: set[LayerId] = set()
    actors: set[ActorId] = set()
    triples: set[tuple[ActorId, ActorId, LayerId]] = set()
    duplicates = 0
    section: str | None = None
    saw_edges_header = False

    def register_layer(name: LayerId) -> None:
        if name not in layer_set:
            layer_set.add(name)
            layers.append(name)

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("--"):
            continue
        if line.startswith("#"):
            key = line.upper()
            if key not in _SECTIONS:
                raise MultinetParseError(f"unknown section header {line!r}", lineno)
            section = _SECTIONS[key]
            saw_edges_header = saw_edges_header or section == "edges"
            continue
        if section is None:
            raise MultinetParseError("data before any section header", lineno)
        try:
            if section == "layers":
                register_layer(_check_token(line, "layer"))
            elif section == "actors":
                actors.add(_check_token(line, "actor"))
            else:
                fields = [f.strip() for f in line.split(",")]
                if len(fields) != 3:
                    raise ValueError(
                        f"expected 'actorA,actorB,layer', got {len(fields)} fields"
                    )
                a, b, layer = fields
                _check_token(a, "actor")
                _check_token(b, "actor")
                _check_token(layer, "layer")
                if a == b:
                    raise ValueError(f"self-loop on actor {a!r}")
                register_layer(layer)
                actors.add(a)
                actors.add(b)
                canon = pair(a, b) + (layer,)
                if canon in triples:
                    duplicates += 1
                else:
                    triples.add(canon)
        except MultinetParseError:
            raise
        except ValueError as exc:
            raise MultinetParseError(str(exc), lineno) from None

    if not saw_edges_header:
        raise MultinetParseError("missing required #EDGES section")
    net = MultiplexNetwork.build(actors, layers, sorted(triples))
    return ParseResult(net, duplicates)


def write_multinet(net: MultiplexNetwork) -> str:
    """Serialize canonically: layers in declaration order, actors sorted,
    edges sorted by (layer declaration order, min endpoint, max endpoint)."""
    lines = ["#LAYERS"]
    lines.extend(net.layers)
    lines.append("#ACTORS")
    lines.extend(net.actor_order())
    lines.append("#EDGES")
    for a, b, layer in net.edge_triples():
        lines.append(f"{a},{b},{layer}")
    return "\n".join(lines) + "\n"


def flatten(
    net: MultiplexNetwork, layers: Iterable[LayerId] | None = None
) -> SimpleGraph:
    """Project the requested layers (default all) onto one graph, tracking
    which layers contributed each edge."""
    requested = net.layers if layers is None else net.require_layers(layers)
    provenance: dict[Pair, set[LayerId]] = {}
    for layer in requested:
        for e in net.edges[layer]:
            provenance.setdefault(e, set()).add(layer)
    return SimpleGraph(
        actors=net.actors,
        layers=requested,
        edges=frozenset(provenance),
        provenance={e: frozenset(ls) for e, ls in provenance.items()},
    )


def neighbors(
    net: MultiplexNetwork, a: ActorId, layers: Iterable[LayerId]
) -> set[ActorId]:
    """Distinct actors adjacent to ``a`` through any edge of the given layers."""
    net.require_actor(a)
    requested = net.require_layers(layers)
    if not requested:
        raise ValueError("layer subset must be non-empty")
    out: set[ActorId] = set()
    for layer in requested:
        for x, y in net.edges[layer]:
            if x == a:
                out.add(y)
            elif y == a:
                out.add(x)
    return out


class _UnionFind:
    def __init__(self, items: Iterable[ActorId]):
        self.parent = {x: x for x in items}

    def find(self, x: ActorId) -> ActorId:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: ActorId, y: ActorId) -> None:
        self.parent[self.find(x)] = self.find(y)


def component_count(actors: Iterable[ActorId], pairs: Iterable[Pair]) -> int:
    """Connected components among the given actors under the given edges."""
    uf = _UnionFind(actors)
    for a, b in pairs:
        uf.union(a, b)
    return len({uf.find(a) for a in uf.parent})


def layer_stats(net: MultiplexNetwork) -> dict[LayerId, LayerStats]:
    """Per-layer edge count, component count and average degree.

    The average-degree denominator is the number of actors incident to at
    least one edge of the layer, not the full actor set.  Values are kept
    at full precision; rounding happens only at presentation time.
    """
    out: dict[LayerId, LayerStats] = {}
    for layer in net.layers:
        pairs = net.edges[layer]
        incident = net.incident_actors(layer)
        if not pairs:
            out[layer] = LayerStats(0, None, 0.0)
            continue
        out[layer] = LayerStats(
            edge_count=len(pairs),
            component_count=component_count(incident, pairs),
            avg_degree=2 * len(pairs) / len(incident),
        )
    return out
