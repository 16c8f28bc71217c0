"""Read-only JSON service over one loaded network.

Endpoints (HTTP/1.1, JSON bodies)::

    GET /api/network
    GET /api/metrics?kind=degree|neighborhood|relevance|xrelevance
    GET /api/merge?metric=&threshold=
    GET /api/sweep?metric=&thresholds=&replicates=&seed=
    GET /api/layout?mode=shared|independent
    GET /api/correlation

Static explorer assets are served at ``/`` when an asset directory is
configured; without one a plain placeholder page is returned.  The session
snapshot is immutable, so concurrent requests are safe and responses are
byte-identical across repeated calls.  Floats are serialized with at most
ten significant digits; undefined transitivity becomes JSON ``null``.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import metrics as met
from . import simplify as simp
from .layout import LayoutParams, slice_layouts
from .model import MultiplexNetwork

_PLACEHOLDER = """<!DOCTYPE html>
<html><head><title>multiviz</title></head>
<body><h1>multiviz API</h1>
<p>Explorer assets are not built. The JSON API lives under <code>/api/</code>.</p>
</body></html>
"""

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".svg": "image/svg+xml",
    ".json": "application/json",
    ".map": "application/json",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


def _round_floats(obj):
    """Clamp every float to <= 10 significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.10g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def to_json(body: dict) -> bytes:
    return json.dumps(_round_floats(body), separators=(",", ":")).encode("utf-8")


class ApiError(ValueError):
    """Maps to an HTTP 400 response."""


class ApiSession:
    """Immutable network snapshot plus idempotent caches of derived data."""

    def __init__(self, network: MultiplexNetwork, seed: int = 42):
        self.network = network
        self.seed = seed
        self._lock = threading.Lock()
        self._cache: dict[tuple, bytes] = {}
        # warm the shared layout so first paint in the explorer is instant
        self.layout_body("shared")

    def _cached(self, key: tuple, compute) -> bytes:
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        body = compute()  # idempotent: recomputation yields identical bytes
        with self._lock:
            self._cache.setdefault(key, body)
            return self._cache[key]

    def network_body(self) -> bytes:
        def compute():
            net = self.network
            return to_json(
                {
                    "actors": list(net.actor_order()),
                    "layers": list(net.layers),
                    "edges": [
                        {"a": a, "b": b, "layer": layer}
                        for a, b, layer in net.edge_triples()
                    ],
                }
            )

        return self._cached(("network",), compute)

    def metrics_body(self, kind: str) -> bytes:
        if kind not in met.METRIC_KINDS:
            raise ApiError(f"unknown metric kind {kind!r}")

        def compute():
            table = met.metric_table(self.network, kind)
            return to_json(
                {
                    "kind": table.kind,
                    "actors": list(table.actors),
                    "layers": list(table.layers),
                    "values": [list(row) for row in table.values],
                }
            )

        return self._cached(("metrics", kind), compute)

    def merge_body(self, metric: str, threshold_text: str) -> bytes:
        try:
            threshold = float(threshold_text)
        except ValueError:
            raise ApiError(f"malformed threshold {threshold_text!r}") from None
        try:
            spec = simp.MergeSpec(kind=metric, threshold=threshold)
        except ValueError as exc:
            raise ApiError(str(exc)) from None

        def compute():
            merged = simp.local_merge(self.network, spec)
            counts = simp.node_pass_counts(self.network, spec)
            trans = met.transitivity(simp.flatten(merged))
            return to_json(
                {
                    "metric": spec.kind,
                    "threshold": spec.threshold,
                    "edges": {
                        layer: [[a, b] for a, b in sorted(merged.edges[layer])]
                        for layer in merged.layers
                    },
                    "node_pass_counts": {l: counts[l] for l in merged.layers},
                    "transitivity": trans,
                }
            )

        return self._cached(("merge", metric, repr(threshold)), compute)

    def sweep_body(
        self, metric: str, thresholds_text: str, replicates_text: str, seed_text: str | None
    ) -> bytes:
        if metric not in simp.MERGE_KINDS:
            raise ApiError(f"merge metric must be one of {simp.MERGE_KINDS}")
        try:
            thresholds = simp.parse_threshold_spec(thresholds_text)
            replicates = int(replicates_text)
            seed = self.seed if seed_text is None else int(seed_text)
            if replicates < 1:
                raise ValueError("replicates must be positive")
        except ValueError as exc:
            raise ApiError(str(exc)) from None

        def compute():
            r = simp.sweep(self.network, metric, thresholds, replicates, seed)
            return to_json(
                {
                    "kind": r.kind,
                    "thresholds": list(r.thresholds),
                    "observed": list(r.observed),
                    "null_mean": list(r.null_means()),
                    "null_sd": list(r.null_sds()),
                    "null_replicates": [list(reps) for reps in r.null_replicates],
                    "replicates": r.replicates,
                    "seed": r.seed,
                }
            )

        return self._cached(
            ("sweep", metric, tuple(thresholds), replicates, seed), compute
        )

    def layout_body(self, mode: str) -> bytes:
        if mode not in ("shared", "independent"):
            raise ApiError(f"unknown layout mode {mode!r}")

        def compute():
            maps = slice_layouts(self.network, mode, LayoutParams(seed=self.seed))
            return to_json(
                {
                    "mode": mode,
                    "layouts": {
                        layer: {a: [x, y] for a, (x, y) in sorted(maps[layer].items())}
                        for layer in self.network.layers
                    },
                }
            )

        return self._cached(("layout", mode), compute)

    def correlation_body(self) -> bytes:
        def compute():
            m = met.jaccard_matrix(self.network)
            return to_json(
                {"layers": list(m.layers), "values": [list(row) for row in m.values]}
            )

        return self._cached(("correlation",), compute)


def _single(params: dict, key: str, default: str | None = None) -> str | None:
    values = params.get(key)
    if not values:
        return default
    return values[-1]


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "multiviz"
    session: ApiSession  # injected by make_server
    assets_dir: Path | None = None

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, body: bytes) -> None:
        self._send(status, body, "application/json")

    def do_GET(self):  # noqa: N802  (http.server API)
        url = urlparse(self.path)
        params = parse_qs(url.query)
        try:
            body = self._route(url.path, params)
        except ApiError as exc:
            self._send_json(400, to_json({"error": str(exc)}))
            return
        if body is None:
            self._send_json(404, to_json({"error": f"no such path {url.path!r}"}))
            return
        payload, content_type = body
        self._send(200, payload, content_type)

    def _route(self, path: str, params) -> tuple[bytes, str] | None:
        s = self.session
        if path == "/api/network":
            return s.network_body(), "application/json"
        if path == "/api/metrics":
            kind = _single(params, "kind")
            if kind is None:
                raise ApiError("missing query parameter 'kind'")
            return s.metrics_body(kind), "application/json"
        if path == "/api/merge":
            metric = _single(params, "metric")
            threshold = _single(params, "threshold")
            if metric is None or threshold is None:
                raise ApiError("merge needs 'metric' and 'threshold'")
            return s.merge_body(metric, threshold), "application/json"
        if path == "/api/sweep":
            metric = _single(params, "metric")
            if metric is None:
                raise ApiError("sweep needs 'metric'")
            return (
                s.sweep_body(
                    metric,
                    _single(params, "thresholds", "0:0.9:0.1"),
                    _single(params, "replicates", "10"),
                    _single(params, "seed"),
                ),
                "application/json",
            )
        if path == "/api/layout":
            return s.layout_body(_single(params, "mode", "shared")), "application/json"
        if path == "/api/correlation":
            return s.correlation_body(), "application/json"
        if path.startswith("/api/"):
            return None
        return self._static(path)

    def _static(self, path: str) -> tuple[bytes, str] | None:
        if path == "/":
            path = "/index.html"
        if self.assets_dir is None:
            if path == "/index.html":
                return _PLACEHOLDER.encode("utf-8"), "text/html; charset=utf-8"
            return None
        root = self.assets_dir.resolve()
        target = (root / path.lstrip("/")).resolve()
        if root not in target.parents and target != root:
            return None
        if not target.is_file():
            if path == "/index.html":
                return _PLACEHOLDER.encode("utf-8"), "text/html; charset=utf-8"
            return None
        content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        return target.read_bytes(), content_type


def make_server(
    session: ApiSession, port: int = 8675, assets_dir: str | Path | None = None
) -> ThreadingHTTPServer:
    handler = type(
        "BoundApiHandler",
        (ApiHandler,),
        {
            "session": session,
            "assets_dir": Path(assets_dir) if assets_dir else None,
        },
    )
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve_forever(
    session: ApiSession, port: int = 8675, assets_dir: str | Path | None = None
) -> None:
    with make_server(session, port, assets_dir) as httpd:
        httpd.serve_forever()
