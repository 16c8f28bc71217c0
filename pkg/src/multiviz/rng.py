"""Deterministic seed derivation for independent RNG substreams.

Substreams are PCG64 generators seeded by hashing the parent seed together
with a context label, so adding sweep thresholds or layers never perturbs
the draws of existing substreams.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(*parts: object) -> int:
    """Stable 64-bit seed from the string forms of the given parts."""
    text = ":".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def substream(*parts: object) -> np.random.Generator:
    return np.random.default_rng(derive_seed(*parts))
