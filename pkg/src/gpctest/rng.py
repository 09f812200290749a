"""Seed plumbing.

Every sampler in this package takes an explicit seed, so whole experiments are
reproducible bit for bit.  Seeds may be ints, ``numpy.random.SeedSequence``
objects, or already-built generators.  Replicated experiments derive one
independent substream per replication from ``(seed, replication index)``,
which makes the result independent of execution order.
"""

from __future__ import annotations

import numpy as np

# Largest/smallest doubles strictly inside (0, 1); used to keep uniform draws
# away from the endpoints, where the copula transforms degenerate.
_OPEN_LO = 2.0 ** -53
_OPEN_HI = 1.0 - 2.0 ** -53


def as_generator(seed) -> np.random.Generator:
    """Return a numpy Generator for an int, SeedSequence, or Generator seed."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def substream(seed, *key: int) -> np.random.Generator:
    """Deterministic child generator identified by ``(seed, key)``."""
    if isinstance(seed, np.random.SeedSequence):
        base = seed.entropy
    else:
        base = seed
    return np.random.default_rng(np.random.SeedSequence(base, spawn_key=key))


def open_uniform(rng: np.random.Generator, size=None):
    """Uniform draws clipped into the open interval (0, 1)."""
    return np.clip(rng.random(size), _OPEN_LO, _OPEN_HI)
