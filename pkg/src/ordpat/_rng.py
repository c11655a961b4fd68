"""Seeded random number generation.

All stochastic code in ordpat draws from the counter-based Philox bit
generator, seeded through ``numpy.random.SeedSequence``.  Substreams are
derived from integer/string key tuples via SHA-256, so replication seeds are
reproducible across platforms and independent of thread scheduling or
``PYTHONHASHSEED``.

Standard normal variates are produced by the inverse-CDF transform
(``scipy.special.ndtri``, the Cephes rational approximation) applied to
uniforms on the open interval (0, 1), rather than by rejection sampling.
This fixes the number of uniforms consumed per variate, which keeps stream
layouts stable.
"""

from __future__ import annotations

import hashlib

import numpy as np
from scipy.special import ndtri

GENERATOR_NAME = "philox4x64 (numpy.random.Philox, inverse-CDF normals)"

_TWO53 = float(1 << 53)


def derive_seed(*key) -> int:
    """Map a tuple of ints/floats/strings to a reproducible 64-bit seed."""
    text = "|".join(_stable_token(k) for k in key)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _stable_token(k) -> str:
    if isinstance(k, (int, np.integer)):
        return str(int(k))
    if isinstance(k, (float, np.floating)):
        return format(float(k), ".17g")
    return str(k)


def generator(seed: int) -> np.random.Generator:
    """Philox generator for a 64-bit (or larger) integer seed."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def open_uniforms(gen: np.random.Generator, n: int) -> np.ndarray:
    """Uniform variates on the open interval (0, 1): integers in [1, 2^53) / 2^53."""
    return gen.integers(1, 1 << 53, size=n).astype(np.float64) / _TWO53


def standard_normals(gen: np.random.Generator, n: int) -> np.ndarray:
    """n standard normal variates via the inverse-CDF transform."""
    return ndtri(open_uniforms(gen, n))
