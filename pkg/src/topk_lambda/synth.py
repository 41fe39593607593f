"""Seeded synthetic barcodes on [0, 1].

Births are uniform on [0, 1); lengths are exponential with mean ``l_mean``
and truncated so the bar ends by 1.  Randomness comes from NumPy's PCG64
bit generator read as raw 64-bit words; the conversion to floats happens
here (53-bit uniforms, inverse-CDF exponentials), so a seed maps to the
same barcode regardless of NumPy's distribution-sampling code.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .barcode import Barcode

__all__ = ["GenConfig", "draw_lengths", "generate", "random_small_barcode", "uniform_stream"]

_TWO_M53 = 2.0**-53


@dataclass(frozen=True)
class GenConfig:
    M: int
    l_mean: float
    seed: int = 0

    def __post_init__(self):
        if self.M < 0:
            raise ValueError(f"M must be >= 0, got {self.M}")
        if not self.l_mean > 0:
            raise ValueError(f"l_mean must be > 0, got {self.l_mean}")


def uniform_stream(seed: int):
    """Endless iterator of uniforms in [0, 1) from PCG64(seed)."""
    bitgen = np.random.PCG64(seed)
    while True:
        for word in bitgen.random_raw(4096).tolist():
            yield (word >> 11) * _TWO_M53


def generate(cfg: GenConfig) -> Barcode:
    """Draw ``cfg.M`` bars; a bar whose truncated length is 0 is redrawn."""
    u = uniform_stream(cfg.seed)
    pairs = []
    while len(pairs) < cfg.M:
        b = next(u)
        length = -cfg.l_mean * math.log1p(-next(u))
        d = min(b + length, 1.0)
        if b < d:
            pairs.append((b, d))
    return Barcode.from_pairs(pairs)


def draw_lengths(cfg: GenConfig) -> np.ndarray:
    """The untruncated exponential draws ``generate`` would make, for sanity checks."""
    u = uniform_stream(cfg.seed)
    out = np.empty(cfg.M)
    for k in range(cfg.M):
        next(u)
        out[k] = -cfg.l_mean * math.log1p(-next(u))
    return out


def random_small_barcode(rng, max_m: int, min_m: int = 0) -> Barcode:
    """Desk-scale test barcode from a ``random.Random``.

    Half the draws sit on a small integer grid so that equal births, equal
    deaths, shared birth/death times and duplicate bars are common; the rest
    are continuous with short exponential lengths.
    """
    m = rng.randint(min_m, max_m)
    pairs = []
    if rng.random() < 0.5:
        span = max(2, m // 2)
        for _ in range(m):
            b = rng.randint(0, span)
            pairs.append((float(b), float(b + rng.randint(1, 3))))
    else:
        scale = rng.choice([0.05, 0.1, 0.2])
        for _ in range(m):
            b = rng.random()
            pairs.append((b, b + rng.expovariate(1.0 / scale) + 1e-6))
    return Barcode.from_pairs(pairs)
