"""Deterministic pseudo-random source for reproducible instance generation.

Every generated benchmark instance is a pure function of (family, params,
seed).  The generator below is splitmix64: a 64-bit counter-based mixer
with a one-line update rule, identical output on every platform.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream; same seed => same u64 sequence everywhere."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform_int(self, lo: int, hi: int) -> int:
        """Uniform draw from [lo, hi] via modulo reduction.

        Range width is capped at 2^32 so the modulo bias stays below
        2^-31, which is accepted and documented for this artifact.
        """
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        width = hi - lo + 1
        if width > 1 << 32:
            raise ValueError(f"range width {width} exceeds 2^32")
        return lo + self.next_u64() % width
