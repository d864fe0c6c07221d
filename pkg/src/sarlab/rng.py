"""Portable deterministic random streams.

All sampling in this package goes through splitmix64: a 64-bit generator
whose i-th output is a pure function of (seed, i),

    out(seed, i) = mix64(seed + (i + 1) * GOLDEN)   (mod 2**64)

with the standard finalizer ``mix64``. This gives three properties the
benchmarks rely on:

* byte-identical instances for equal seeds, on any platform or language
  that reproduces the 30-line algorithm;
* O(1) random access to any stream position, so bulk draws vectorize and
  work items can be sharded without coordination;
* cheap derivation of independent child streams (a child seed is just one
  output of the parent stream), so per-realization / per-trial streams are
  independent of execution order and thread count.

Normal deviates use the inverse-CDF method on half-offset uniforms
(``ndtri((u64 >> 11 + 0.5) * 2**-53)``), which is deterministic and easy
to reproduce outside Python.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtri

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

_DOUBLE_SCALE = 2.0 ** -53


def mix64(z: int) -> int:
    """splitmix64 output finalizer (Stafford mix13 variant used by the reference)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


def stream_at(seed: int, index: int) -> int:
    """The ``index``-th (0-based) output of the stream seeded with ``seed``."""
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)


def derive_seed(seed: int, index: int) -> int:
    """Seed for an independent child stream; equals ``stream_at(seed, index)``."""
    return stream_at(seed, index)


class SplitMix64:
    """Sequential view of a splitmix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_double(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _DOUBLE_SCALE

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // bound) * bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_A)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_B)
    return z ^ (z >> np.uint64(31))


def u64_stream(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of a stream, as a uint64 array."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return _mix64_array(np.uint64(seed & MASK64) + idx * np.uint64(GOLDEN))


def double_stream(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Uniform doubles in [0, 1), matching ``SplitMix64.next_double`` draws."""
    return (u64_stream(seed, count, start) >> np.uint64(11)) * _DOUBLE_SCALE


def normal_stream(seed: int, count: int, sigma: float = 1.0) -> np.ndarray:
    """i.i.d. N(0, sigma^2) draws via inverse CDF on half-offset uniforms."""
    u = ((u64_stream(seed, count) >> np.uint64(11)).astype(np.float64) + 0.5) * _DOUBLE_SCALE
    return ndtri(u) * sigma
