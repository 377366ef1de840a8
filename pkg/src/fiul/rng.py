"""Deterministic random primitives used everywhere randomness is needed.

All shuffling, splitting, mutation ordering and synthetic-data generation in
this package goes through the splitmix64 stream below instead of a library
RNG.  The stream is fully specified by this file, so a given seed produces
the same bytes on every platform and every library version, forever.  That
property is load-bearing: result CSVs and charts are required to be
byte-reproducible.
"""

from __future__ import annotations

import hashlib
import math

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: a fixed 64-bit avalanche permutation."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, *labels: str) -> int:
    """Derive an independent child seed from a master seed and role labels.

    Each label is hashed (blake2b/8) and folded into the state through
    mix64, so streams for different roles never collide and adding a new
    role cannot perturb existing ones.
    """
    state = mix64(master & _MASK64)
    for label in labels:
        tag = int.from_bytes(
            hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest(), "big"
        )
        state = mix64(state ^ tag)
    return state


class Stream:
    """splitmix64 sequence: state advances by a golden-ratio increment."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def next_float(self) -> float:
        # 53 high bits -> uniform in [0, 1)
        return (self.next_u64() >> 11) * (2.0**-53)

    def next_below(self, n: int) -> int:
        """Unbiased integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def next_bool(self, p: float) -> bool:
        return self.next_float() < p

    def next_gauss(self, mean: float = 0.0, sd: float = 1.0) -> float:
        """Box-Muller transform; one fresh pair per call, cosine branch only."""
        u1 = self.next_float()
        u2 = self.next_float()
        while u1 <= 0.0:
            u1 = self.next_float()
        return mean + sd * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


def permutation(n: int, seed: int) -> list[int]:
    """Fisher-Yates permutation of range(n), a pure function of (seed, n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    stream = Stream(seed)
    out = list(range(n))
    for i in range(n - 1, 0, -1):
        j = stream.next_below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out
