"""Deterministic 64-bit random generator shared by all generators.

splitmix64 (Steele, Lea, Flood 2014).  Chosen because the whole stream is
pinned by the published constants, so seeded fixtures stay stable across
Python versions and can be reproduced in other languages.  Range reduction
uses the multiply-shift trick (floor(next * n / 2^64)), which is likewise
reproducible; the tiny bias is irrelevant for test-corpus generation.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next_u64() * n) >> 64

    def flip(self) -> bool:
        return bool(self.next_u64() >> 63)
