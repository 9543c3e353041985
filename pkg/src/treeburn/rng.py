"""Deterministic 64-bit RNG used by every seeded generator in the package.

The generator is splitmix64: state advances by a fixed odd constant and the
output is a bijective mix of the state.  It is tiny, portable, and fully
specified here so corpora can be reproduced outside this codebase.  Bounded
draws use rejection sampling on the top multiple of the bound, so they are
unbiased.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 stream over a 64-bit state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        zone = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < zone:
                return x % bound


def derive_seed(master: int, ordinal: int) -> int:
    """Per-instance seed: output number ordinal+1 of the stream seeded by master.

    Computed in O(1) by jumping the state, since the stream state advances by
    a fixed constant per draw.
    """
    return SplitMix64((master + ordinal * _GAMMA) & _MASK).next_u64()
