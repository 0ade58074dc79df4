"""Tiny deterministic PRNG used everywhere randomness is needed.

The generator is splitmix64 (Steele, Lea, Flood 2014).  It is fixed here,
rather than using ``random.Random``, so that seeded graph generation and
hash labels are reproducible bit-for-bit across platforms and Python
versions.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


def splitmix64_next(state: int) -> tuple[int, int]:
    """Advance one splitmix64 step; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


class SplitMix64:
    """Sequential splitmix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state, out = splitmix64_next(self._state)
        return out

    def next_float(self) -> float:
        # 53-bit mantissa, uniform in [0, 1)
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound).  Modulo bias is < 2**-50 for the
        bounds used in this package and is accepted for simplicity."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def choose_weighted(self, weights: tuple[float, ...]) -> int:
        """Index drawn proportionally to non-negative weights."""
        total = sum(weights)
        if total <= 0:
            raise ValueError("weights must have positive sum")
        x = self.next_float() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if x < acc:
                return i
        return len(weights) - 1


def vertex_label(v: int) -> int:
    """Fixed 128-bit pseudo-random label for vertex id v.

    Used for twin-detection hashing; two splitmix64 outputs are combined so
    accidental collisions are out of reach for any realistic vertex count.
    """
    _, lo = splitmix64_next((v * 2 + 1) & _MASK64)
    _, hi = splitmix64_next((v * 2 + 2) & _MASK64)
    return (hi << 64) | lo
