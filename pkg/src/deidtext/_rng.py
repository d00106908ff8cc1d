"""Deterministic 64-bit random stream (SplitMix64).

Every random choice in the toolkit (corpus splits, epoch shuffles,
synthetic text, pseudonym picks) flows through this stream so that a seed
reproduces byte-identical results on any platform and interpreter.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

# golden-ratio increment; also used to derive per-trial seeds
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64: additive counter fed through two multiply-xorshift rounds."""

    def __init__(self, seed: int) -> None:
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Value in [0, bound).

        Plain modulo; the bias is negligible for bound << 2**64 and keeps
        the stream identical everywhere.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def randrange(self, lo: int, hi: int) -> int:
        """Value in [lo, hi)."""
        return lo + self.below(hi - lo)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle driven by the stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Derived seed for trial/stream `index`: seed XOR index*GOLDEN_GAMMA."""
    return (seed ^ ((index * GOLDEN_GAMMA) & MASK64)) & MASK64
