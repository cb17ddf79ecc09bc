"""Seeded 64-bit splittable PRNG used for all random instance generation.

The generator is splitmix64 (Steele, Lea & Flood's mixing constants).  It is
tiny, has a documented algorithm, and produces identical streams in any
language, which keeps recorded game instances reproducible across
implementations.
"""

MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream; one instance per decision stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def split(self) -> "SplitMix64":
        """Fork an independent child stream."""
        return SplitMix64(self.next_u64())

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
