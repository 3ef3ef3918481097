"""Deterministic splittable random source for exact test data.

Counter-based: draw i of a stream with 64-bit key k is mix64(k + i*GAMMA),
so a stream is a pure function of (key, index) and two runs with the same
seed are bit-identical on every platform.  Streams split by hashing the
parent key with a label, which keeps concurrent consumers independent of
scheduling order.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class RandomStream:
    def __init__(self, seed: int, _path: tuple = ()):
        self.seed = int(seed) & MASK64
        self.path = _path
        self._counter = 0

    def split(self, label: str) -> "RandomStream":
        """An independent child stream; deterministic in (seed, label)."""
        material = f"{self.seed}:{label}".encode()
        child = int.from_bytes(hashlib.sha256(material).digest()[:8], "big")
        return RandomStream(child, self.path + (label,))

    def next_u64(self) -> int:
        value = mix64(self.seed + (self._counter + 1) * GAMMA)
        self._counter += 1
        return value

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def next_fraction(self, max_num: int = 12, max_den: int = 5) -> Fraction:
        num = self.next_int(-max_num, max_num)
        den = self.next_int(1, max_den)
        return Fraction(num, den)

    def next_triple(self, max_num: int = 12, max_den: int = 5,
                    nonzero: bool = False) -> tuple[Fraction, Fraction, Fraction]:
        """A rational (a, b, c); with nonzero=True, never the identity."""
        while True:
            triple = tuple(self.next_fraction(max_num, max_den)
                           for _ in range(3))
            if not nonzero or any(x != 0 for x in triple):
                return triple

    def distinct_triples(self, count: int, max_num: int = 12,
                         max_den: int = 5, nonzero: bool = False) -> list:
        out: list = []
        seen = set()
        while len(out) < count:
            t = self.next_triple(max_num, max_den, nonzero=nonzero)
            if t not in seen:
                seen.add(t)
                out.append(t)
        return out
