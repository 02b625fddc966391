"""Fixed 64-bit generator so corpora replay identically anywhere.

Splitmix-style stream: the state advances by the 64-bit golden-ratio
increment 0x9E3779B97F4A7C15 and each output is finalized with

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

all modulo 2^64. Any implementation of this recurrence, in any language,
reproduces the same corpora bit for bit.
"""
from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1
_INC = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + _INC) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-enough draw in [0, n); n >= 1. Plain modulo: the tiny
        bias is irrelevant here, determinism is the contract."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n

    def sample_distinct(self, count: int, n: int) -> list[int]:
        """count distinct values from [0, n), order-sensitive.

        Sparse partial Fisher-Yates: memory scales with count, not n, so
        huge lattices are fine.
        """
        if count > n:
            raise ValueError("cannot sample more distinct values than exist")
        swapped: dict[int, int] = {}
        out = []
        for i in range(count):
            j = i + self.below(n - i)
            vi = swapped.get(i, i)
            vj = swapped.get(j, j)
            out.append(vj)
            swapped[j] = vi
            swapped[i] = vj
        return out

    def choice(self, seq):
        return seq[self.below(len(seq))]


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from arbitrary labels (sha256 based)."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
