"""Counter-based deterministic random streams.

Every source of randomness in the library (init, dropout, data shuffling,
MLM corruption, synthetic corpora) draws from an :class:`RngState`, a
(seed, counter) pair backed by the Philox counter-based bit generator.
Identical (seed, counter) produces identical values across runs and
platforms, and named child streams are derived by hashing so that e.g.
the two dropout passes of a robustness forward never share a stream.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def _derive_seed(seed: int, name: str) -> int:
    digest = hashlib.blake2b(f"{seed}:{name}".encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class RngState:
    """A named, replayable random stream position.

    ``seed`` selects the stream, ``counter`` the position within it. Each
    draw claims its own 2**64-wide block of the Philox counter space, so
    draws never overlap regardless of how many values they consume.
    """

    __slots__ = ("seed", "counter")

    def __init__(self, seed: int, counter: int = 0):
        self.seed = int(seed) & _MASK64
        self.counter = int(counter)

    def stream(self, name: str) -> "RngState":
        """Derive an independent child stream, e.g. ``rng.stream("dropout-pass-1")``."""
        return RngState(_derive_seed(self.seed, name))

    def clone(self) -> "RngState":
        return RngState(self.seed, self.counter)

    def _next(self) -> np.random.Generator:
        gen = np.random.Generator(np.random.Philox(key=self.seed, counter=self.counter << 64))
        self.counter += 1
        return gen

    def uniform(self, shape=()) -> np.ndarray:
        """Uniform [0,1) float64 values; advances the counter by one block."""
        return self._next().random(shape)

    def normal(self, shape=(), std: float = 1.0) -> np.ndarray:
        return self._next().normal(0.0, std, shape)

    def truncated_normal(self, shape=(), std: float = 1.0, bound: float = 2.0) -> np.ndarray:
        """Normal(0, std) truncated to ±bound·std via inverse-CDF sampling."""
        from scipy.special import ndtr, ndtri

        lo, hi = ndtr(-bound), ndtr(bound)
        u = self._next().random(shape)
        return ndtri(lo + u * (hi - lo)) * std

    def integers(self, low: int, high: int, shape=()) -> np.ndarray:
        """Integers in [low, high)."""
        return self._next().integers(low, high, size=shape)

    def permutation(self, n: int) -> np.ndarray:
        return self._next().permutation(n)

    def choice(self, n: int, size: int, p=None, replace: bool = True) -> np.ndarray:
        return self._next().choice(n, size=size, p=p, replace=replace)

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed}, counter={self.counter})"
