"""Seeded random number generation.

All randomness in the package flows through Philox, a counter-based generator
whose output for a given 64-bit key is identical across platforms and thread
schedules.  Sub-streams (data draw, feature pool, resampling, ...) are derived
from a base seed and fixed purpose offsets through an integer mixing step, so
any task's stream depends only on (base_seed, purpose, index).
"""

import numpy as np

# purpose offsets for derived streams
DATA = 1
VALIDATION = 2
TEST = 3
FEATURES = 4
POOL = 5
RESAMPLE = 6

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    """One round of the splitmix64 mixer; bijective on 64-bit integers."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(base_seed: int, purpose: int, index: int = 0) -> int:
    """64-bit seed for the sub-stream (purpose, index) of ``base_seed``."""
    x = base_seed & _MASK64
    x = _splitmix64(x ^ _splitmix64((purpose & _MASK64) + 0x1000))
    x = _splitmix64(x ^ _splitmix64((index & _MASK64) + 0x2000))
    return x


def generator(seed: int) -> np.random.Generator:
    """Counter-based generator for an explicit 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))
