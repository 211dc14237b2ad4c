"""Counter-based RNG (splitmix64) shared by both training kernels.

Every sentence gets its own stream derived from (seed, sentence index), so
draws do not depend on processing order and the compiled and pure kernels
consume identical sequences.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """splitmix64 finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def sentence_state(seed: int, index: int) -> int:
    """Initial stream state for sentence ``index`` under ``seed``."""
    return mix64((seed * GOLDEN + index * MIX1) & MASK64)


def next_u64(state: int) -> tuple[int, int]:
    """One draw; returns (value, new state)."""
    state = (state + GOLDEN) & MASK64
    return mix64(state), state


def stream_u64(seed: int, n: int) -> np.ndarray:
    """Vectorized stream of n draws from state ``seed * GOLDEN`` (numpy)."""
    golden = np.uint64(GOLDEN)
    states = (np.uint64(seed & MASK64) + np.arange(1, n + 1, dtype=np.uint64)) * golden
    z = states
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))
