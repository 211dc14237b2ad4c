"""Token vocabulary with the unigram^0.75 noise distribution."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._rng import stream_u64
from .errors import EmptyCorpusError

NOISE_POWER = 0.75
NOISE_DOMAIN = 1 << 31


@dataclass
class Vocabulary:
    """Dense token ids ordered by descending frequency, then lexicographically."""

    tokens: list[str]
    counts: np.ndarray
    index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {tok: i for i, tok in enumerate(self.tokens)}

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    @property
    def total_count(self) -> int:
        return int(self.counts.sum())

    def noise_probs(self) -> np.ndarray:
        """Normalized counts**0.75 over ids; sums to 1 within 1e-9."""
        weights = self.counts.astype(np.float64) ** NOISE_POWER
        return weights / weights.sum()

    def noise_cum_table(self) -> np.ndarray:
        """Cumulative noise distribution quantized onto [0, 2^31] (uint64)."""
        cum = np.cumsum(self.noise_probs())
        table = np.rint(cum * NOISE_DOMAIN).astype(np.uint64)
        table[-1] = NOISE_DOMAIN
        return table

    def sample_noise(self, n: int, seed: int) -> np.ndarray:
        """Draw n token ids from the noise distribution (vectorized)."""
        table = self.noise_cum_table()
        r = stream_u64(seed, n) % np.uint64(int(table[-1]))
        return np.searchsorted(table, r, side="right").astype(np.int64)

    def encode(self, sentence: Iterable[str]) -> list[int]:
        """Token ids for one sentence, silently dropping unknown tokens."""
        idx = self.index
        return [idx[tok] for tok in sentence if tok in idx]


def build_vocab(sentences: Iterable[list[str]], min_count: int = 1) -> Vocabulary:
    """Count tokens over the corpus and keep those with count >= min_count."""
    counter: Counter[str] = Counter()
    for sentence in sentences:
        counter.update(sentence)
    kept = [(tok, cnt) for tok, cnt in counter.items() if cnt >= min_count]
    if not kept:
        raise EmptyCorpusError(
            "no tokens survived vocabulary construction"
            + (f" (min_count={min_count})" if counter else ": corpus is empty")
        )
    kept.sort(key=lambda kv: (-kv[1], kv[0]))
    tokens = [tok for tok, _ in kept]
    counts = np.array([cnt for _, cnt in kept], dtype=np.int64)
    return Vocabulary(tokens=tokens, counts=counts)


def subsample_thresholds(vocab: Vocabulary, sample: float) -> np.ndarray:
    """Per-token keep thresholds on a 2^32 scale (uint64), word2vec style.

    A token is kept when a uniform 32-bit draw falls below its threshold;
    ``sample <= 0`` disables subsampling (all thresholds saturate).
    """
    full = np.full(len(vocab), 1 << 32, dtype=np.uint64)
    if sample <= 0:
        return full
    t_total = sample * vocab.total_count
    ratio = t_total / vocab.counts.astype(np.float64)
    keep = (np.sqrt(1.0 / ratio) + 1.0) * ratio
    keep = np.minimum(keep, 1.0)
    return np.minimum(np.rint(keep * (1 << 32)).astype(np.uint64), full)
