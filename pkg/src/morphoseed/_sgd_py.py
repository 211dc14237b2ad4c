"""Pure numpy fallback for the SGD inner loop.

Mirrors ``_sgd_inner.pyx`` operation by operation (same update order, same
RNG stream), so the two backends agree up to float32 rounding. 20-80x
slower than the compiled kernel; selected automatically when the extension
is not built or when forced via MORPHOSEED_PURE=1.
"""

from __future__ import annotations

import math

import numpy as np

from ._rng import next_u64, sentence_state

KERNEL = "pure"


def rng_sequence(seed: int, index: int, n: int) -> np.ndarray:
    """The exact draw sequence a sentence consumes (for backend cross-checks)."""
    state = sentence_state(seed, index)
    out = np.empty(n, dtype=np.uint64)
    for i in range(n):
        value, state = next_u64(state)
        out[i] = value
    return out


def _log_sigmoid(x: float) -> float:
    if x >= 0:
        return -math.log1p(math.exp(-x))
    return x - math.log1p(math.exp(x))


def _bisect_right(cum: np.ndarray, x: int) -> int:
    lo, hi = 0, len(cum)
    while lo < hi:
        mid = (lo + hi) >> 1
        if cum[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _context_window(length: int, pos: int, span: int) -> range:
    return range(max(0, pos - span), min(length, pos + span + 1))


def _ns_step(
    syn1: np.ndarray,
    h: np.ndarray,
    target: int,
    negative: int,
    cum: np.ndarray,
    cum_total: int,
    alpha: float,
    state: int,
) -> tuple[np.ndarray, float, int]:
    """One negative-sampling step against hidden vector h.

    Updates syn1 rows in place; returns (input-side error, loss, rng state).
    Negatives colliding with the target are skipped, not redrawn.
    """
    neu1e = np.zeros_like(h)
    loss = 0.0
    for d in range(negative + 1):
        if d == 0:
            u, label = target, 1.0
        else:
            value, state = next_u64(state)
            u = _bisect_right(cum, value % cum_total)
            if u == target:
                continue
            label = 0.0
        row = syn1[u]
        f = float(h @ row)
        sig = 1.0 / (1.0 + math.exp(-f)) if f > -60.0 else 0.0
        loss += -_log_sigmoid(f) if label == 1.0 else -_log_sigmoid(-f)
        g = np.float32((label - sig) * alpha)
        neu1e += g * row
        syn1[u] = row + g * h
    return neu1e, loss, state


def train_epoch(
    tokens: np.ndarray,
    offsets: np.ndarray,
    syn0: np.ndarray,
    syn1: np.ndarray,
    noise_cum: np.ndarray,
    keep_thresholds: np.ndarray,
    window: int,
    negative: int,
    cbow: int,
    fixed_window: int,
    subsample: int,
    alpha0: float,
    alpha_floor: float,
    seed: int,
    sent_base: int,
    tokens_before: int,
    total_tokens: int,
) -> tuple[float, int]:
    """Train once over the given sentence block; returns (loss sum, pair count)."""
    n_sentences = len(offsets) - 1
    cum_total = int(noise_cum[-1])
    base_offset = int(offsets[0])
    total_loss = 0.0
    pairs = 0

    for si in range(n_sentences):
        start, end = int(offsets[si]), int(offsets[si + 1])
        if end <= start:
            continue
        sent = tokens[start:end]
        state = sentence_state(seed, sent_base + si)
        done = tokens_before + (start - base_offset)
        alpha = alpha0 * (1.0 - done / total_tokens)
        if alpha < alpha_floor:
            alpha = alpha_floor

        if subsample:
            kept = []
            for t in sent:
                value, state = next_u64(state)
                if (value >> 32) < int(keep_thresholds[t]):
                    kept.append(int(t))
            sent = kept
        length = len(sent)

        for pos in range(length):
            if fixed_window:
                span = window
            else:
                value, state = next_u64(state)
                span = window - int(value % window)
            target = int(sent[pos])
            if cbow:
                ctx = [int(sent[j]) for j in _context_window(length, pos, span) if j != pos]
                if not ctx:
                    continue
                inv = np.float32(1.0 / len(ctx))
                h = syn0[ctx].sum(axis=0) * inv
                neu1e, loss, state = _ns_step(
                    syn1, h, target, negative, noise_cum, cum_total, alpha, state
                )
                total_loss += loss
                pairs += 1
                delta = neu1e * inv
                for j in ctx:
                    syn0[j] += delta
            else:
                for j in _context_window(length, pos, span):
                    if j == pos:
                        continue
                    input_id = int(sent[j])
                    h = syn0[input_id]
                    neu1e, loss, state = _ns_step(
                        syn1, h, target, negative, noise_cum, cum_total, alpha, state
                    )
                    total_loss += loss
                    pairs += 1
                    syn0[input_id] = h + neu1e
    return total_loss, pairs
