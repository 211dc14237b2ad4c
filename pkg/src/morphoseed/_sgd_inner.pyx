# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled SGD inner loop for CBOW / skip-gram with negative sampling.

Keep in lockstep with ``_sgd_py.py``: identical update order and RNG stream,
so both backends produce the same trajectories up to float32 rounding.
Releases the GIL for the whole epoch, which makes thread-parallel (hogwild)
training effective.
"""

from libc.math cimport exp, log1p

import numpy as np

KERNEL = "compiled"

cdef unsigned long long GOLDEN = 0x9E3779B97F4A7C15ULL
cdef unsigned long long MIX1 = 0xBF58476D1CE4E5B9ULL
cdef unsigned long long MIX2 = 0x94D049BB133111EBULL


cdef inline unsigned long long _mix64(unsigned long long z) noexcept nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


cdef inline unsigned long long _sentence_state(unsigned long long seed, unsigned long long index) noexcept nogil:
    return _mix64(seed * GOLDEN + index * MIX1)


cdef inline unsigned long long _next(unsigned long long *state) noexcept nogil:
    state[0] += GOLDEN
    return _mix64(state[0])


cdef inline double _log_sigmoid(double x) noexcept nogil:
    if x >= 0.0:
        return -log1p(exp(-x))
    return x - log1p(exp(x))


cdef inline int _bisect_right(const unsigned long long[::1] cum, unsigned long long x, int n) noexcept nogil:
    cdef int lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if cum[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def rng_sequence(seed, index, n):
    """The exact draw sequence a sentence consumes (for backend cross-checks)."""
    cdef unsigned long long state = _sentence_state(<unsigned long long> seed, <unsigned long long> index)
    out = np.empty(n, dtype=np.uint64)
    cdef unsigned long long[::1] view = out
    cdef Py_ssize_t i
    for i in range(n):
        view[i] = _next(&state)
    return out


cdef inline double _ns_step(
    float[:, ::1] syn1,
    float *h,
    float *neu1e,
    int dim,
    int target,
    int negative,
    const unsigned long long[::1] cum,
    unsigned long long cum_total,
    int cum_n,
    double alpha,
    unsigned long long *state,
) noexcept nogil:
    """Negative-sampling update against hidden vector h; returns the loss.

    Negatives colliding with the target are skipped, not redrawn.
    """
    cdef double loss = 0.0, sig, label
    cdef float f, g
    cdef int d, u, c
    for c in range(dim):
        neu1e[c] = 0.0
    for d in range(negative + 1):
        if d == 0:
            u = target
            label = 1.0
        else:
            u = _bisect_right(cum, _next(state) % cum_total, cum_n)
            if u == target:
                continue
            label = 0.0
        f = 0.0
        for c in range(dim):
            f += h[c] * syn1[u, c]
        if f > -60.0:
            sig = 1.0 / (1.0 + exp(-<double> f))
        else:
            sig = 0.0
        if label == 1.0:
            loss -= _log_sigmoid(f)
        else:
            loss -= _log_sigmoid(-f)
        g = <float> ((label - sig) * alpha)
        for c in range(dim):
            neu1e[c] += g * syn1[u, c]
            syn1[u, c] += g * h[c]
    return loss


def train_epoch(
    tokens,
    offsets,
    syn0,
    syn1,
    noise_cum,
    keep_thresholds,
    int window,
    int negative,
    int cbow,
    int fixed_window,
    int subsample,
    double alpha0,
    double alpha_floor,
    seed,
    sent_base,
    tokens_before,
    total_tokens,
):
    """Train once over the given sentence block; returns (loss sum, pair count).

    ``offsets`` may be any contiguous slice of the corpus offset array; its
    values index into the full ``tokens`` array.
    """
    cdef const int[::1] toks = tokens
    cdef const long long[::1] offs = offsets
    cdef float[:, ::1] s0 = syn0
    cdef float[:, ::1] s1 = syn1
    cdef const unsigned long long[::1] cum = noise_cum
    cdef const unsigned long long[::1] keep = keep_thresholds
    cdef unsigned long long seed_u = <unsigned long long> seed
    cdef long long base_index = <long long> sent_base
    cdef long long before = <long long> tokens_before
    cdef long long total = <long long> total_tokens

    cdef int dim = s0.shape[1]
    cdef int cum_n = cum.shape[0]
    cdef unsigned long long cum_total = cum[cum_n - 1]
    cdef long long n_sentences = offs.shape[0] - 1
    cdef long long base_offset = offs[0] if n_sentences > 0 else 0

    cdef long long max_len = 1
    cdef long long si
    for si in range(n_sentences):
        if offs[si + 1] - offs[si] > max_len:
            max_len = offs[si + 1] - offs[si]
    sent_buf = np.empty(max_len, dtype=np.int32)
    work = np.zeros(2 * dim, dtype=np.float32)
    cdef int[::1] sent = sent_buf
    cdef float[::1] wrk = work
    cdef float *h = &wrk[0]
    cdef float *neu1e = &wrk[dim]

    cdef double total_loss = 0.0
    cdef long long pairs = 0
    cdef unsigned long long state, value
    cdef double alpha, loss
    cdef float inv
    cdef long long done, tpos
    cdef int length, pos, span, lo, hi, j, cw, c, target, input_id

    with nogil:
        for si in range(n_sentences):
            if offs[si + 1] <= offs[si]:
                continue
            state = _sentence_state(seed_u, <unsigned long long> (base_index + si))
            done = before + (offs[si] - base_offset)
            alpha = alpha0 * (1.0 - (<double> done) / (<double> total))
            if alpha < alpha_floor:
                alpha = alpha_floor

            length = 0
            if subsample:
                for tpos in range(offs[si], offs[si + 1]):
                    value = _next(&state)
                    if (value >> 32) < keep[toks[tpos]]:
                        sent[length] = toks[tpos]
                        length += 1
            else:
                for tpos in range(offs[si], offs[si + 1]):
                    sent[length] = toks[tpos]
                    length += 1

            for pos in range(length):
                if fixed_window:
                    span = window
                else:
                    value = _next(&state)
                    span = window - <int> (value % <unsigned long long> window)
                target = sent[pos]
                lo = pos - span
                if lo < 0:
                    lo = 0
                hi = pos + span + 1
                if hi > length:
                    hi = length
                if cbow:
                    cw = 0
                    for c in range(dim):
                        h[c] = 0.0
                    for j in range(lo, hi):
                        if j == pos:
                            continue
                        for c in range(dim):
                            h[c] += s0[sent[j], c]
                        cw += 1
                    if cw == 0:
                        continue
                    inv = <float> (1.0 / cw)
                    for c in range(dim):
                        h[c] *= inv
                    loss = _ns_step(s1, h, neu1e, dim, target, negative, cum, cum_total, cum_n, alpha, &state)
                    total_loss += loss
                    pairs += 1
                    for c in range(dim):
                        neu1e[c] *= inv
                    for j in range(lo, hi):
                        if j == pos:
                            continue
                        for c in range(dim):
                            s0[sent[j], c] += neu1e[c]
                else:
                    for j in range(lo, hi):
                        if j == pos:
                            continue
                        input_id = sent[j]
                        loss = _ns_step(
                            s1, &s0[input_id, 0], neu1e, dim, target, negative,
                            cum, cum_total, cum_n, alpha, &state,
                        )
                        total_loss += loss
                        pairs += 1
                        for c in range(dim):
                            s0[input_id, c] += neu1e[c]

    return total_loss, pairs
