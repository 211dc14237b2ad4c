"""Training driver for CBOW / skip-gram embeddings with negative sampling.

The inner loop runs in a compiled Cython kernel when the extension built,
with a pure numpy fallback selected at import time (force it with
MORPHOSEED_PURE=1). Both kernels consume identical per-sentence RNG
streams, so a fixed seed in deterministic mode reproduces a model bitwise
within either backend.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _sgd_py
from .errors import ConfigError, ModelFormatError, OOVError
from .generator import read_corpus
from .vocab import Vocabulary, build_vocab, subsample_thresholds

logger = logging.getLogger(__name__)

try:
    from . import _sgd_inner

    COMPILED_AVAILABLE = True
except ImportError:  # extension not built; numpy fallback still works
    _sgd_inner = None
    COMPILED_AVAILABLE = False

BACKENDS = ("auto", "compiled", "pure")
ALPHA_FLOOR_RATIO = 1e-4


def resolve_backend(name: str = "auto"):
    """Pick the kernel module for ``name`` ('auto', 'compiled' or 'pure')."""
    if name not in BACKENDS:
        raise ConfigError(f"unknown backend {name!r}, expected one of {BACKENDS}")
    forced_pure = os.environ.get("MORPHOSEED_PURE", "") not in ("", "0")
    if name == "pure" or (name == "auto" and (forced_pure or not COMPILED_AVAILABLE)):
        return _sgd_py
    if name == "compiled" and not COMPILED_AVAILABLE:
        raise ConfigError("compiled kernel requested but the extension is not built")
    return _sgd_inner


@dataclass(frozen=True)
class TrainConfig:
    """Everything that determines a training run."""

    dim: int = 20
    window: int = 3
    model: str = "cbow"  # or "skipgram"
    negatives: int = 5
    epochs: int = 5
    initial_lr: float = 0.025
    min_count: int = 1
    rng_seed: int = 42
    deterministic: bool = True
    workers: int = 1
    fixed_window: bool = True
    subsample: float = 0.0
    backend: str = "auto"

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ConfigError("dim must be >= 1")
        if self.window < 1:
            raise ConfigError("window must be >= 1")
        if self.model not in ("cbow", "skipgram"):
            raise ConfigError(f"model must be 'cbow' or 'skipgram', got {self.model!r}")
        if self.negatives < 0:
            raise ConfigError("negatives must be >= 0")
        if self.epochs < 1:
            raise ConfigError("epochs must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


@dataclass
class EmbeddingModel:
    """Trained vectors: input matrix (token vectors) plus output matrix."""

    tokens: list[str]
    vectors: np.ndarray
    out_vectors: np.ndarray | None = None
    config: TrainConfig | None = None
    epoch_losses: list[float] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {tok: i for i, tok in enumerate(self.tokens)}

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def __len__(self) -> int:
        return len(self.tokens)


def token_vector(model: EmbeddingModel, token: str) -> np.ndarray:
    """Input-matrix row for ``token``; raises OOVError when untrained."""
    i = model.index.get(token)
    if i is None:
        raise OOVError(f"token {token!r} not in model vocabulary")
    return model.vectors[i]


def output_vector(model: EmbeddingModel, token: str) -> np.ndarray:
    if model.out_vectors is None:
        raise ModelFormatError("model has no output matrix (loaded without the .out sidecar?)")
    i = model.index.get(token)
    if i is None:
        raise OOVError(f"token {token!r} not in model vocabulary")
    return model.out_vectors[i]


def _init_matrices(vocab_size: int, dim: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    # word2vec-style init: inputs uniform in (-0.5, 0.5)/dim, outputs zero.
    rng = np.random.default_rng(seed)
    syn0 = ((rng.random((vocab_size, dim), dtype=np.float64) - 0.5) / dim).astype(np.float32)
    syn1 = np.zeros((vocab_size, dim), dtype=np.float32)
    return syn0, syn1


def _encode_corpus(sentences: Iterable[list[str]], vocab: Vocabulary) -> tuple[np.ndarray, np.ndarray]:
    flat: list[int] = []
    offsets = [0]
    for sentence in sentences:
        flat.extend(vocab.encode(sentence))
        offsets.append(len(flat))
    return np.asarray(flat, dtype=np.int32), np.asarray(offsets, dtype=np.int64)


def _corpus_sentences(corpus) -> Iterable[list[str]]:
    if isinstance(corpus, (str, Path)):
        return read_corpus(corpus)
    return corpus


def train(corpus, config: TrainConfig = TrainConfig(), vocab: Vocabulary | None = None) -> EmbeddingModel:
    """Train an embedding model on a corpus path, shard dir, or sentence list.

    Deterministic mode runs single-threaded; with ``workers > 1`` (and the
    compiled kernel) sentences are split across threads that update the
    shared matrices without locks, trading bitwise reproducibility for
    throughput (final loss stays equivalent within a few percent).
    """
    if isinstance(corpus, (str, Path)):
        sentences_once = None
    else:
        corpus = [list(s) for s in corpus]
        sentences_once = corpus
    if vocab is None:
        vocab = build_vocab(_corpus_sentences(corpus) if sentences_once is None else sentences_once, config.min_count)
    tokens, offsets = _encode_corpus(_corpus_sentences(corpus) if sentences_once is None else sentences_once, vocab)
    return train_encoded(tokens, offsets, vocab, config)


def train_encoded(
    tokens: np.ndarray,
    offsets: np.ndarray,
    vocab: Vocabulary,
    config: TrainConfig,
) -> EmbeddingModel:
    kernel = resolve_backend(config.backend)
    workers = 1 if config.deterministic else config.workers
    if workers > 1 and kernel is _sgd_py:
        logger.warning("pure backend holds the GIL; training single-threaded")
        workers = 1

    n_sentences = len(offsets) - 1
    corpus_tokens = int(offsets[-1])
    if corpus_tokens == 0:
        raise ConfigError("encoded corpus is empty (vocabulary mismatch?)")
    total_tokens = corpus_tokens * config.epochs

    syn0, syn1 = _init_matrices(len(vocab), config.dim, config.rng_seed)
    noise_cum = np.ascontiguousarray(vocab.noise_cum_table())
    keep = np.ascontiguousarray(subsample_thresholds(vocab, config.subsample))
    tokens = np.ascontiguousarray(tokens, dtype=np.int32)
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)

    args = dict(
        window=config.window,
        negative=config.negatives,
        cbow=1 if config.model == "cbow" else 0,
        fixed_window=1 if config.fixed_window else 0,
        subsample=1 if config.subsample > 0 else 0,
        alpha0=config.initial_lr,
        alpha_floor=config.initial_lr * ALPHA_FLOOR_RATIO,
        seed=config.rng_seed,
    )

    bounds = _chunk_bounds(n_sentences, workers)
    epoch_losses: list[float] = []
    for epoch in range(config.epochs):
        sent_base = epoch * n_sentences
        tokens_done = epoch * corpus_tokens
        total_loss = 0.0
        total_pairs = 0
        if workers == 1:
            loss, pairs = kernel.train_epoch(
                tokens, offsets, syn0, syn1, noise_cum, keep,
                sent_base=sent_base, tokens_before=tokens_done,
                total_tokens=total_tokens, **args,
            )
            total_loss, total_pairs = loss, pairs
        else:
            def run(chunk):
                lo, hi = chunk
                return kernel.train_epoch(
                    tokens, offsets[lo: hi + 1], syn0, syn1, noise_cum, keep,
                    sent_base=sent_base + lo,
                    tokens_before=tokens_done + int(offsets[lo]),
                    total_tokens=total_tokens, **args,
                )

            with ThreadPoolExecutor(max_workers=workers) as pool:
                for loss, pairs in pool.map(run, bounds):
                    total_loss += loss
                    total_pairs += pairs
        mean = total_loss / max(total_pairs, 1)
        epoch_losses.append(mean)
        logger.info("epoch %d/%d: mean pair loss %.6f over %d pairs", epoch + 1, config.epochs, mean, total_pairs)

    if not np.isfinite(syn0).all() or not np.isfinite(syn1).all():
        raise ModelFormatError("training produced non-finite parameters")
    effective = replace(config, workers=workers)
    return EmbeddingModel(
        tokens=list(vocab.tokens), vectors=syn0, out_vectors=syn1,
        config=effective, epoch_losses=epoch_losses,
    )


def _chunk_bounds(n: int, workers: int) -> list[tuple[int, int]]:
    workers = min(workers, max(n, 1))
    step = math.ceil(n / workers) if workers else n
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)] or [(0, 0)]


# ---------------------------------------------------------------------------
# Float64 reference loss/gradients (used by gradient-check tests)


def pair_loss_and_grads(
    syn0: np.ndarray,
    syn1: np.ndarray,
    input_ids: Sequence[int],
    target: int,
    negatives: Sequence[int],
    cbow_mean: bool = True,
) -> tuple[float, np.ndarray, np.ndarray]:
    """Loss and exact gradients for one training example, in float64.

    CBOW: the hidden vector is the mean of ``input_ids`` rows of syn0 (pass
    a single id for skip-gram). The returned matrices match the shapes of
    syn0/syn1; negatives must not contain the target.
    """
    if target in negatives:
        raise ValueError("negatives colliding with the target are skipped, not scored")
    s0 = syn0.astype(np.float64)
    s1 = syn1.astype(np.float64)
    ids = list(input_ids)
    h = s0[ids].mean(axis=0) if cbow_mean else s0[ids].sum(axis=0)
    grad0 = np.zeros_like(s0)
    grad1 = np.zeros_like(s1)
    loss = 0.0
    grad_h = np.zeros_like(h)
    for u, label in [(target, 1.0)] + [(n, 0.0) for n in negatives]:
        f = float(h @ s1[u])
        sig = 1.0 / (1.0 + math.exp(-f))
        loss += -_log_sigmoid_64(f) if label == 1.0 else -_log_sigmoid_64(-f)
        grad1[u] += (sig - label) * h
        grad_h += (sig - label) * s1[u]
    scale = 1.0 / len(ids) if cbow_mean else 1.0
    for i in ids:
        grad0[i] += grad_h * scale
    return loss, grad0, grad1


def _log_sigmoid_64(x: float) -> float:
    if x >= 0:
        return -math.log1p(math.exp(-x))
    return x - math.log1p(math.exp(x))


def example_loss(
    syn0: np.ndarray,
    syn1: np.ndarray,
    input_ids: Sequence[int],
    target: int,
    negatives: Sequence[int],
    cbow_mean: bool = True,
) -> float:
    """Loss only, for finite-difference probes."""
    loss, _, _ = pair_loss_and_grads(syn0, syn1, input_ids, target, negatives, cbow_mean)
    return loss


# ---------------------------------------------------------------------------
# word2vec text format


def save_vectors(tokens: Sequence[str], matrix: np.ndarray, path: str | Path) -> None:
    """Write vectors in word2vec text format (header, then one row per token)."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(tokens)} {matrix.shape[1]}\n")
        for token, row in zip(tokens, matrix):
            fh.write(token + " " + " ".join(f"{x:.6f}" for x in row) + "\n")


def save_model(model: EmbeddingModel, path: str | Path) -> None:
    """Save input vectors to ``path``; output matrix goes to ``<path>.out``."""
    path = Path(path)
    save_vectors(model.tokens, model.vectors, path)
    if model.out_vectors is not None:
        save_vectors(model.tokens, model.out_vectors, path.with_name(path.name + ".out"))


def load_vectors(path: str | Path) -> tuple[list[str], np.ndarray]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or not all(p.isdigit() for p in header):
            raise ModelFormatError(f"{path}: bad header {header!r}, expected 'V dim'")
        count, dim = int(header[0]), int(header[1])
        tokens: list[str] = []
        matrix = np.empty((count, dim), dtype=np.float32)
        seen = set()
        for i, line in enumerate(fh):
            parts = line.rstrip("\n").split(" ")
            if i >= count:
                raise ModelFormatError(f"{path}: more rows than the declared {count}")
            if len(parts) != dim + 1:
                raise ModelFormatError(f"{path}:{i + 2}: expected {dim} components, got {len(parts) - 1}")
            token = parts[0]
            if token in seen:
                raise ModelFormatError(f"{path}:{i + 2}: duplicate token {token!r}")
            seen.add(token)
            tokens.append(token)
            try:
                matrix[i] = [float(x) for x in parts[1:]]
            except ValueError as exc:
                raise ModelFormatError(f"{path}:{i + 2}: {exc}") from None
    if len(tokens) != count:
        raise ModelFormatError(f"{path}: declared {count} rows, found {len(tokens)}")
    return tokens, matrix


def load_model(path: str | Path) -> EmbeddingModel:
    """Load a text-format model; picks up the ``.out`` sidecar when present."""
    path = Path(path)
    tokens, vectors = load_vectors(path)
    out_path = path.with_name(path.name + ".out")
    out_vectors = None
    if out_path.is_file():
        out_tokens, out_vectors = load_vectors(out_path)
        if out_tokens != tokens:
            raise ModelFormatError(f"{out_path}: token order differs from {path}")
    return EmbeddingModel(tokens=tokens, vectors=vectors, out_vectors=out_vectors)
