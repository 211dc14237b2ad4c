"""Word-similarity evaluation: cosine scoring, Spearman rho, hybrid mixing."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import EvaluationError

Scorer = Callable[[str, str], float | None]


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity; undefined (raises) for zero vectors."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise EvaluationError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise EvaluationError("cosine is undefined for a zero vector")
    return float(u @ v) / (nu * nv)


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks with ties sharing their mean rank."""
    arr = np.asarray(values, dtype=np.float64)
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(len(arr), dtype=np.float64)
    i = 0
    while i < len(arr):
        j = i
        while j + 1 < len(arr) and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        ranks[order[i: j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Spearman's rho: Pearson correlation of average ranks."""
    if len(xs) != len(ys):
        raise EvaluationError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise EvaluationError("need at least 2 pairs for a correlation")
    rx, ry = average_ranks(xs), average_ranks(ys)
    rx -= rx.mean()
    ry -= ry.mean()
    denom = float(np.sqrt((rx @ rx) * (ry @ ry)))
    if denom == 0.0:
        raise EvaluationError("rank variance is zero; correlation undefined")
    return float(rx @ ry) / denom


@dataclass(frozen=True)
class WordPairDataset:
    """Human-rated word pairs: (word1, word2, gold score)."""

    name: str
    pairs: tuple[tuple[str, str, float], ...]

    def __post_init__(self) -> None:
        seen = set()
        for w1, w2, gold in self.pairs:
            key = frozenset((w1, w2)) if w1 != w2 else (w1,)
            if key in seen:
                raise EvaluationError(f"duplicate pair ({w1}, {w2}) in dataset {self.name}")
            seen.add(key)
            if not np.isfinite(gold):
                raise EvaluationError(f"non-finite gold score for ({w1}, {w2})")

    def __len__(self) -> int:
        return len(self.pairs)


def load_pairs(path: str | Path, name: str | None = None) -> WordPairDataset:
    """Read ``word1 <TAB> word2 <TAB> gold`` lines."""
    path = Path(path)
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise EvaluationError(f"{path}:{lineno}: expected 'word1<TAB>word2<TAB>score'")
            try:
                pairs.append((fields[0].strip(), fields[1].strip(), float(fields[2])))
            except ValueError:
                raise EvaluationError(f"{path}:{lineno}: bad score {fields[2]!r}") from None
    return WordPairDataset(name=name or path.stem, pairs=tuple(pairs))


@dataclass
class EvalResult:
    label: str
    rho: float
    n_scored: int
    n_skipped: int


def score_dataset(
    dataset: WordPairDataset,
    scorer: Scorer,
) -> tuple[list[tuple[str, str, float, float]], list[tuple[str, str]]]:
    """Apply the scorer pair by pair.

    Returns (scored rows as (w1, w2, gold, score), skipped pairs). A pair is
    skipped when the scorer returns None (some word uncovered).
    """
    scored = []
    skipped = []
    for w1, w2, gold in dataset.pairs:
        score = scorer(w1, w2)
        if score is None:
            skipped.append((w1, w2))
        else:
            scored.append((w1, w2, gold, float(score)))
    return scored, skipped


def evaluate(dataset: WordPairDataset, scorer: Scorer, label: str) -> EvalResult:
    scored, skipped = score_dataset(dataset, scorer)
    if len(scored) < 2:
        raise EvaluationError(f"{label}: only {len(scored)} of {len(dataset)} pairs scored; need at least 2")
    rho = spearman([row[2] for row in scored], [row[3] for row in scored])
    return EvalResult(label=label, rho=rho, n_scored=len(scored), n_skipped=len(skipped))


def model_scorer(lookup, dim: int | None = None) -> Scorer:
    """Cosine scorer over any mapping/model exposing per-word vectors.

    Accepts an EmbeddingModel, a dict word -> vector, or a dict of composed
    vectors carrying a ``.vector`` attribute.
    """

    def get(word: str):
        if hasattr(lookup, "index"):  # EmbeddingModel
            i = lookup.index.get(word)
            return None if i is None else lookup.vectors[i]
        value = lookup.get(word)
        if value is None:
            return None
        return value.vector if hasattr(value, "vector") else value

    def score(w1: str, w2: str) -> float | None:
        v1, v2 = get(w1), get(w2)
        if v1 is None or v2 is None:
            return None
        return cosine(v1, v2)

    return score


def hybrid_score(internal: float, external: float, alpha: float) -> float:
    """Convex mix: alpha * internal + (1 - alpha) * external."""
    if not 0.0 <= alpha <= 1.0:
        raise EvaluationError(f"alpha must be in [0, 1], got {alpha}")
    return alpha * internal + (1.0 - alpha) * external


def hybrid_scorer(internal: Scorer, external: Scorer, alpha: float) -> Scorer:
    """Pairwise raw-score mix; covers only pairs both scorers cover."""
    if not 0.0 <= alpha <= 1.0:
        raise EvaluationError(f"alpha must be in [0, 1], got {alpha}")

    def score(w1: str, w2: str) -> float | None:
        a, b = internal(w1, w2), external(w1, w2)
        if a is None or b is None:
            return None
        return hybrid_score(a, b, alpha)

    return score


def evaluate_hybrid(
    dataset: WordPairDataset,
    internal: Scorer,
    external: Scorer,
    alpha: float,
    zscore: bool = False,
    label: str = "hybrid",
) -> EvalResult:
    """Hybrid rho over the pairs covered by both scorers.

    ``zscore`` standardizes each scorer over that common coverage before
    mixing; the default mixes raw scores.
    """
    points = weight_sweep(dataset, internal, external, [alpha], zscore=zscore)
    point = points[0]
    n_skipped = len(dataset) - point.n_scored
    return EvalResult(label=label, rho=point.rho, n_scored=point.n_scored, n_skipped=n_skipped)


@dataclass
class SweepPoint:
    alpha: float
    rho: float
    n_scored: int


def weight_sweep(
    dataset: WordPairDataset,
    internal: Scorer,
    external: Scorer,
    grid: Sequence[float],
    zscore: bool = False,
) -> list[SweepPoint]:
    """Evaluate the hybrid at each mixing weight over the common coverage."""
    rows = []
    for w1, w2, gold in dataset.pairs:
        a, b = internal(w1, w2), external(w1, w2)
        if a is not None and b is not None:
            rows.append((gold, a, b))
    if len(rows) < 2:
        raise EvaluationError(f"only {len(rows)} pairs covered by both scorers; need at least 2")
    gold = [r[0] for r in rows]
    ints = np.array([r[1] for r in rows])
    exts = np.array([r[2] for r in rows])
    if zscore:
        ints = (ints - ints.mean()) / (ints.std() or 1.0)
        exts = (exts - exts.mean()) / (exts.std() or 1.0)
    points = []
    for alpha in grid:
        if not 0.0 <= alpha <= 1.0:
            raise EvaluationError(f"grid alpha {alpha} outside [0, 1]")
        mixed = alpha * ints + (1.0 - alpha) * exts
        points.append(SweepPoint(alpha=alpha, rho=spearman(gold, mixed.tolist()), n_scored=len(rows)))
    return points


def sweep_to_csv(points: Sequence[SweepPoint]) -> str:
    lines = ["alpha,rho,n_scored"]
    lines.extend(f"{p.alpha:.4f},{p.rho:.6f},{p.n_scored}" for p in points)
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> list[float]:
    """Parse 'start:stop:step' (inclusive endpoints) or a comma list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise EvaluationError(f"grid {text!r} must be start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise EvaluationError("grid step must be positive")
        n = int(round((stop - start) / step))
        grid = [round(start + i * step, 10) for i in range(n + 1)]
        return [a for a in grid if start <= a <= stop + 1e-12]
    return [float(p) for p in text.split(",") if p.strip()]
