"""Intrinsic validation tools: neighbor queries and 2-D projection.

Paradigmatic neighbors rank concept tokens by cosine over input vectors
(substitutability); syntagmatic ranking scores input-output dot products
(which concepts tend to combine in word-building). Both operate on concept
tokens only, never on the template's marker tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingModel, output_vector, token_vector
from .errors import EvaluationError, OOVError
from .evaluation import cosine
from .lexicon import Lexicon

POWER_ITER_TOL = 1e-9
POWER_ITER_MAX = 10_000


@dataclass
class NeighborResult:
    query: str
    k: int
    neighbors: list[tuple[str, float]]


def _mc_candidates(model: EmbeddingModel, lexicon: Lexicon) -> list[str]:
    return [mc_id for mc_id in sorted(lexicon.mcs) if mc_id in model.index]


def nearest_mcs(model: EmbeddingModel, lexicon: Lexicon, query_mc: str, k: int) -> NeighborResult:
    """Top-k concepts by cosine to the query concept (query excluded)."""
    qv = token_vector(model, query_mc)
    scored = []
    for mc_id in _mc_candidates(model, lexicon):
        if mc_id == query_mc:
            continue
        scored.append((mc_id, cosine(qv, token_vector(model, mc_id))))
    scored.sort(key=lambda ns: (-ns[1], ns[0]))
    return NeighborResult(query=query_mc, k=k, neighbors=scored[:k])


def syntagmatic_top(model: EmbeddingModel, lexicon: Lexicon, query_mc: str, k: int) -> NeighborResult:
    """Top-k concepts most predicted as context of the query.

    Scores are raw input-output dot products; ranking is unchanged by the
    softmax normalizer, so it is skipped. The query itself may appear (a
    concept can combine with itself, as reduplication does).
    """
    qv = token_vector(model, query_mc)
    if model.out_vectors is None:
        raise EvaluationError("syntagmatic ranking needs the output matrix (.out sidecar)")
    scored = []
    for mc_id in _mc_candidates(model, lexicon):
        scored.append((mc_id, float(qv @ output_vector(model, mc_id))))
    scored.sort(key=lambda ns: (-ns[1], ns[0]))
    return NeighborResult(query=query_mc, k=k, neighbors=scored[:k])


@dataclass
class Projection2D:
    points: list[tuple[str, float, float]]
    explained_variance: tuple[float, float]
    components: np.ndarray

    def to_csv(self) -> str:
        lines = ["token,x,y"]
        lines.extend(f"{tok},{x:.6f},{y:.6f}" for tok, x, y in self.points)
        return "\n".join(lines) + "\n"


def _power_iteration(cov: np.ndarray, against: np.ndarray | None) -> tuple[np.ndarray, float]:
    """Dominant eigenvector of cov, deflated against an earlier component."""
    d = cov.shape[0]
    v = 1.0 / np.arange(1, d + 1, dtype=np.float64)
    v /= np.linalg.norm(v)
    if against is not None:
        v -= (against @ v) * against
        norm = np.linalg.norm(v)
        v = v / norm if norm > 0 else _perturb(d, against)
    for _ in range(POWER_ITER_MAX):
        w = cov @ v
        if against is not None:
            w -= (against @ w) * against
        norm = np.linalg.norm(w)
        if norm == 0.0:
            break
        w /= norm
        if w @ v < 0:
            w = -w
        delta = float(np.linalg.norm(w - v))
        v = w
        if delta < POWER_ITER_TOL:
            break
    eigenvalue = float(v @ cov @ v)
    return v, eigenvalue


def _perturb(d: int, against: np.ndarray) -> np.ndarray:
    for i in range(d):
        v = np.zeros(d)
        v[i] = 1.0
        v -= (against @ v) * against
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            return v / norm
    raise EvaluationError("projection input is degenerate")


def _fix_sign(v: np.ndarray) -> np.ndarray:
    for x in v:
        if abs(x) > 1e-12:
            return v if x > 0 else -v
    return v


def pca_project(model: EmbeddingModel, tokens: list[str], components: int = 2) -> Projection2D:
    """Project token vectors onto their top-2 principal axes.

    Mean-centered covariance, eigenvectors via power iteration with
    deflation; axis signs are fixed so the first nonzero loading is
    positive, making the CSV reproducible.
    """
    if components != 2:
        raise EvaluationError("only 2-component projection is supported")
    if len(tokens) < 3:
        raise EvaluationError("need at least 3 tokens to project")
    missing = [t for t in tokens if t not in model.index]
    if missing:
        raise OOVError(f"tokens not in model: {', '.join(missing[:5])}")
    data = np.stack([token_vector(model, t) for t in tokens]).astype(np.float64)
    centered = data - data.mean(axis=0)
    cov = (centered.T @ centered) / (len(tokens) - 1)
    total_var = float(np.trace(cov))
    if total_var <= 0.0:
        raise EvaluationError("zero-variance input; projection undefined")

    v1, lam1 = _power_iteration(cov, against=None)
    v2, lam2 = _power_iteration(cov, against=v1)
    v1, v2 = _fix_sign(v1), _fix_sign(v2)
    xs = centered @ v1
    ys = centered @ v2
    return Projection2D(
        points=[(tok, float(x), float(y)) for tok, x, y in zip(tokens, xs, ys)],
        explained_variance=(max(lam1, 0.0) / total_var, max(lam2, 0.0) / total_var),
        components=np.stack([v1, v2]),
    )
