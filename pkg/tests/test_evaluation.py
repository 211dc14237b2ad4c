from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats as scipy_stats

from morphoseed.errors import EvaluationError
from morphoseed.evaluation import (
    EvalResult,
    WordPairDataset,
    average_ranks,
    cosine,
    evaluate,
    evaluate_hybrid,
    hybrid_score,
    hybrid_scorer,
    load_pairs,
    model_scorer,
    parse_grid,
    score_dataset,
    spearman,
    sweep_to_csv,
    weight_sweep,
)


def tie_free_rho_oracle(xs, ys):
    """6*sum(d^2) formula, valid only without ties."""
    n = len(xs)
    rx = {v: i + 1 for i, v in enumerate(sorted(xs))}
    ry = {v: i + 1 for i, v in enumerate(sorted(ys))}
    d2 = sum((rx[a] - ry[b]) ** 2 for a, b in zip(xs, ys))
    return 1 - 6 * d2 / (n * (n * n - 1))


def test_cosine_examples():
    assert cosine(np.array([2.0, 3.0]), np.array([2.0, 3.0])) == pytest.approx(1.0)
    assert cosine(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == pytest.approx(0.0)
    assert cosine(np.array([1.0, 1.0]), np.array([1.0, 0.0])) == pytest.approx(1 / math.sqrt(2))


def test_cosine_errors():
    with pytest.raises(EvaluationError):
        cosine(np.zeros(3), np.ones(3))
    with pytest.raises(EvaluationError):
        cosine(np.ones(3), np.ones(4))


def test_average_ranks_with_ties():
    assert average_ranks([10.0, 20.0, 20.0, 30.0]).tolist() == [1.0, 2.5, 2.5, 4.0]


def test_spearman_monotone_and_reversed():
    xs = [1.0, 2.0, 5.0, 9.0]
    assert spearman(xs, [10.0, 20.0, 21.0, 50.0]) == 1.0
    assert spearman(xs, [4.0, 3.0, 2.0, 1.0]) == -1.0


def test_spearman_hand_example():
    # d^2 = 0 + 1 + 1 over n = 3: rho = 1 - 6*2/24 = 0.5
    assert spearman([1.0, 2.0, 3.0], [1.0, 3.0, 2.0]) == pytest.approx(0.5)
    assert tie_free_rho_oracle([1, 2, 3], [1, 3, 2]) == pytest.approx(0.5)


def test_spearman_matches_tie_free_oracle_and_scipy():
    rng = np.random.default_rng(0)
    for _ in range(200):
        n = int(rng.integers(3, 40))
        xs = rng.permutation(n).astype(float).tolist()
        ys = rng.permutation(n).astype(float).tolist()
        ours = spearman(xs, ys)
        assert ours == pytest.approx(tie_free_rho_oracle(xs, ys), abs=1e-12)
        assert ours == pytest.approx(scipy_stats.spearmanr(xs, ys).statistic, abs=1e-12)


def test_spearman_with_ties_matches_scipy():
    rng = np.random.default_rng(1)
    for _ in range(50):
        n = int(rng.integers(4, 30))
        xs = rng.integers(0, 5, size=n).astype(float).tolist()
        ys = rng.integers(0, 5, size=n).astype(float).tolist()
        try:
            ours = spearman(xs, ys)
        except EvaluationError:
            continue  # zero rank variance
        assert ours == pytest.approx(scipy_stats.spearmanr(xs, ys).statistic, abs=1e-12)


def test_spearman_errors():
    with pytest.raises(EvaluationError):
        spearman([1.0], [2.0])
    with pytest.raises(EvaluationError):
        spearman([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(EvaluationError):
        spearman([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


@given(
    st.lists(st.integers(min_value=-1000, max_value=1000), min_size=3, max_size=30, unique=True),
    st.sampled_from([lambda x: 3 * x + 7, lambda x: x**3, math.atan]),
)
def test_spearman_invariant_under_monotone_transforms(xs, f):
    xs = [float(x) for x in xs]
    ys = [float(i) for i in range(len(xs))]
    base = spearman(xs, ys)
    assert spearman([f(x) for x in xs], ys) == pytest.approx(base, abs=1e-12)
    assert spearman(ys, xs) == pytest.approx(spearman(xs, ys), abs=1e-12)


def test_dataset_rejects_duplicates_and_nonfinite():
    with pytest.raises(EvaluationError):
        WordPairDataset("d", (("甲", "乙", 1.0), ("乙", "甲", 2.0)))
    with pytest.raises(EvaluationError):
        WordPairDataset("d", (("甲", "乙", float("nan")),))


def test_load_pairs_fixture(fixture_dir):
    dataset = load_pairs(fixture_dir / "pairs.tsv")
    assert len(dataset) >= 30
    assert all(len(p) == 3 for p in dataset.pairs)


def test_score_dataset_skips_uncovered():
    dataset = WordPairDataset("d", (("a", "b", 1.0), ("a", "c", 2.0), ("b", "c", 3.0)))
    vectors = {"a": np.array([1.0, 0.0]), "b": np.array([1.0, 1.0])}
    scorer = model_scorer(vectors)
    scored, skipped = score_dataset(dataset, scorer)
    assert [(w1, w2) for w1, w2, _, _ in scored] == [("a", "b")]
    assert skipped == [("a", "c"), ("b", "c")]


def test_evaluate_self_correlation_is_one():
    pairs = tuple((f"w{i}", f"v{i}", float(i)) for i in range(10))
    dataset = WordPairDataset("d", pairs)
    result = evaluate(dataset, lambda a, b: dict((p[0], p[2]) for p in pairs)[a], "gold")
    assert result.rho == 1.0
    assert result.n_scored == 10 and result.n_skipped == 0


def test_evaluate_requires_two_scored_pairs():
    dataset = WordPairDataset("d", (("a", "b", 1.0), ("c", "d", 2.0)))
    with pytest.raises(EvaluationError):
        evaluate(dataset, lambda a, b: 1.0 if a == "a" else None, "m")


def test_evaluate_row_order_independent():
    rng = np.random.default_rng(5)
    pairs = [(f"w{i}", f"v{i}", float(rng.integers(0, 100))) for i in range(20)]
    scores = {p[:2]: float(rng.random()) for p in pairs}
    scorer = lambda a, b: scores[(a, b)]
    forward = evaluate(WordPairDataset("d", tuple(pairs)), scorer, "m").rho
    backward = evaluate(WordPairDataset("d", tuple(reversed(pairs))), scorer, "m").rho
    assert forward == pytest.approx(backward, abs=1e-15)


def test_hybrid_score_arithmetic():
    assert hybrid_score(0.5, 0.5, 0.0) == 0.5
    assert hybrid_score(0.9, 0.1, 0.0) == pytest.approx(0.1)
    assert hybrid_score(0.9, 0.1, 1.0) == pytest.approx(0.9)
    assert hybrid_score(0.4, 0.8, 0.35) == pytest.approx(0.66)
    with pytest.raises(EvaluationError):
        hybrid_score(0.5, 0.5, 1.5)


def test_hybrid_scorer_covers_intersection_only():
    internal = lambda a, b: 1.0 if a != "x" else None
    external = lambda a, b: 0.0 if b != "y" else None
    mixed = hybrid_scorer(internal, external, 0.5)
    assert mixed("a", "b") == 0.5
    assert mixed("x", "b") is None
    assert mixed("a", "y") is None


def test_weight_sweep_endpoints_reproduce_pure_models():
    rng = np.random.default_rng(6)
    pairs = tuple((f"w{i}", f"v{i}", float(rng.random())) for i in range(30))
    dataset = WordPairDataset("d", pairs)
    int_scores = {p[:2]: float(rng.random()) for p in pairs}
    ext_scores = {p[:2]: float(rng.random()) for p in pairs}
    internal = lambda a, b: int_scores[(a, b)]
    external = lambda a, b: ext_scores[(a, b)]
    points = weight_sweep(dataset, internal, external, [0.0, 0.5, 1.0])
    assert points[0].rho == pytest.approx(evaluate(dataset, external, "e").rho, abs=1e-12)
    assert points[-1].rho == pytest.approx(evaluate(dataset, internal, "i").rho, abs=1e-12)
    assert [p.alpha for p in points] == [0.0, 0.5, 1.0]
    assert all(p.n_scored == 30 for p in points)


def test_weight_sweep_csv_shape():
    scores_int = {"a": 0.9, "c": 0.1, "e": 0.4}
    scores_ext = {"a": 0.2, "c": 0.7, "e": 0.9}
    points = weight_sweep(
        WordPairDataset("d", (("a", "b", 1.0), ("c", "d", 2.0), ("e", "f", 0.5))),
        lambda a, b: scores_int[a],
        lambda a, b: scores_ext[a],
        [i / 20 for i in range(21)],
    )
    csv = sweep_to_csv(points)
    lines = csv.strip().splitlines()
    assert lines[0] == "alpha,rho,n_scored"
    assert len(lines) == 22


def test_parse_grid():
    assert parse_grid("0:1:0.5") == [0.0, 0.5, 1.0]
    assert len(parse_grid("0:1:0.05")) == 21
    assert parse_grid("0.1,0.9") == [0.1, 0.9]
    with pytest.raises(EvaluationError):
        parse_grid("0:1:0:5")


def test_evaluate_hybrid_zscore_flag_runs():
    rng = np.random.default_rng(11)
    pairs = tuple((f"w{i}", f"v{i}", float(i)) for i in range(25))
    dataset = WordPairDataset("d", pairs)
    int_scores = {p[:2]: p[2] + rng.normal() for p in pairs}
    ext_scores = {p[:2]: 100 * p[2] + rng.normal() for p in pairs}
    raw = evaluate_hybrid(dataset, lambda a, b: int_scores[(a, b)], lambda a, b: ext_scores[(a, b)], 0.35)
    standardized = evaluate_hybrid(
        dataset, lambda a, b: int_scores[(a, b)], lambda a, b: ext_scores[(a, b)], 0.35, zscore=True
    )
    assert isinstance(raw, EvalResult) and isinstance(standardized, EvalResult)
    assert raw.n_scored == standardized.n_scored == 25
