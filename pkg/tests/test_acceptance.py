"""Acceptance suite: one test per release criterion, tolerances pinned.

Each test prints a PASS line on success (run with -s or -v to see them);
a pytest failure marks the criterion red.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict

import numpy as np
import pytest

from morphoseed.analysis import syntagmatic_top
from morphoseed.composition import compose_word_vector, default_weight_table
from morphoseed.embedding import (
    EmbeddingModel,
    TrainConfig,
    example_loss,
    pair_loss_and_grads,
    token_vector,
    train,
)
from morphoseed.evaluation import WordPairDataset, cosine, spearman, sweep_to_csv, weight_sweep
from morphoseed.generator import generate_corpus, instantiate
from morphoseed.hierarchy import build_tree, mc_similarity
from morphoseed.lexicon import POSTag, WordEntry, WordFormationPattern
from morphoseed.pipeline import PipelineConfig, run_pipeline


def _passed(n: int, label: str, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {n:02d} {label}: PASS{suffix}")


# -- 1 -----------------------------------------------------------------------


def test_criterion_01_similarity_matches_path_set_oracle():
    start = time.monotonic()
    rng = random.Random(20240815)
    for _ in range(100):
        n = rng.randint(2, 200)
        parent = {}
        names = ["ROOT"]
        for i in range(1, n):
            name = f"cat:n{i}" if rng.random() < 0.4 else f"m{i}_01_01"
            parent[name] = names[rng.randrange(len(names))]
            names.append(name)
        tree = build_tree(parent, "ROOT")
        paths = tree.paths
        for a in names:
            pa, sa = paths[a], set(paths[a])
            for b in names:
                oracle = 2.0 * len(sa & set(paths[b])) / (len(pa) + len(paths[b]))
                ours = mc_similarity(tree, a, b)
                assert ours == oracle  # identical rational evaluation, exact
                assert mc_similarity(tree, b, a) == ours
            assert mc_similarity(tree, a, a) == 1.0
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    _passed(1, "similarity oracle equivalence", f"{elapsed:.1f}s for 100 trees")


# -- 2 -----------------------------------------------------------------------


def test_criterion_02_proliferation_count_identity(lexicon, tree, tmp_path):
    assert len(lexicon.words) >= 200 and len(lexicon.mcs) >= 50
    start = time.monotonic()
    mcs = tree.mc_nodes
    for threshold in (0.6, 0.85, 1.0):
        report = generate_corpus(lexicon, tree, threshold, tmp_path / f"t{threshold}")
        expected = 0
        for entry in lexicon.words:
            na = sum(1 for m in mcs if mc_similarity(tree, entry.first_mc, m) >= threshold)
            nb = sum(1 for m in mcs if mc_similarity(tree, entry.second_mc, m) >= threshold)
            expected += na * nb
        assert report.sentences_emitted == expected
        if threshold == 1.0:
            assert report.sentences_emitted == len(lexicon.words)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    _passed(2, "proliferation count identity", f"{elapsed:.1f}s")


# -- 3 -----------------------------------------------------------------------


def test_criterion_03_template_fidelity(lexicon, corpus_085):
    entry = next(w for w in lexicon.words if w.surface == "植树")
    assert instantiate(entry, lexicon) == [
        "B", "B-Verbal", "Verb", "养1_11_02", "木1_07_01", "Verb-Object", "E-Nominal", "E",
    ]
    _, _, sentences = corpus_085
    sample = sentences[:: max(1, len(sentences) // 1000)]
    for s in sample:
        assert len(s) == 8
        assert s[0] == "B" and s[7] == "E"
        assert s[1].startswith("B-") and s[6].startswith("E-")
        assert s[1][2:] in {p.marker for p in POSTag} and s[6][2:] in {p.marker for p in POSTag}
    _passed(3, "template fidelity", f"{len(sample)} lines sampled")


# -- 4 -----------------------------------------------------------------------


def test_criterion_04_trainer_correctness(corpus_085):
    rng = np.random.default_rng(77)
    for rep in range(20):
        cbow = rep % 2 == 0
        v = int(rng.integers(4, 21))
        dim = int(rng.integers(2, 9))
        syn0 = rng.normal(scale=0.5, size=(v, dim))
        syn1 = rng.normal(scale=0.5, size=(v, dim))
        target = int(rng.integers(v))
        others = [i for i in range(v) if i != target]
        negatives = list(rng.choice(others, size=min(4, len(others)), replace=False))
        ids = list(rng.choice(v, size=int(rng.integers(1, 5)), replace=True)) if cbow else [int(rng.integers(v))]
        _, a0, a1 = pair_loss_and_grads(syn0, syn1, ids, target, negatives, cbow)
        eps = 1e-6
        for matrix, analytic in ((syn0, a0), (syn1, a1)):
            it = np.nditer(matrix, flags=["multi_index"])
            for _ in it:
                idx = it.multi_index
                orig = matrix[idx]
                matrix[idx] = orig + eps
                up = example_loss(syn0, syn1, ids, target, negatives, cbow)
                matrix[idx] = orig - eps
                down = example_loss(syn0, syn1, ids, target, negatives, cbow)
                matrix[idx] = orig
                numeric = (up - down) / (2 * eps)
                denom = max(abs(numeric), 1e-8)
                assert abs(analytic[idx] - numeric) / denom < 1e-4

    _, _, sentences = corpus_085
    cfg = TrainConfig(dim=20, window=3, epochs=5, rng_seed=42, deterministic=True)
    m1 = train(sentences, cfg)
    m2 = train(sentences, cfg)
    assert np.array_equal(m1.vectors, m2.vectors) and np.array_equal(m1.out_vectors, m2.out_vectors)
    losses = m1.epoch_losses
    assert losses[1] < losses[0] and losses[2] < losses[1]
    _passed(4, "trainer correctness", f"losses {losses[0]:.3f}->{losses[2]:.3f}, bitwise reproducible")


# -- 5 -----------------------------------------------------------------------


def test_criterion_05_paradigmatic_structure(lexicon, tree, fixture_model):
    start = time.monotonic()
    model = fixture_model  # dim 20, window 3, theta 0.85, 5 epochs
    trained = [m for m in lexicon.mcs if m in model.index]
    same, cross = [], []
    for i, a in enumerate(trained):
        for b in trained[i + 1:]:
            score = cosine(token_vector(model, a), token_vector(model, b))
            if tree.parent[a] == tree.parent[b]:
                same.append(score)
            elif tree.paths[a][1] != tree.paths[b][1]:
                cross.append(score)
    gap = float(np.mean(same) - np.mean(cross))
    elapsed = time.monotonic() - start
    assert same and cross
    assert gap >= 0.1
    assert elapsed < 120.0
    _passed(5, "paradigmatic structure", f"gap {gap:.3f} over {len(same)}/{len(cross)} pairs")


# -- 6 -----------------------------------------------------------------------


def test_criterion_06_syntagmatic_structure(lexicon, corpus_085):
    # convergence recipe: subsample the template markers, more negatives,
    # enough epochs for the negative-sampling objective to separate pairs
    _, _, sentences = corpus_085
    model = train(
        sentences,
        TrainConfig(dim=20, window=3, epochs=300, negatives=15, initial_lr=0.05,
                    subsample=1e-3, rng_seed=42),
    )
    cooc = defaultdict(set)
    for s in sentences:
        cooc[s[3]].add(s[4])
        cooc[s[4]].add(s[3])
    trained = [m for m in lexicon.mcs if m in model.index]
    ok = total = 0
    for query in trained:
        partners = cooc[query] & set(trained)
        non = [m for m in trained if m not in cooc[query] and m != query]
        if not partners or len(non) < 3:
            continue
        total += 1
        ranked = dict(syntagmatic_top(model, lexicon, query, len(trained)).neighbors)
        if min(ranked[p] for p in partners) > float(np.median([ranked[m] for m in non])):
            ok += 1
    rate = ok / total
    assert rate >= 0.8
    _passed(6, "syntagmatic structure", f"{ok}/{total} = {rate:.2f}")


# -- 7 -----------------------------------------------------------------------


def test_criterion_07_composition_exactness():
    rng = np.random.default_rng(15)
    table = default_weight_table()
    c1 = rng.normal(size=20).astype(np.float32)
    c2 = rng.normal(size=20).astype(np.float32)
    model = EmbeddingModel(tokens=["a1_01_01", "b1_01_01"], vectors=np.stack([c1, c2]))
    suffixed = compose_word_vector(
        WordEntry("某头", POSTag.NOMINAL, WordFormationPattern.SUFFIXATION, "a1_01_01", "b1_01_01"),
        model, table,
    )
    assert suffixed.vector.tobytes() == c1.tobytes()

    e1 = np.zeros(20); e1[0] = 1.0
    e2 = np.zeros(20); e2[1] = 1.0
    basis_model = EmbeddingModel(tokens=["a1_01_01", "b1_01_01"], vectors=np.stack([e1, e2]))
    vo = compose_word_vector(
        WordEntry("某词", POSTag.VERBAL, WordFormationPattern.VERB_OBJECT, "a1_01_01", "b1_01_01"),
        basis_model, table,
    )
    expected = np.zeros(20); expected[0] = 0.6; expected[1] = 0.4
    assert np.max(np.abs(vo.vector - expected)) <= 1e-12
    _passed(7, "composition exactness")


# -- 8 -----------------------------------------------------------------------


def test_criterion_08_spearman_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(3, 60))
        xs = rng.permutation(n).astype(float)
        ys = rng.permutation(n).astype(float)
        rx = {v: i + 1 for i, v in enumerate(sorted(xs))}
        ry = {v: i + 1 for i, v in enumerate(sorted(ys))}
        d2 = sum((rx[a] - ry[b]) ** 2 for a, b in zip(xs, ys))
        oracle = 1 - 6 * d2 / (n * (n * n - 1))
        assert abs(spearman(xs.tolist(), ys.tolist()) - oracle) <= 1e-12
    xs = [3.0, 1.0, 4.0, 1.5, 9.0]
    assert spearman(xs, [30.0, 10.0, 40.0, 15.0, 90.0]) == 1.0
    assert spearman(xs, [-3.0, -1.0, -4.0, -1.5, -9.0]) == -1.0
    assert spearman([1.0, 2.0, 3.0], [1.0, 3.0, 2.0]) == pytest.approx(0.5, abs=1e-15)
    _passed(8, "spearman oracle agreement", "1000 random lists")


# -- 9 -----------------------------------------------------------------------


def test_criterion_09_hybrid_sweep_beats_both(tmp_path):
    # internal and external each see half the items clearly and noise on
    # the complementary half, so neither alone recovers the full ranking
    rng = np.random.default_rng(31)
    n = 60
    gold = list(rng.permutation(n).astype(float))
    internal_scores = {}
    external_scores = {}
    for i in range(n):
        noise = float(rng.uniform(0, n))
        internal_scores[i] = gold[i] if i % 2 == 0 else noise
        external_scores[i] = gold[i] if i % 2 == 1 else noise
    dataset = WordPairDataset("synthetic", tuple((f"w{i}", f"v{i}", gold[i]) for i in range(n)))
    internal = lambda a, b: internal_scores[int(a[1:])]
    external = lambda a, b: external_scores[int(a[1:])]
    grid = [i * 0.05 for i in range(21)]
    points = weight_sweep(dataset, internal, external, grid)
    assert len(points) == 21
    rho_int = points[-1].rho
    rho_ext = points[0].rho
    best = max(p.rho for p in points)
    assert best >= max(rho_int, rho_ext)
    csv = sweep_to_csv(points)
    csv_path = tmp_path / "sweep.csv"
    csv_path.write_text(csv, encoding="utf-8")
    assert len(csv_path.read_text().strip().splitlines()) == len(grid) + 1
    _passed(9, "hybrid sweep", f"best {best:.3f} vs int {rho_int:.3f} / ext {rho_ext:.3f}")


# -- 10 ----------------------------------------------------------------------


def test_criterion_10_end_to_end_determinism(fixture_dir, tmp_path):
    start = time.monotonic()
    outputs = []
    for run in ("one", "two"):
        out = tmp_path / run
        config = PipelineConfig(
            lexicon=fixture_dir,
            hierarchy=fixture_dir / "hierarchy.tsv",
            pairs=fixture_dir / "pairs.tsv",
            out=out,
            seed=42,
            deterministic=True,
        )
        run_pipeline(config)
        outputs.append(out)
    first, second = outputs
    for name in ("model.vec", "model.vec.out", "words.vec", "eval.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes(), name
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    _passed(10, "end-to-end determinism", f"{elapsed:.1f}s for two runs")
