"""Throughput comparison of the compiled SGD kernel vs the numpy fallback.

Usage: python benchmarks/bench_train.py [--epochs N] [--dim D]

Trains on the bundled demo lexicon's pseudo-corpus and reports tokens/sec
for each backend and model, plus the parallel (hogwild) compiled path.
"""

from __future__ import annotations

import argparse
import tempfile
import time

from morphoseed import embedding
from morphoseed.embedding import TrainConfig, train
from morphoseed.generator import generate_corpus, read_corpus
from morphoseed.hierarchy import load_tree
from morphoseed.lexicon import load_lexicon_dir

from pathlib import Path

FIXTURE = Path(__file__).resolve().parent.parent / "src" / "morphoseed" / "data" / "fixture"


def run(sentences, tokens, label, config):
    start = time.perf_counter()
    model = train(sentences, config)
    elapsed = time.perf_counter() - start
    rate = tokens * config.epochs / elapsed
    print(f"{label:<28} {elapsed:8.2f}s   {rate:12,.0f} tokens/s   final loss {model.epoch_losses[-1]:.4f}")
    return elapsed


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--epochs", type=int, default=10)
    ap.add_argument("--dim", type=int, default=20)
    ap.add_argument("--threshold", type=float, default=0.6, help="lower threshold = bigger corpus")
    args = ap.parse_args()

    lexicon = load_lexicon_dir(FIXTURE)
    tree = load_tree(FIXTURE / "hierarchy.tsv")
    with tempfile.TemporaryDirectory() as tmp:
        report = generate_corpus(lexicon, tree, args.threshold, tmp)
        sentences = list(read_corpus(tmp))
    tokens = sum(len(s) for s in sentences)
    print(f"corpus: {len(sentences)} sentences, {tokens} tokens; dim={args.dim}, epochs={args.epochs}")
    print(f"compiled kernel available: {embedding.COMPILED_AVAILABLE}\n")

    results = {}
    for model_kind in ("cbow", "skipgram"):
        base = dict(dim=args.dim, window=3, epochs=args.epochs, rng_seed=42, model=model_kind)
        if embedding.COMPILED_AVAILABLE:
            results[(model_kind, "compiled")] = run(
                sentences, tokens, f"{model_kind} / compiled", TrainConfig(backend="compiled", **base)
            )
            results[(model_kind, "parallel")] = run(
                sentences, tokens, f"{model_kind} / compiled x4",
                TrainConfig(backend="compiled", deterministic=False, workers=4, **base),
            )
        results[(model_kind, "pure")] = run(
            sentences, tokens, f"{model_kind} / pure numpy", TrainConfig(backend="pure", **base)
        )
        if embedding.COMPILED_AVAILABLE:
            speedup = results[(model_kind, "pure")] / results[(model_kind, "compiled")]
            print(f"{'':28} compiled speedup: {speedup:.0f}x\n")


if __name__ == "__main__":
    main()
