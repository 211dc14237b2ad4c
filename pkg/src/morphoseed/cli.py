"""Command line interface.

Subcommands: validate, stats, neighbors, generate, train, compose, eval,
sweep, nearest, syntagmatic, project, pipeline. Exit codes: 0 on success,
1 on validation failure, 2 on runtime failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__, analysis, composition, evaluation
from .embedding import TrainConfig, load_model, save_model, save_vectors, train
from .errors import ConfigError, LexiconError, MorphoseedError
from .generator import generate_corpus
from .hierarchy import check_tree_covers_lexicon, load_tree, neighbor_set
from .lexicon import lexicon_stats, load_lexicon_dir
from .pipeline import PipelineConfig, evaluate_files, fail_kind, load_config_file, run_pipeline

logger = logging.getLogger("morphoseed")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morphoseed",
        description="Concept embeddings from a structured word-formation lexicon",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-q", "--quiet", action="store_true", help="only warnings and errors")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", help="check lexicon (and hierarchy) integrity")
    p.add_argument("--lexicon", required=True, help="directory with morphemes/mcs/words TSV files")
    p.add_argument("--hierarchy", help="hierarchy edge-list file to cross-check")

    p = sub.add_parser("stats", help="lexicon summary as TSV")
    p.add_argument("--lexicon", required=True)

    p = sub.add_parser("neighbors", help="similarity neighbor set of one concept")
    p.add_argument("--hierarchy", required=True)
    p.add_argument("--mc", required=True, help="concept id")
    p.add_argument("--threshold", type=float, default=0.85)

    p = sub.add_parser("generate", help="write the proliferated pseudo-corpus")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--hierarchy", required=True)
    p.add_argument("--threshold", type=float, default=0.85)
    p.add_argument("--out", required=True, help="output directory for shards + report.json")
    p.add_argument("--shard-lines", type=int, default=200_000)
    p.add_argument("--dedup", action="store_true", help="drop duplicate sentences (single worker only)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("train", help="train embeddings on a corpus")
    p.add_argument("--corpus", required=True, help="corpus file or shard directory")
    p.add_argument("--out", required=True, help="output model file (text format)")
    p.add_argument("--dim", type=int, default=20)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--model", choices=("cbow", "skipgram"), default="cbow")
    p.add_argument("--negative", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--lr", type=float, default=0.025)
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--deterministic", action="store_true", default=True)
    p.add_argument("--throughput", dest="deterministic", action="store_false",
                   help="allow lock-free parallel updates (non-deterministic)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sampled-window", action="store_true", help="sample the window span per position")
    p.add_argument("--subsample", type=float, default=0.0, help="frequent-token subsampling rate, e.g. 1e-3")
    p.add_argument("--backend", choices=("auto", "compiled", "pure"), default="auto")

    p = sub.add_parser("compose", help="compose word vectors from concept vectors")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--weights", help="weights TSV; defaults to the built-in table")
    p.add_argument("--out", required=True, help="output word-vector file")

    p = sub.add_parser("eval", help="word-similarity evaluation")
    p.add_argument("--pairs", required=True)
    p.add_argument("--internal", required=True, help="composed word vectors")
    p.add_argument("--external", help="baseline word vectors for the hybrid")
    p.add_argument("--alpha", type=float, default=0.35)
    p.add_argument("--zscore", action="store_true", help="standardize scores before mixing")

    p = sub.add_parser("sweep", help="mixing-weight sweep, CSV output")
    p.add_argument("--pairs", required=True)
    p.add_argument("--internal", required=True)
    p.add_argument("--external", required=True)
    p.add_argument("--grid", default="0:1:0.05", help="start:stop:step or comma list")
    p.add_argument("--zscore", action="store_true")
    p.add_argument("--out", required=True, help="output CSV")

    p = sub.add_parser("nearest", help="paradigmatic nearest concepts")
    p.add_argument("--model", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--mc", required=True)
    p.add_argument("-k", type=int, default=3)

    p = sub.add_parser("syntagmatic", help="concepts most predicted as word-building partners")
    p.add_argument("--model", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--mc", required=True)
    p.add_argument("-k", type=int, default=3)

    p = sub.add_parser("project", help="2-D projection of token vectors, CSV output")
    p.add_argument("--model", required=True)
    p.add_argument("--tokens", required=True, help="file with one token per line")
    p.add_argument("--out", required=True)

    p = sub.add_parser("pipeline", help="run validate/generate/train/compose/eval end to end")
    p.add_argument("--config", help="key = value config file (flags override)")
    p.add_argument("--lexicon")
    p.add_argument("--hierarchy")
    p.add_argument("--out")
    p.add_argument("--threshold", type=float)
    p.add_argument("--dim", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--model", choices=("cbow", "skipgram"))
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--weights")
    p.add_argument("--pairs")
    p.add_argument("--external")
    p.add_argument("--alpha", type=float)
    p.add_argument("--force", action="store_true", help="rerun stages even if artifacts are current")
    return ap


def _cmd_validate(args) -> int:
    try:
        lexicon = load_lexicon_dir(args.lexicon)
    except LexiconError as exc:
        for issue in exc.issues:
            print(f"error: {issue}", file=sys.stderr)
        print(f"validation failed: {len(exc.issues)} issue(s)", file=sys.stderr)
        return 1
    issues = []
    if args.hierarchy:
        tree = load_tree(args.hierarchy)
        issues = check_tree_covers_lexicon(tree, lexicon)
        for issue in issues:
            print(f"error: {issue}", file=sys.stderr)
    if issues:
        print(f"validation failed: {len(issues)} issue(s)", file=sys.stderr)
        return 1
    print(f"ok: {len(lexicon.morphemes)} morphemes, {len(lexicon.mcs)} concepts, {len(lexicon.words)} words")
    return 0


def _cmd_stats(args) -> int:
    stats = lexicon_stats(load_lexicon_dir(args.lexicon))
    sys.stdout.write(stats.to_tsv())
    return 0


def _cmd_neighbors(args) -> int:
    tree = load_tree(args.hierarchy)
    result = neighbor_set(tree, args.mc, args.threshold)
    for node, score in result.members:
        print(f"{node}\t{score:.6f}")
    return 0


def _cmd_generate(args) -> int:
    lexicon = load_lexicon_dir(args.lexicon)
    tree = load_tree(args.hierarchy)
    issues = check_tree_covers_lexicon(tree, lexicon)
    if issues:
        for issue in issues:
            print(f"error: {issue}", file=sys.stderr)
        return 1
    report = generate_corpus(
        lexicon, tree, args.threshold, args.out,
        shard_lines=args.shard_lines, dedup=args.dedup, workers=args.workers,
    )
    print(f"{report.sentences_emitted} sentences from {report.seed_words} seeds -> {args.out}")
    return 0


def _cmd_train(args) -> int:
    config = TrainConfig(
        dim=args.dim, window=args.window, model=args.model, negatives=args.negative,
        epochs=args.epochs, initial_lr=args.lr, min_count=args.min_count,
        rng_seed=args.seed, deterministic=args.deterministic, workers=args.workers,
        fixed_window=not args.sampled_window, subsample=args.subsample, backend=args.backend,
    )
    model = train(args.corpus, config)
    save_model(model, args.out)
    shown = model.epoch_losses
    if len(shown) > 8:
        losses = " ".join(f"{x:.4f}" for x in shown[:4]) + " ... " + " ".join(f"{x:.4f}" for x in shown[-2:])
    else:
        losses = " ".join(f"{x:.4f}" for x in shown)
    print(f"trained {len(model)} tokens x {model.dim} dims; epoch losses: {losses}")
    print(f"model -> {args.out} (+ .out)")
    return 0


def _cmd_compose(args) -> int:
    lexicon = load_lexicon_dir(args.lexicon)
    model = load_model(args.model)
    table = composition.load_weight_table(args.weights) if args.weights else composition.default_weight_table()
    composed, coverage = composition.compose_all(lexicon, model, table)
    surfaces = sorted(composed)
    matrix = np.stack([composed[s].vector for s in surfaces])
    save_vectors(surfaces, matrix, args.out)
    print(f"composed {coverage.covered}/{coverage.total} words ({100 * coverage.fraction:.1f}%) -> {args.out}")
    if coverage.uncovered:
        print("uncovered: " + " ".join(coverage.uncovered[:10]) + ("..." if len(coverage.uncovered) > 10 else ""))
    return 0


def _cmd_eval(args) -> int:
    report = evaluate_files(
        pairs=args.pairs, internal=args.internal, external=args.external,
        alpha=args.alpha, zscore=args.zscore,
    )
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_sweep(args) -> int:
    dataset = evaluation.load_pairs(args.pairs)
    internal = evaluation.model_scorer(load_model(args.internal))
    external = evaluation.model_scorer(load_model(args.external))
    grid = evaluation.parse_grid(args.grid)
    points = evaluation.weight_sweep(dataset, internal, external, grid, zscore=args.zscore)
    Path(args.out).write_text(evaluation.sweep_to_csv(points), encoding="utf-8")
    best = max(points, key=lambda p: p.rho)
    print(f"{len(points)} grid points -> {args.out}; best alpha {best.alpha:.2f} (rho {best.rho:.4f})")
    return 0


def _cmd_nearest(args) -> int:
    model = load_model(args.model)
    lexicon = load_lexicon_dir(args.lexicon)
    result = analysis.nearest_mcs(model, lexicon, args.mc, args.k)
    for mc_id, score in result.neighbors:
        gloss = lexicon.mcs[mc_id].gloss
        print(f"{mc_id}\t{score:.6f}\t{gloss}")
    return 0


def _cmd_syntagmatic(args) -> int:
    model = load_model(args.model)
    lexicon = load_lexicon_dir(args.lexicon)
    result = analysis.syntagmatic_top(model, lexicon, args.mc, args.k)
    for mc_id, score in result.neighbors:
        gloss = lexicon.mcs[mc_id].gloss
        print(f"{mc_id}\t{score:.6f}\t{gloss}")
    return 0


def _cmd_project(args) -> int:
    model = load_model(args.model)
    tokens = [line.strip() for line in Path(args.tokens).read_text(encoding="utf-8").splitlines() if line.strip()]
    projection = analysis.pca_project(model, tokens)
    Path(args.out).write_text(projection.to_csv(), encoding="utf-8")
    ev = projection.explained_variance
    print(f"{len(tokens)} tokens -> {args.out}; explained variance {ev[0]:.3f} + {ev[1]:.3f}")
    return 0


def _cmd_pipeline(args) -> int:
    values = load_config_file(args.config) if args.config else {}
    for key in ("lexicon", "hierarchy", "out", "threshold", "dim", "window", "model",
                "epochs", "seed", "weights", "pairs", "external", "alpha"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    missing = [key for key in ("lexicon", "hierarchy", "out") if key not in values]
    if missing:
        raise ConfigError(f"pipeline needs {', '.join(missing)} (via --config or flags)")
    config = PipelineConfig(**values)
    summary = run_pipeline(config, force=args.force)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "stats": _cmd_stats,
    "neighbors": _cmd_neighbors,
    "generate": _cmd_generate,
    "train": _cmd_train,
    "compose": _cmd_compose,
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "nearest": _cmd_nearest,
    "syntagmatic": _cmd_syntagmatic,
    "project": _cmd_project,
    "pipeline": _cmd_pipeline,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.cmd](args)
    except LexiconError as exc:
        for issue in exc.issues:
            print(f"error: {issue}", file=sys.stderr)
        return 1
    except MorphoseedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return fail_kind(exc)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
