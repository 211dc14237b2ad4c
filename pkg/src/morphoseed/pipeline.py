"""End-to-end orchestration: validate, generate, train, compose, evaluate.

Every run serializes its resolved configuration into the output directory.
Stages persist their artifacts plus an input hash; a rerun skips any stage
whose inputs (files and settings) are unchanged, unless forced. All
randomness flows from the single configured seed, so a deterministic rerun
into a fresh directory is byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import composition, evaluation
from .embedding import TrainConfig, load_model, save_model, save_vectors, train
from .errors import ConfigError, Issue, LexiconError, MorphoseedError
from .generator import REPORT_FILE, corpus_files, generate_corpus
from .hierarchy import check_tree_covers_lexicon, load_tree
from .lexicon import lexicon_stats, load_lexicon_dir

logger = logging.getLogger(__name__)

CONFIG_FILE = "config.json"
SUMMARY_FILE = "summary.json"


@dataclass
class PipelineConfig:
    lexicon: Path
    hierarchy: Path
    out: Path
    threshold: float = 0.85
    dim: int = 20
    window: int = 3
    model: str = "cbow"
    negatives: int = 5
    epochs: int = 5
    initial_lr: float = 0.025
    min_count: int = 1
    seed: int = 42
    deterministic: bool = True
    workers: int = 1
    shard_lines: int = 200_000
    dedup: bool = False
    subsample: float = 0.0
    backend: str = "auto"
    weights: Path | None = None
    pairs: Path | None = None
    external: Path | None = None
    alpha: float = 0.35
    zscore: bool = False

    _PATH_KEYS = ("lexicon", "hierarchy", "out", "weights", "pairs", "external")
    _BOOL_KEYS = ("deterministic", "dedup", "zscore")
    _INT_KEYS = ("dim", "window", "negatives", "epochs", "min_count", "seed", "workers", "shard_lines")
    _FLOAT_KEYS = ("threshold", "initial_lr", "subsample", "alpha")

    def __post_init__(self) -> None:
        for key in self._PATH_KEYS:
            value = getattr(self, key)
            if value is not None:
                setattr(self, key, Path(value))
        if not 0.0 <= self.threshold <= 1.0:
            raise ConfigError(f"threshold must be in [0, 1], got {self.threshold}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must be in [0, 1], got {self.alpha}")

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            dim=self.dim,
            window=self.window,
            model=self.model,
            negatives=self.negatives,
            epochs=self.epochs,
            initial_lr=self.initial_lr,
            min_count=self.min_count,
            rng_seed=self.seed,
            deterministic=self.deterministic,
            workers=self.workers,
            subsample=self.subsample,
            backend=self.backend,
        )

    def to_json(self) -> str:
        payload = {k: (str(v) if isinstance(v, Path) else v) for k, v in asdict(self).items()}
        return json.dumps(payload, indent=2, sort_keys=True)


def parse_config_value(key: str, raw: str):
    raw = raw.strip()
    if key in PipelineConfig._BOOL_KEYS:
        if raw.lower() in ("1", "true", "yes", "on"):
            return True
        if raw.lower() in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key}: expected a boolean, got {raw!r}")
    if key in PipelineConfig._INT_KEYS:
        return int(raw)
    if key in PipelineConfig._FLOAT_KEYS:
        return float(raw)
    if key in PipelineConfig._PATH_KEYS:
        return Path(raw)
    return raw


def load_config_file(path: str | Path) -> dict:
    """Plain ``key = value`` config lines; '#' comments; flags override."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    known = set(PipelineConfig.__dataclass_fields__)
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known or key.startswith("_"):
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = parse_config_value(key, value)
    return values


def _hash_parts(*parts) -> str:
    digest = hashlib.sha256()
    for part in parts:
        if isinstance(part, Path):
            digest.update(str(part.name).encode())
            with open(part, "rb") as fh:
                for chunk in iter(lambda: fh.read(1 << 20), b""):
                    digest.update(chunk)
        else:
            digest.update(json.dumps(part, sort_keys=True, default=str).encode())
        digest.update(b"\x00")
    return digest.hexdigest()


@dataclass
class StageRunner:
    out: Path
    force: bool
    statuses: dict[str, str] = field(default_factory=dict)

    def hash_path(self, stage: str) -> Path:
        return self.out / ".hashes" / f"{stage}.sha256"

    def up_to_date(self, stage: str, input_hash: str, artifacts: list[Path]) -> bool:
        if self.force:
            return False
        marker = self.hash_path(stage)
        if not marker.is_file() or marker.read_text().strip() != input_hash:
            return False
        return all(p.exists() for p in artifacts)

    def mark(self, stage: str, input_hash: str) -> None:
        marker = self.hash_path(stage)
        marker.parent.mkdir(parents=True, exist_ok=True)
        marker.write_text(input_hash + "\n")


def run_pipeline(config: PipelineConfig, force: bool = False) -> dict:
    """Run all stages; returns the summary dict (also written to disk)."""
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / CONFIG_FILE).write_text(config.to_json() + "\n", encoding="utf-8")
    runner = StageRunner(out=out, force=force)
    summary: dict = {"seed": config.seed, "threshold": config.threshold}

    # -- validate ----------------------------------------------------------
    lexicon_files = sorted(Path(config.lexicon).glob("*.tsv"))
    for required in ("morphemes.tsv", "mcs.tsv", "words.tsv"):
        if not (Path(config.lexicon) / required).is_file():
            raise LexiconError([Issue(f"missing {required} in {config.lexicon}")])
    lexicon = load_lexicon_dir(config.lexicon)
    tree = load_tree(config.hierarchy)
    issues = check_tree_covers_lexicon(tree, lexicon)
    if issues:
        raise LexiconError(issues)
    stats = lexicon_stats(lexicon)
    summary["lexicon"] = {
        "characters": stats.characters,
        "morphemes": stats.morphemes,
        "mcs": stats.mcs,
        "words": stats.words,
    }
    runner.statuses["validate"] = "ok"
    logger.info("validate: %d morphemes, %d concepts, %d words", stats.morphemes, stats.mcs, stats.words)

    # -- generate ----------------------------------------------------------
    corpus_dir = out / "corpus"
    gen_hash = _hash_parts(
        *lexicon_files,
        Path(config.hierarchy),
        {
            "threshold": config.threshold,
            "dedup": config.dedup,
            "shard_lines": config.shard_lines,
            "workers": config.workers,
        },
    )
    report_path = corpus_dir / REPORT_FILE
    if runner.up_to_date("generate", gen_hash, [report_path]):
        runner.statuses["generate"] = "skipped"
        report = json.loads(report_path.read_text())
    else:
        result = generate_corpus(
            lexicon, tree, config.threshold, corpus_dir,
            shard_lines=config.shard_lines, dedup=config.dedup, workers=config.workers,
        )
        runner.mark("generate", gen_hash)
        runner.statuses["generate"] = "ok"
        report = json.loads(report_path.read_text())
    summary["corpus"] = {
        "sentences": report["sentences_emitted"],
        "seed_words": report["seed_words"],
    }
    logger.info("generate: %d sentences from %d seeds", report["sentences_emitted"], report["seed_words"])

    # -- train -------------------------------------------------------------
    model_path = out / "model.vec"
    out_path = out / "model.vec.out"
    train_cfg = config.train_config()
    train_hash = _hash_parts(*corpus_files(corpus_dir), asdict(train_cfg))
    train_report = out / "train.json"
    if runner.up_to_date("train", train_hash, [model_path, out_path, train_report]):
        runner.statuses["train"] = "skipped"
        model = load_model(model_path)
        epoch_losses = json.loads(train_report.read_text())["epoch_losses"]
    else:
        model = train(corpus_dir, train_cfg)
        save_model(model, model_path)
        epoch_losses = model.epoch_losses
        train_report.write_text(
            json.dumps({"epoch_losses": epoch_losses, "vocabulary": len(model)}, indent=2) + "\n",
            encoding="utf-8",
        )
        runner.mark("train", train_hash)
        runner.statuses["train"] = "ok"
    summary["train"] = {"vocabulary": len(model), "epoch_losses": epoch_losses}

    # -- compose -----------------------------------------------------------
    words_path = out / "words.vec"
    compose_report = out / "compose.json"
    weight_table = composition.load_weight_table(config.weights) if config.weights else composition.default_weight_table()
    compose_hash = _hash_parts(
        model_path, *lexicon_files, {"weights": str(config.weights) if config.weights else "default"}
    )
    if runner.up_to_date("compose", compose_hash, [words_path, compose_report]):
        runner.statuses["compose"] = "skipped"
        coverage = json.loads(compose_report.read_text())
    else:
        composed, cover = composition.compose_all(lexicon, model, weight_table)
        surfaces = sorted(composed)
        matrix = np.stack([composed[s].vector for s in surfaces]) if surfaces else np.zeros((0, model.dim))
        save_vectors(surfaces, matrix, words_path)
        coverage = {"covered": cover.covered, "fraction": cover.fraction, "uncovered": cover.uncovered}
        compose_report.write_text(json.dumps(coverage, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        runner.mark("compose", compose_hash)
        runner.statuses["compose"] = "ok"
    summary["compose"] = {"covered": coverage["covered"], "fraction": coverage["fraction"]}
    logger.info("compose: %d words covered (%.1f%%)", coverage["covered"], 100 * coverage["fraction"])

    # -- eval --------------------------------------------------------------
    eval_path = out / "eval.json"
    if config.pairs is None:
        runner.statuses["eval"] = "skipped"
    else:
        eval_inputs = [words_path, Path(config.pairs)]
        if config.external:
            eval_inputs.append(Path(config.external))
        eval_hash = _hash_parts(*eval_inputs, {"alpha": config.alpha, "zscore": config.zscore})
        if runner.up_to_date("eval", eval_hash, [eval_path]):
            runner.statuses["eval"] = "skipped"
            summary["eval"] = json.loads(eval_path.read_text())
        else:
            report = evaluate_files(
                pairs=config.pairs, internal=words_path, external=config.external,
                alpha=config.alpha, zscore=config.zscore,
            )
            eval_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
            runner.mark("eval", eval_hash)
            runner.statuses["eval"] = "ok"
            summary["eval"] = report

    summary["stages"] = runner.statuses
    (out / SUMMARY_FILE).write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return summary


def evaluate_files(
    pairs: str | Path,
    internal: str | Path,
    external: str | Path | None = None,
    alpha: float = 0.35,
    zscore: bool = False,
) -> dict:
    """Evaluate vector files against a word-pair dataset; returns a report dict."""
    dataset = evaluation.load_pairs(pairs)
    internal_model = load_model(internal)
    internal_scorer = evaluation.model_scorer(internal_model)
    results = {"dataset": dataset.name, "pairs": len(dataset)}
    internal_result = evaluation.evaluate(dataset, internal_scorer, "internal")
    results["internal"] = {
        "rho": internal_result.rho,
        "n_scored": internal_result.n_scored,
        "n_skipped": internal_result.n_skipped,
    }
    if external is not None:
        external_model = load_model(external)
        external_scorer = evaluation.model_scorer(external_model)
        external_result = evaluation.evaluate(dataset, external_scorer, "external")
        hybrid_result = evaluation.evaluate_hybrid(dataset, internal_scorer, external_scorer, alpha, zscore=zscore)
        results["external"] = {
            "rho": external_result.rho,
            "n_scored": external_result.n_scored,
            "n_skipped": external_result.n_skipped,
        }
        results["hybrid"] = {
            "alpha": alpha,
            "zscore": zscore,
            "rho": hybrid_result.rho,
            "n_scored": hybrid_result.n_scored,
        }
    return results


def fail_kind(exc: Exception) -> int:
    """Exit code for an error: 1 for validation problems, 2 for runtime."""
    validation = (LexiconError, ConfigError, FileNotFoundError)
    from .errors import EncodingError, TreeError

    if isinstance(exc, (EncodingError, TreeError)) or isinstance(exc, validation):
        return 1
    if isinstance(exc, MorphoseedError):
        return 2
    return 2
