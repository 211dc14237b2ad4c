"""Pseudo-sentence generation: fixed 8-slot template plus proliferation.

Each word becomes one 8-token line::

    B  B-<first-concept POS>  <word POS>  <first concept>  <second concept>  <pattern>  E-<second-concept POS>  E

and is then proliferated across the cross-product of the two concepts'
neighbor sets, keeping POS and pattern slots from the seed. Output is
streamed into fixed-size shards so corpus size never hits memory.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .errors import GenerationError
from .hierarchy import MCTree, NeighborSet, all_neighbor_sets
from .lexicon import Lexicon, WordEntry

logger = logging.getLogger(__name__)

SENTENCE_LENGTH = 8
BEGIN = "B"
END = "E"
REPORT_FILE = "report.json"
DEFAULT_SHARD_LINES = 200_000


def instantiate(entry: WordEntry, lexicon: Lexicon) -> list[str]:
    """The 8-token pseudo-sentence for one word entry."""
    first = lexicon.mcs[entry.first_mc]
    second = lexicon.mcs[entry.second_mc]
    return [
        BEGIN,
        f"{BEGIN}-{first.pos.marker}",
        entry.pos.word_token,
        first.id,
        second.id,
        entry.pattern.value,
        f"{END}-{second.pos.marker}",
        END,
    ]


def proliferate(
    entry: WordEntry,
    lexicon: Lexicon,
    neighbor_sets: dict[str, NeighborSet],
    threshold: float,
) -> Iterator[list[str]]:
    """Expand one seed into |set_a| * |set_b| sentences (seed included).

    Slots 4 and 5 run over the cross-product of the two neighbor sets in
    row-major order; every other slot is copied from the seed sentence.
    """
    set_a = neighbor_sets[entry.first_mc]
    set_b = neighbor_sets[entry.second_mc]
    if set_a.threshold != threshold or set_b.threshold != threshold:
        raise GenerationError(
            f"neighbor sets were computed at threshold {set_a.threshold}, requested {threshold}"
        )
    template = instantiate(entry, lexicon)
    ids_b = set_b.ids
    for a in set_a.ids:
        for b in ids_b:
            sentence = list(template)
            sentence[3] = a
            sentence[4] = b
            yield sentence


@dataclass
class GenerationReport:
    """Bookkeeping for one corpus generation run."""

    threshold: float
    seed_words: int
    sentences_emitted: int
    per_seed: list[int]
    duplicates_skipped: int = 0
    shards: list[str] = field(default_factory=list)

    def histogram(self) -> dict[int, int]:
        """Seed count per proliferation size."""
        hist: dict[int, int] = {}
        for n in self.per_seed:
            hist[n] = hist.get(n, 0) + 1
        return dict(sorted(hist.items()))

    def to_json(self) -> str:
        payload = {
            "threshold": self.threshold,
            "seed_words": self.seed_words,
            "sentences_emitted": self.sentences_emitted,
            "duplicates_skipped": self.duplicates_skipped,
            "per_seed": self.per_seed,
            "proliferation_histogram": {str(k): v for k, v in self.histogram().items()},
            "shards": self.shards,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


class _ShardWriter:
    """Rotates output files every ``shard_lines`` lines."""

    def __init__(self, out_dir: Path, prefix: str, shard_lines: int):
        self.out_dir = out_dir
        self.prefix = prefix
        self.shard_lines = shard_lines
        self.shards: list[str] = []
        self._fh = None
        self._lines_in_shard = 0

    def _rotate(self) -> None:
        if self._fh is not None:
            self._fh.close()
        name = f"{self.prefix}{len(self.shards):05d}.txt"
        self.shards.append(name)
        self._fh = open(self.out_dir / name, "w", encoding="utf-8")
        self._lines_in_shard = 0

    def write(self, line: str) -> None:
        if self._fh is None or self._lines_in_shard >= self.shard_lines:
            self._rotate()
        self._fh.write(line)
        self._fh.write("\n")
        self._lines_in_shard += 1

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None


@dataclass
class _SeedTask:
    """Precomputed, picklable inputs for one seed word."""

    template: list[str]
    ids_a: list[str]
    ids_b: list[str]


def _emit_seed(task: _SeedTask, write, seen: set[str] | None) -> tuple[int, int]:
    emitted = 0
    skipped = 0
    tokens = list(task.template)
    head = " ".join(tokens[:3])
    tail = " ".join(tokens[5:])
    for a in task.ids_a:
        for b in task.ids_b:
            line = f"{head} {a} {b} {tail}"
            if seen is not None:
                if line in seen:
                    skipped += 1
                    continue
                seen.add(line)
            write(line)
            emitted += 1
    return emitted, skipped


def _worker_generate(args: tuple[int, list[_SeedTask], str, int]) -> tuple[int, list[int], list[str]]:
    block_index, tasks, out_dir, shard_lines = args
    writer = _ShardWriter(Path(out_dir), f"shard-w{block_index:02d}-", shard_lines)
    counts = []
    for task in tasks:
        emitted, _ = _emit_seed(task, writer.write, None)
        counts.append(emitted)
    writer.close()
    return block_index, counts, writer.shards


def generate_corpus(
    lexicon: Lexicon,
    tree: MCTree,
    threshold: float,
    out_dir: str | Path,
    shard_lines: int = DEFAULT_SHARD_LINES,
    dedup: bool = False,
    workers: int = 1,
) -> GenerationReport:
    """Write the full proliferated pseudo-corpus for ``lexicon`` to shards.

    Single-worker output order is deterministic: lexicon word order, then
    row-major over each seed's neighbor cross-product. With more workers the
    seed list is split into contiguous blocks written to per-block shards;
    the emitted multiset of sentences is identical for any worker count.
    Duplicates are kept unless ``dedup`` (duplicate sentences act as
    frequency weights downstream); dedup requires a single worker.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if dedup and workers > 1:
        raise GenerationError("dedup requires workers=1 (global duplicate tracking)")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    neighbor_sets = all_neighbor_sets(tree, threshold)
    tasks = []
    for entry in lexicon.words:
        template = instantiate(entry, lexicon)
        tasks.append(_SeedTask(template, neighbor_sets[entry.first_mc].ids, neighbor_sets[entry.second_mc].ids))

    per_seed: list[int] = []
    shards: list[str] = []
    duplicates = 0
    try:
        if workers == 1:
            writer = _ShardWriter(out_dir, "shard-", shard_lines)
            seen: set[str] | None = set() if dedup else None
            for task in tasks:
                emitted, skipped = _emit_seed(task, writer.write, seen)
                per_seed.append(emitted)
                duplicates += skipped
            writer.close()
            shards = writer.shards
        else:
            blocks = _split_blocks(tasks, workers)
            per_block_counts: dict[int, list[int]] = {}
            per_block_shards: dict[int, list[str]] = {}
            with ProcessPoolExecutor(max_workers=workers) as pool:
                jobs = [(i, block, str(out_dir), shard_lines) for i, block in enumerate(blocks)]
                for block_index, counts, block_shards in pool.map(_worker_generate, jobs):
                    per_block_counts[block_index] = counts
                    per_block_shards[block_index] = block_shards
            for i in range(len(blocks)):
                per_seed.extend(per_block_counts[i])
                shards.extend(per_block_shards[i])
    except OSError as exc:
        logger.warning("corpus generation aborted, partial output left in %s", out_dir)
        raise GenerationError(f"write failed, partial output in {out_dir}: {exc}") from exc

    report = GenerationReport(
        threshold=threshold,
        seed_words=len(lexicon.words),
        sentences_emitted=sum(per_seed),
        per_seed=per_seed,
        duplicates_skipped=duplicates,
        shards=shards,
    )
    (out_dir / REPORT_FILE).write_text(report.to_json() + "\n", encoding="utf-8")
    return report


def _split_blocks(tasks: Sequence[_SeedTask], workers: int) -> list[list[_SeedTask]]:
    """Contiguous blocks balanced by estimated sentence counts."""
    weights = [len(t.ids_a) * len(t.ids_b) for t in tasks]
    total = sum(weights)
    target = max(1, total // workers)
    blocks: list[list[_SeedTask]] = []
    current: list[_SeedTask] = []
    acc = 0
    for task, w in zip(tasks, weights):
        current.append(task)
        acc += w
        if acc >= target and len(blocks) < workers - 1:
            blocks.append(current)
            current = []
            acc = 0
    blocks.append(current)
    return blocks


def corpus_files(path: str | Path) -> list[Path]:
    """All shard files under ``path`` (or the file itself), sorted by name."""
    path = Path(path)
    if path.is_file():
        return [path]
    files = sorted(p for p in path.glob("*.txt") if p.is_file())
    if not files:
        raise FileNotFoundError(f"no corpus shards (*.txt) under {path}")
    return files


def read_corpus(path: str | Path) -> Iterator[list[str]]:
    """Stream whitespace-tokenized sentences from a corpus file or shard dir."""
    for file in corpus_files(path):
        with open(file, encoding="utf-8") as fh:
            for line in fh:
                tokens = line.split()
                if tokens:
                    yield tokens
