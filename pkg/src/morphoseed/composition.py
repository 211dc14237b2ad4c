"""Word vectors composed from concept embeddings by word-formation weights."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .embedding import EmbeddingModel, token_vector
from .errors import ConfigError, OOVError
from .lexicon import Lexicon, WordEntry, WordFormationPattern

logger = logging.getLogger(__name__)

# Patterns with differentiated slot contributions; affixes contribute
# nothing to the meaning, objects less than the verb, heads more than
# their modifiers.
_ASSIGNED_WEIGHTS: dict[WordFormationPattern, tuple[float, float]] = {
    WordFormationPattern.SUFFIXATION: (1.0, 0.0),
    WordFormationPattern.VERB_COMPLEMENT: (0.8, 0.2),
    WordFormationPattern.VERB_OBJECT: (0.6, 0.4),
    WordFormationPattern.PARALLEL: (0.5, 0.5),
    WordFormationPattern.NONCOMPOUND: (0.5, 0.5),
    WordFormationPattern.MODIFIER_HEAD: (0.45, 0.55),
    WordFormationPattern.ADVERB_VERB: (0.45, 0.55),
    WordFormationPattern.SUBJECT_PREDICATE: (0.4, 0.6),
    WordFormationPattern.PREFIXATION: (0.0, 1.0),
}
_DEFAULT_SPLIT = (0.5, 0.5)


@dataclass
class WeightTable:
    """Per-pattern (first, second) slot weights; each pair sums to 1."""

    weights: dict[WordFormationPattern, tuple[float, float]]
    defaulted: frozenset[WordFormationPattern] = frozenset()

    def __post_init__(self) -> None:
        for pattern, (w1, w2) in self.weights.items():
            if w1 < 0 or w2 < 0 or abs(w1 + w2 - 1.0) > 1e-9:
                raise ConfigError(f"weights for {pattern.value} must be non-negative and sum to 1, got ({w1}, {w2})")

    def __getitem__(self, pattern: WordFormationPattern) -> tuple[float, float]:
        try:
            weights = self.weights[pattern]
        except KeyError:
            raise ConfigError(f"no weights for pattern {pattern.value}") from None
        if pattern in self.defaulted:
            _warn_defaulted(pattern)
        return weights


_warned: set[WordFormationPattern] = set()


def _warn_defaulted(pattern: WordFormationPattern) -> None:
    if pattern not in _warned:
        _warned.add(pattern)
        logger.warning("pattern %s has no assigned weights; using the uninformative 0.5/0.5 split", pattern.value)


def default_weight_table() -> WeightTable:
    """Built-in weights for all 15 patterns.

    Nine patterns carry differentiated weights; the remaining six fall back
    to an even split (flagged with a warning on first use).
    """
    weights = dict(_ASSIGNED_WEIGHTS)
    defaulted = [p for p in WordFormationPattern if p not in weights]
    for pattern in defaulted:
        weights[pattern] = _DEFAULT_SPLIT
    return WeightTable(weights=weights, defaulted=frozenset(defaulted))


def load_weight_table(path: str | Path) -> WeightTable:
    """Read ``pattern <TAB> w1 <TAB> w2`` lines; unlisted patterns default."""
    weights: dict[WordFormationPattern, tuple[float, float]] = {}
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ConfigError(f"{path}:{lineno}: expected 'pattern<TAB>w1<TAB>w2'")
            try:
                pattern = WordFormationPattern.parse(fields[0])
                w1, w2 = float(fields[1]), float(fields[2])
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}") from None
            weights[pattern] = (w1, w2)
    defaulted = [p for p in WordFormationPattern if p not in weights]
    for pattern in defaulted:
        weights[pattern] = _DEFAULT_SPLIT
    return WeightTable(weights=weights, defaulted=frozenset(defaulted))


def save_weight_table(table: WeightTable, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pattern in WordFormationPattern:
            w1, w2 = table.weights[pattern]
            fh.write(f"{pattern.value}\t{w1:g}\t{w2:g}\n")


@dataclass
class ComposedVector:
    surface: str
    vector: np.ndarray
    first_mc: str
    second_mc: str
    pattern: WordFormationPattern
    weights: tuple[float, float]


def compose_word_vector(entry: WordEntry, model: EmbeddingModel, weights: WeightTable) -> ComposedVector:
    """Weighted combination of the two bound concept vectors.

    Raises OOVError when either concept token is untrained; zero-weight
    slots are skipped so weight 1/0 reproduces the surviving vector bitwise.
    """
    w1, w2 = weights[entry.pattern]
    c1 = token_vector(model, entry.first_mc)
    c2 = token_vector(model, entry.second_mc)
    # Plain-float weights keep the vector dtype (no upcast of float32
    # models, no precision loss on float64 ones); zero-weight slots are
    # skipped so a 1/0 split reproduces the surviving vector bitwise.
    if w2 == 0.0:
        vector = w1 * c1
    elif w1 == 0.0:
        vector = w2 * c2
    else:
        vector = w1 * c1 + w2 * c2
    return ComposedVector(entry.surface, vector, entry.first_mc, entry.second_mc, entry.pattern, (w1, w2))


@dataclass
class CoverageReport:
    covered: int
    uncovered: list[str]

    @property
    def total(self) -> int:
        return self.covered + len(self.uncovered)

    @property
    def fraction(self) -> float:
        return self.covered / self.total if self.total else 0.0


def compose_all(
    lexicon: Lexicon,
    model: EmbeddingModel,
    weights: WeightTable | None = None,
) -> tuple[dict[str, ComposedVector], CoverageReport]:
    """Compose every coverable word; uncovered words are reported, not fatal."""
    if weights is None:
        weights = default_weight_table()
    composed: dict[str, ComposedVector] = {}
    uncovered: list[str] = []
    for entry in lexicon.words:
        try:
            composed[entry.surface] = compose_word_vector(entry, model, weights)
        except OOVError:
            uncovered.append(entry.surface)
    return composed, CoverageReport(covered=len(composed), uncovered=uncovered)
