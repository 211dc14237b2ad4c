"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class MorphoseedError(Exception):
    """Base class for all package errors."""


class EncodingError(MorphoseedError):
    """Malformed or inconsistent morpheme encoding string."""


@dataclass
class Issue:
    """One validation problem, located in its source file when known."""

    message: str
    file: str | None = None
    line: int | None = None

    def __str__(self) -> str:
        if self.file is None:
            return self.message
        loc = self.file if self.line is None else f"{self.file}:{self.line}"
        return f"{loc}: {self.message}"


class LexiconError(MorphoseedError):
    """Lexicon files could not be loaded or validated."""

    def __init__(self, issues: list[Issue] | str):
        if isinstance(issues, str):
            issues = [Issue(issues)]
        self.issues = issues
        super().__init__("; ".join(str(i) for i in issues[:5]) + ("" if len(issues) <= 5 else f" (+{len(issues) - 5} more)"))


class TreeError(MorphoseedError):
    """Hierarchy file is not a valid rooted tree."""


class UnknownNodeError(TreeError):
    """Query for a node id that is not in the tree."""


class GenerationError(MorphoseedError):
    """Pseudo-corpus generation failed (possibly leaving partial output)."""


class EmptyCorpusError(MorphoseedError):
    """No usable tokens found when building a vocabulary."""


class OOVError(MorphoseedError):
    """Token not present in a model vocabulary."""


class ModelFormatError(MorphoseedError):
    """Vector file does not conform to the text format."""


class EvaluationError(MorphoseedError):
    """Similarity or correlation is undefined for the given input."""


class ConfigError(MorphoseedError):
    """Bad pipeline configuration or config file."""
