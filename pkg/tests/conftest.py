from __future__ import annotations

from pathlib import Path

import pytest

from morphoseed.embedding import TrainConfig, train
from morphoseed.generator import generate_corpus, read_corpus
from morphoseed.hierarchy import load_tree
from morphoseed.lexicon import load_lexicon_dir

REPO = Path(__file__).resolve().parent.parent
FIXTURE = REPO / "src" / "morphoseed" / "data" / "fixture"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon_dir(FIXTURE)


@pytest.fixture(scope="session")
def tree():
    return load_tree(FIXTURE / "hierarchy.tsv")


@pytest.fixture(scope="session")
def corpus_085(lexicon, tree, tmp_path_factory):
    """Fixture pseudo-corpus at the default 0.85 threshold."""
    out = tmp_path_factory.mktemp("corpus085")
    report = generate_corpus(lexicon, tree, 0.85, out)
    sentences = list(read_corpus(out))
    return out, report, sentences


@pytest.fixture(scope="session")
def fixture_model(corpus_085):
    """Model trained at the reference settings (dim 20, window 3, 5 epochs)."""
    _, _, sentences = corpus_085
    return train(sentences, TrainConfig(dim=20, window=3, epochs=5, rng_seed=42))
