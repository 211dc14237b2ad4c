"""morphoseed: concept embeddings from a structured word-formation lexicon.

A disyllabic-word lexicon with morpheme-to-concept bindings is expanded
into templated pseudo-sentences (proliferated across a concept hierarchy),
embeddings are trained on them with CBOW or skip-gram, and word vectors
are composed back from the concept vectors by word-formation weights.
"""

__version__ = "0.1.0"

from .errors import MorphoseedError

__all__ = ["MorphoseedError", "__version__", "fixture_dir"]


def fixture_dir():
    """Path of the bundled demo lexicon (morphemes/mcs/words/hierarchy/pairs)."""
    from importlib.resources import files

    return files("morphoseed") / "data" / "fixture"
