from .fixtures import FIXTURES, Fixture
from .repository import BUILTIN_PREFIX, CorpusRepository, corpus_repository

__all__ = [
    "FIXTURES",
    "Fixture",
    "CorpusRepository",
    "corpus_repository",
    "BUILTIN_PREFIX",
]
