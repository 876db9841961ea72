# Read-only access to the built-in complexes
from functools import lru_cache
from typing import Dict, List, Optional

import structlog

from symtope.core.errors import CorpusError
from symtope.corpus.fixtures import FIXTURES, Fixture
from symtope.services.complexes import SimplicialComplex

logger = structlog.get_logger(__name__)

BUILTIN_PREFIX = "builtin:"


class CorpusRepository:
    def __init__(self, fixtures: Dict[str, Fixture]):
        """
        Lookup object over a fixed fixture table.
        **Parameters**
        * `fixtures`: name -> Fixture
        """
        self.fixtures = fixtures

    def names(self) -> List[str]:
        return sorted(self.fixtures)

    def get_fixture(self, name: str) -> Fixture:
        try:
            return self.fixtures[name]
        except KeyError:
            raise CorpusError(
                f"unknown builtin {name!r}", detail=f"known: {', '.join(self.names())}"
            )

    def get(self, name: str) -> SimplicialComplex:
        """Build (once) and return the named complex."""
        return _build(self, name)

    def get_multi(self, skip: int = 0, limit: Optional[int] = None) -> List[Fixture]:
        names = self.names()[skip:]
        return [self.fixtures[n] for n in (names if limit is None else names[:limit])]

    def resolve(self, reference: str) -> Optional[SimplicialComplex]:
        """``builtin:NAME`` references resolve here; anything else returns None."""
        if not reference.startswith(BUILTIN_PREFIX):
            return None
        return self.get(reference[len(BUILTIN_PREFIX) :])


@lru_cache(maxsize=None)
def _cached(name: str, fixture: Fixture) -> SimplicialComplex:
    complex_ = fixture.build()
    logger.debug("corpus_build", name=name, f_vector=list(complex_.f_vector))
    return complex_


def _build(repository: CorpusRepository, name: str) -> SimplicialComplex:
    return _cached(name, repository.get_fixture(name))


corpus_repository = CorpusRepository(FIXTURES)
