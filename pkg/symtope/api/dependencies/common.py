# Common dependencies for API endpoints
from typing import NoReturn

import structlog
from fastapi import HTTPException, status

from symtope.core.config import Settings, settings
from symtope.core.errors import (
    CorpusError,
    GuardExceededError,
    InvalidComplexError,
    SymtopeError,
)
from symtope.corpus import corpus_repository
from symtope.schemas import AnalyzeRequest
from symtope.services.complexes import SimplicialComplex

logger = structlog.get_logger(__name__)

_STATUS = {
    CorpusError: status.HTTP_404_NOT_FOUND,
    InvalidComplexError: status.HTTP_422_UNPROCESSABLE_ENTITY,
    GuardExceededError: status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
}


def get_settings() -> Settings:
    return settings


def raise_api_error(exc: SymtopeError) -> NoReturn:
    code = next(
        (c for t, c in _STATUS.items() if isinstance(exc, t)),
        status.HTTP_400_BAD_REQUEST,
    )
    logger.info("api_error", code=exc.code, status=code)
    error = {"code": exc.code, "message": exc.message, "detail": exc.detail}
    raise HTTPException(status_code=code, detail={"error": error})


def resolve_request(request: AnalyzeRequest) -> SimplicialComplex:
    """Exactly one of ``builtin`` and ``complex`` must be given."""
    if (request.builtin is None) == (request.complex is None):
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={
                "error": {
                    "code": "BAD_REQUEST",
                    "message": "give exactly one of 'builtin' and 'complex'",
                }
            },
        )
    try:
        if request.builtin is not None:
            return corpus_repository.get(request.builtin)
        return request.complex.to_complex()
    except SymtopeError as exc:
        raise_api_error(exc)
