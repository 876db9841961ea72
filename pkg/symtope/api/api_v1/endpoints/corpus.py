"""Built-in complexes"""

from fastapi import APIRouter, Query

from symtope.api.dependencies import raise_api_error
from symtope.core.errors import SymtopeError
from symtope.corpus import corpus_repository
from symtope.schemas import ApiResponse, ComplexFile, CorpusEntry, CorpusList

router = APIRouter()


@router.get("", response_model=ApiResponse[CorpusList])
def list_corpus(
    skip: int = Query(0, ge=0),
    limit: int = Query(100, ge=1, le=1000),
):
    """List the built-in complexes with their f-vectors"""
    entries = []
    for fixture in corpus_repository.get_multi(skip=skip, limit=limit):
        complex_ = corpus_repository.get(fixture.name)
        entries.append(
            CorpusEntry(
                name=fixture.name,
                description=fixture.description,
                dim=complex_.dim,
                f_vector=list(complex_.f_vector),
            )
        )
    return ApiResponse(data=CorpusList(entries=entries))


@router.get("/{name}", response_model=ApiResponse[ComplexFile])
def get_builtin(name: str):
    """Facet list of one built-in complex"""
    try:
        return ApiResponse(data=ComplexFile.from_complex(corpus_repository.get(name)))
    except SymtopeError as exc:
        raise_api_error(exc)
