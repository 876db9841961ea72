"""Analysis endpoints; the work is CPU-bound so handlers are plain functions."""

from fastapi import APIRouter, Depends

from symtope.api.dependencies import get_settings, raise_api_error, resolve_request
from symtope.core.config import Settings
from symtope.core.errors import SymtopeError
from symtope.schemas import (
    AnalysisReport,
    AnalyzeRequest,
    ApiResponse,
    CompareReport,
    CompareRequest,
    SweepReport,
)
from symtope.services.analysis import analysis_service

router = APIRouter()


@router.post(
    "/analyze",
    response_model=ApiResponse[AnalysisReport],
    response_model_by_alias=True,
)
def analyze(request: AnalyzeRequest, settings: Settings = Depends(get_settings)):
    """
    Analyze one complex.

    - **builtin**: name of a built-in complex, or
    - **complex**: an inline facet list
    - **options**: which polytopes and which optional invariants to compute

    Fields over a size guard come back as `{"skipped": guard}`.
    """
    complex_ = resolve_request(request)
    try:
        report = analysis_service.analyze(complex_, request.options, settings)
    except SymtopeError as exc:
        raise_api_error(exc)
    return ApiResponse(data=report)


@router.post(
    "/compare",
    response_model=ApiResponse[CompareReport],
    response_model_by_alias=True,
)
def compare(request: CompareRequest, settings: Settings = Depends(get_settings)):
    """Fingerprints and structural equivalence checks for two complexes"""
    first = resolve_request(request.first)
    second = resolve_request(request.second)
    try:
        report = analysis_service.compare(
            first, second, request.which, request.hstar, settings
        )
    except SymtopeError as exc:
        raise_api_error(exc)
    return ApiResponse(data=report)


@router.post(
    "/sweep",
    response_model=ApiResponse[SweepReport],
    response_model_by_alias=True,
)
def sweep(request: AnalyzeRequest, settings: Settings = Depends(get_settings)):
    """Reflexivity of P_Γ for the subcomplexes Γ obtained by deleting top facets"""
    complex_ = resolve_request(request)
    try:
        report = analysis_service.sweep(complex_, settings=settings)
    except SymtopeError as exc:
        raise_api_error(exc)
    return ApiResponse(data=report)
