from .analyzer import AnalysisService, analysis_service, guarded, polytope_of

__all__ = [
    "AnalysisService",
    "analysis_service",
    "guarded",
    "polytope_of",
]
