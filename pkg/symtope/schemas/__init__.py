from .analysis import (
    AnalysisOptions,
    AnalysisReport,
    AnalyzeRequest,
    BinomialOut,
    CompareReport,
    CompareRequest,
    CorpusEntry,
    CorpusList,
    FacetOut,
    FingerprintOut,
    GroebnerOut,
    HomologyOut,
    IDPOut,
    ModelOut,
    PolytopeSummary,
    ProfileOut,
    ReflexivityOut,
    SphereEquivalenceOut,
    SweepEntryOut,
    SweepReport,
    TriangulationOut,
)
from .common import ApiError, ApiResponse, BaseSchema, ErrorDetail, MetaInfo, Skipped
from .complex import ComplexFile, GraphFile, MatrixDump, RotationSystemFile

__all__ = [
    # Envelope
    "ApiResponse",
    "ApiError",
    "ErrorDetail",
    "MetaInfo",
    "BaseSchema",
    "Skipped",
    # Inputs
    "ComplexFile",
    "GraphFile",
    "RotationSystemFile",
    "MatrixDump",
    "AnalyzeRequest",
    "AnalysisOptions",
    "CompareRequest",
    # Reports
    "AnalysisReport",
    "PolytopeSummary",
    "ProfileOut",
    "HomologyOut",
    "FacetOut",
    "ReflexivityOut",
    "IDPOut",
    "GroebnerOut",
    "BinomialOut",
    "TriangulationOut",
    "FingerprintOut",
    "ModelOut",
    "CompareReport",
    "SphereEquivalenceOut",
    "SweepReport",
    "SweepEntryOut",
    "CorpusEntry",
    "CorpusList",
]
