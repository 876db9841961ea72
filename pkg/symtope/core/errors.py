"""Exception hierarchy shared by the services, the CLI and the HTTP layer."""

from typing import Optional


class SymtopeError(Exception):
    """Base error; ``code`` is stable and ends up in serialized error bodies."""

    code = "SYMTOPE_ERROR"

    def __init__(self, message: str, detail: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail


class InvalidComplexError(SymtopeError):
    code = "INVALID_COMPLEX"


class DimensionError(SymtopeError):
    code = "DIMENSION_OUT_OF_RANGE"


class NotPureError(SymtopeError):
    code = "NOT_PURE"


class SubcomplexError(SymtopeError):
    code = "NOT_A_SUBCOMPLEX"


class LabelCollisionError(SymtopeError):
    code = "LABEL_COLLISION"


class GuardExceededError(SymtopeError):
    """Raised before an enumeration whose predicted size is over its guard."""

    code = "GUARD_EXCEEDED"

    def __init__(self, guard: str, predicted: int, limit: int):
        super().__init__(
            f"{guard} guard exceeded: predicted {predicted}, limit {limit}",
            detail=guard,
        )
        self.guard = guard
        self.predicted = predicted
        self.limit = limit


class NotPrimitiveError(SymtopeError):
    code = "NOT_PRIMITIVE"


class CorankError(SymtopeError):
    code = "WRONG_CORANK"


class NotOrientableError(SymtopeError):
    code = "NOT_ORIENTABLE"


class IncompleteDependenciesError(SymtopeError):
    code = "INCOMPLETE_DEPENDENCIES"


class TriangulationError(SymtopeError):
    code = "TRIANGULATION_MISMATCH"


class NoApplicableRouteError(SymtopeError):
    code = "NO_APPLICABLE_ROUTE"


class NotPlanarError(SymtopeError):
    code = "NOT_PLANAR"


class CorpusError(SymtopeError):
    code = "UNKNOWN_BUILTIN"


def check_guard(guard: str, predicted: int, limit: int) -> None:
    if predicted > limit:
        raise GuardExceededError(guard, predicted, limit)
