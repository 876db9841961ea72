from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Generic, Optional, TypeVar

from pydantic import BaseModel, Field

from symtope.core.config import settings
from symtope.utils.common import format_rational

T = TypeVar("T")


class BaseSchema(BaseModel):
    model_config = {"from_attributes": True}


class MetaInfo(BaseModel):
    """Metadata for responses"""

    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    schema_version: str = Field(default_factory=lambda: settings.SCHEMA_VERSION)


class ApiResponse(BaseModel, Generic[T]):
    """Standard response wrapper with data and meta"""

    data: T
    meta: MetaInfo = Field(default_factory=MetaInfo)


class ErrorDetail(BaseModel):
    """Error detail structure"""

    code: str
    message: str
    detail: Optional[str] = None


class ApiError(BaseModel):
    """Standard error response"""

    error: ErrorDetail


class Skipped(BaseModel):
    """
    Placeholder for a field that was not computed; ``skipped`` names the guard
    or error code.
    """

    skipped: str
    reason: Optional[str] = None

    @property
    def is_guard(self) -> bool:
        """Guard names (max_*) as opposed to error codes."""
        return self.skipped.startswith("max_")


def rationals(value: Any) -> Any:
    """Nested Fractions become "p/q" strings; everything else passes through."""
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [rationals(v) for v in value]
    return value
