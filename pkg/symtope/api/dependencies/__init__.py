from .common import get_settings, raise_api_error, resolve_request

__all__ = ["get_settings", "raise_api_error", "resolve_request"]
