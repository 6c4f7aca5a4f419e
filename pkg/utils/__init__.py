"""
Shared utilities: errors, stderr diagnostics, settings and scalar numerics.
"""

from .config import Settings, load_settings
from .errors import ErrorCode, InextensibleError
from .log import log_error, log_info, log_warning, set_verbose

__all__ = [
    "ErrorCode",
    "InextensibleError",
    "Settings",
    "load_settings",
    "log_error",
    "log_info",
    "log_warning",
    "set_verbose",
]
