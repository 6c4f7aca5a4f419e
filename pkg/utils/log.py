"""
Diagnostics written to stderr.

Messages use the ``"{prefix}: {message}"`` format; each module passes its
own ``LOG_PREFIX``. Info messages are only written when verbosity is on,
either through ``set_verbose(True)`` (the ``--verbose`` flag) or the
``INEXTENSIBLE_VERBOSE`` environment variable.
"""

from __future__ import annotations

import os
import sys

VERBOSE_ENV = "INEXTENSIBLE_VERBOSE"

_verbose = os.environ.get(VERBOSE_ENV, "") not in ("", "0", "false")


def set_verbose(enabled: bool) -> None:
    """Turn info-level diagnostics on or off."""
    global _verbose
    _verbose = enabled


def is_verbose() -> bool:
    return _verbose


def log_error(prefix: str, message: str) -> None:
    """Write error message to stderr.

    Args:
        prefix: The log prefix (e.g., "family")
        message: The error message
    """
    sys.stderr.write(f"{prefix}: {message}\n")


def log_warning(prefix: str, message: str) -> None:
    sys.stderr.write(f"{prefix}: warning: {message}\n")


def log_info(prefix: str, message: str) -> None:
    if _verbose:
        sys.stderr.write(f"{prefix}: {message}\n")
