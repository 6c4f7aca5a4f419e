"""Machine-readable outputs: CSV profiles and JSON reports.

Floats are written with 17 significant digits so that every value re-parses
to the same double. Outputs carry no timestamps; identical inputs give
byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

import numpy as np

from analyzers.anchored import AreaProfile
from utils.errors import DomainParseError

PROFILE_HEADER = ("theta_rad", "area")

FLOAT_FORMAT = ".17g"


def format_float(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def format_profile_csv(profile: AreaProfile) -> str:
    """CSV with header ``theta_rad,area`` and one row per grid angle."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PROFILE_HEADER)
    for theta, value in zip(profile.thetas, profile.values, strict=True):
        writer.writerow((format_float(theta), format_float(value)))
    return buffer.getvalue()


def parse_profile_csv(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Read back a profile CSV as (thetas, values).

    Raises:
        DomainParseError: If the header or a row is malformed.
    """
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != PROFILE_HEADER:
        raise DomainParseError(f"profile CSV must start with header {','.join(PROFILE_HEADER)}")
    try:
        data = [(float(t), float(a)) for t, a in rows[1:]]
    except ValueError as e:
        raise DomainParseError(f"bad profile row: {e}") from e
    if not data:
        return np.empty(0), np.empty(0)
    arr = np.array(data)
    return arr[:, 0], arr[:, 1]


def _plain(value: Any) -> Any:
    """numpy scalars and arrays to JSON-native values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def format_json(data: dict[str, Any]) -> str:
    """Indented JSON with sorted keys and a trailing newline."""
    return json.dumps(_plain(data), indent=2, sort_keys=True, allow_nan=True) + "\n"
