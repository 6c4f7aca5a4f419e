"""
User-tunable settings for analyses and the command line.

Settings are read from YAML. Lookup order:

1. An explicit path (``--config PATH``)
2. ``inextensible.config.yaml`` in the working directory
3. Built-in defaults

Example file:

.. code-block:: yaml

    polygonize_n: 4096
    profile_n: 360
    verdict_tol: 1.0e-6
    cover_resolution: 128
    svg_size: 1000

Unknown keys produce a warning and are ignored. Values of the wrong type
raise ``ConfigError``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any

import yaml

from .errors import ConfigError
from .log import log_warning

CONFIG_FILENAME = "inextensible.config.yaml"

LOG_PREFIX = "config"


@dataclass
class Settings:
    """Defaults shared by the library entry points and the CLI.

    Attributes:
        polygonize_n: Half the vertex count of a domain's cached polygon.
        profile_n: Grid size for A(θ) over [0, π).
        verdict_tol: Relative A-spread below which a domain is inextensible.
        critical_tol: Relative tolerance for calling a triangle critical.
        cover_resolution: Samples per side of the fundamental cell.
        circle_samples: Boundary points used by the circle-of-triangles check.
        family_grid: Grid size for the A-variance residual of the family solver.
        svg_size: Width and height of rendered SVG viewports.
        svg_padding: Fractional padding around rendered figures.
    """

    polygonize_n: int = 4096
    profile_n: int = 360
    verdict_tol: float = 1e-6
    critical_tol: float = 1e-7
    cover_resolution: int = 128
    circle_samples: int = 360
    family_grid: int = 720
    svg_size: int = 1000
    svg_padding: float = 0.05

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for YAML/JSON serialization."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Settings:
        """Create Settings from a dictionary, validating value types."""
        known = {f.name: f for f in fields(cls)}
        values: dict[str, Any] = {}
        for key, value in data.items():
            if key not in known:
                log_warning(LOG_PREFIX, f"ignoring unknown setting '{key}'")
                continue
            default = getattr(cls, key)
            if isinstance(default, bool) or isinstance(value, bool):
                raise ConfigError(f"setting '{key}' must be numeric")
            if isinstance(default, int) and not isinstance(value, int):
                raise ConfigError(f"setting '{key}' must be an integer")
            if isinstance(default, float) and not isinstance(value, int | float):
                raise ConfigError(f"setting '{key}' must be a number")
            values[key] = type(default)(value)
        return cls(**values)


def load_settings(path: str | Path | None = None, cwd: str | Path = ".") -> Settings:
    """Load settings from ``path``, the working directory file, or defaults.

    Args:
        path: Explicit settings file. Missing explicit files are an error.
        cwd: Directory searched for ``inextensible.config.yaml``.

    Returns:
        Settings instance.

    Raises:
        ConfigError: If the file cannot be read or parsed, or has bad values.
    """
    if path is None:
        candidate = Path(cwd) / CONFIG_FILENAME
        if not candidate.is_file():
            return Settings()
        path = candidate

    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read settings file {config_path}: {e}") from e

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML in {config_path}: {e}") from e

    if data is None:
        return Settings()
    if not isinstance(data, dict):
        raise ConfigError(f"settings file {config_path} must contain a mapping")
    return Settings.from_dict(data)
