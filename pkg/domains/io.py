"""
Domain files.

Format:

.. code-block:: json

    {
        "pieces": [
            {"segment": {"from": [x, y], "to": [x, y]}},
            {"arc": {"center": [x, y], "rx": 1.0, "ry": 1.0,
                     "rotation_rad": 0.0, "start_rad": 0.0, "end_rad": 3.14}}
        ],
        "polygonize_n": 4096
    }

Floats are written with Python's shortest round-trip representation (at
most 17 significant digits), so a saved domain reloads bit for bit.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from utils.errors import DomainParseError

from .domain import CLOSURE_TOL, DEFAULT_POLYGONIZE_N, Domain
from .named import parse_shorthand
from .pieces import piece_from_dict


def domain_from_dict(
    data: dict[str, Any],
    polygonize_n: int | None = None,
    closure_tol: float = CLOSURE_TOL,
) -> Domain:
    """Build a Domain from parsed JSON. An explicit ``polygonize_n`` wins."""
    if not isinstance(data, dict) or not isinstance(data.get("pieces"), list):
        raise DomainParseError("domain file must be an object with a 'pieces' list")
    pieces = [piece_from_dict(p, i) for i, p in enumerate(data["pieces"])]
    n = polygonize_n if polygonize_n is not None else data.get("polygonize_n", DEFAULT_POLYGONIZE_N)
    closure_tol = data.get("closure_tol", closure_tol)
    if not isinstance(closure_tol, int | float) or isinstance(closure_tol, bool) or closure_tol <= 0:
        raise DomainParseError(f"closure_tol must be a positive number, got {closure_tol!r}")
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainParseError(f"polygonize_n must be an integer, got {n!r}")
    return Domain(pieces, polygonize_n=n, closure_tol=closure_tol)


def domain_to_json(domain: Domain) -> str:
    return json.dumps(domain.to_dict(), indent=2) + "\n"


def load_domain(path: str | Path, polygonize_n: int | None = None) -> Domain:
    """Read a domain file.

    Raises:
        DomainParseError: If the file is not valid domain JSON.
        OSError: If the file cannot be read.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainParseError(f"invalid JSON in {path}: {e}") from e
    return domain_from_dict(data, polygonize_n)


def save_domain(domain: Domain, path: str | Path) -> None:
    Path(path).write_text(domain_to_json(domain), encoding="utf-8")


def resolve_domain(spec: str, polygonize_n: int = DEFAULT_POLYGONIZE_N) -> Domain:
    """An existing file path wins over shorthand parsing."""
    if Path(spec).is_file():
        return load_domain(spec)
    return parse_shorthand(spec, polygonize_n)
