"""
Base classes for command execution.

Each subcommand of the ``inextensible`` CLI is a ``BaseCommand`` subclass.
Commands are instantiated with the parsed argparse namespace and the loaded
``Settings``, then executed via ``run()``.

Creating a New Command
----------------------

.. code-block:: python

    from cli.base import BaseCommand, CommandResult

    class AreaCommand(BaseCommand):
        \"\"\"Print the area of a domain.\"\"\"

        name = "area"

        def execute(self) -> CommandResult:
            domain = self.load_domain()
            return CommandResult.ok("area computed", output=f"{domain.area()!r}\\n")

Error Handling
--------------

Library functions raise ``InextensibleError`` subclasses. ``run()`` converts
them into failed results carrying the error's ``ErrorCode``, which
``exit_code_for`` maps onto process exit codes:

- ``PARSE``, ``CONFIG``, ``IO`` (and argument errors): exit 1
- ``INVARIANT``: exit 2
- ``SOLVER``: exit 3

Commands never print directly; the text they produce is returned in
``CommandResult.output`` and written by ``cli.main``.
"""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from domains.domain import Domain
from domains.io import resolve_domain
from utils.config import Settings
from utils.errors import ErrorCode, InextensibleError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2
EXIT_SOLVER = 3

EXIT_CODES = {
    ErrorCode.NONE: EXIT_OK,
    ErrorCode.PARSE: EXIT_INPUT,
    ErrorCode.CONFIG: EXIT_INPUT,
    ErrorCode.IO: EXIT_INPUT,
    ErrorCode.INVARIANT: EXIT_INVARIANT,
    ErrorCode.SOLVER: EXIT_SOLVER,
    ErrorCode.UNKNOWN: EXIT_INPUT,
}


def exit_code_for(error_code: ErrorCode) -> int:
    """Process exit code for a result's error category."""
    return EXIT_CODES.get(error_code, EXIT_INPUT)


@dataclass
class CommandResult:
    """Result of a command execution.

    Attributes:
        success: Whether the command completed successfully.
        message: Human-readable description of the result.
        output: Text for stdout (CSV, JSON or SVG), written verbatim.
        data: Optional result data for callers and tests.
        warnings: Non-fatal issues, reported on stderr.
        error_code: Categorized error code for failures.
    """

    success: bool
    message: str
    output: str = ""
    data: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    error_code: ErrorCode = ErrorCode.NONE

    @classmethod
    def ok(cls, message: str = "Success", output: str = "", **data: Any) -> CommandResult:
        return cls(success=True, message=message, output=output, data=data)

    @classmethod
    def fail(cls, message: str, error_code: ErrorCode = ErrorCode.UNKNOWN, **data: Any) -> CommandResult:
        return cls(success=False, message=message, data=data, error_code=error_code)

    def add_warning(self, warning: str) -> CommandResult:
        """Add a warning to the result. Returns self for chaining."""
        self.warnings.append(warning)
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.success else exit_code_for(self.error_code)


class BaseCommand(ABC):
    """Base class for all subcommands.

    Attributes:
        name: Subcommand name as typed on the command line.
        args: Parsed argparse namespace.
        settings: Effective settings (defaults, config file, flags).
    """

    name: str = "base"

    def __init__(self, args: argparse.Namespace, settings: Settings | None = None):
        self.args = args
        self.settings = settings or Settings()

    @abstractmethod
    def execute(self) -> CommandResult:
        """Do the command's work and return its result."""

    def validate(self) -> str | None:
        """Check argument values before execution.

        Returns:
            An error message, or None when the arguments are acceptable.
        """
        return None

    def load_domain(self) -> Domain:
        """Resolve the ``input`` argument as a domain file or shorthand."""
        return resolve_domain(self.args.input, polygonize_n=self.settings.polygonize_n)

    def run(self) -> CommandResult:
        """Run the command with validation and error handling.

        Library errors become failed results with their own error code;
        argument and file system errors are input errors.
        """
        try:
            problem = self.validate()
            if problem is not None:
                return CommandResult.fail(problem, error_code=ErrorCode.PARSE)
            return self.execute()
        except InextensibleError as e:
            return CommandResult.fail(str(e), error_code=e.error_code)
        except OSError as e:
            return CommandResult.fail(str(e), error_code=ErrorCode.IO).add_warning(f"{self.name}: I/O error")
        except ValueError as e:
            return CommandResult.fail(str(e), error_code=ErrorCode.PARSE)
        except Exception as e:
            return CommandResult.fail(str(e), error_code=ErrorCode.UNKNOWN).add_warning(
                f"{self.name}: unexpected error"
            )
