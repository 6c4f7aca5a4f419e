"""Command-line front end: ``inextensible <command> <domain> [options]``."""

from .base import BaseCommand, CommandResult, exit_code_for

__all__ = ["BaseCommand", "CommandResult", "exit_code_for"]
