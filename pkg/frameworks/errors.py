# frameworks/errors.py
"""
Exception hierarchy shared by the services and the CLI.

Services raise plain ``ValueError`` for precondition violations and the
``MCQError`` subclasses below for everything else. The resources layer maps
them to process exit codes with ``exit_code_for``.
"""
from __future__ import annotations

from typing import Any

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_GUARD = 4


class MCQError(Exception):
    """Base class for library errors. ``module`` tags the raising service."""

    exit_code = EXIT_IDENTITY

    def __init__(self, message: str, *, module: str = "mcq"):
        super().__init__(message)
        self.module = module

    def tagged(self) -> str:
        return f"[{self.module}] {self}"


class IdentityFailure(MCQError):
    """Two independent computations of the same quantity disagree."""

    exit_code = EXIT_IDENTITY

    def __init__(self, message: str, *, module: str = "mcq", witness: dict[str, Any] | None = None):
        super().__init__(message, module=module)
        self.witness = witness or {}


class InternalArithmeticError(MCQError, ArithmeticError):
    """Non-exact division, zero pivot or a result that should have been a polynomial."""

    exit_code = EXIT_IDENTITY


class InputValidationError(MCQError, ValueError):
    """A flats file failed its schema or one of the matroid axioms."""

    exit_code = EXIT_VALIDATION

    def __init__(
        self,
        message: str,
        *,
        module: str = "chowfy",
        axiom: str | None = None,
        witness: dict[str, Any] | None = None,
    ):
        super().__init__(message, module=module)
        self.axiom = axiom
        self.witness = witness or {}


class ResourceGuardError(MCQError):
    """A size guard was exceeded."""

    exit_code = EXIT_GUARD

    def __init__(self, *, guard: str, limit: int, requested: int, module: str = "mcq"):
        super().__init__(
            f"{guard} guard exceeded: requested {requested}, limit {limit} "
            f"(raise it with MCQ_MAX_N or --max-n-guard)",
            module=module,
        )
        self.guard = guard
        self.limit = limit
        self.requested = requested


def exit_code_for(exc: BaseException) -> int:
    """Exit code for an exception escaping a command."""
    if isinstance(exc, MCQError):
        return exc.exit_code
    if isinstance(exc, ValueError):
        return EXIT_USAGE
    return EXIT_IDENTITY
