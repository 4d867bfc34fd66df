"""Exception hierarchy for radlog."""

from typing import Optional


class RadlogError(Exception):
    """Base class for every error raised by radlog."""


class ParameterError(RadlogError, ValueError):
    """Invalid problem parameters (dimension mismatch, k < 1, p <= 0, length mismatch)."""


class DomainError(RadlogError, ValueError):
    """Evaluation requested outside the open positive orthant."""


class CapabilityError(RadlogError):
    """Nested numeric differentiation requested above the configured order cap."""


class SpecFileError(RadlogError):
    """A spec file could not be read, parsed, or validated."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ) -> None:
        self.path = path
        self.line = line
        self.field = field
        super().__init__(message)

    def __str__(self) -> str:
        where = self.path or "<spec>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        prefix = f"{where}: "
        if self.field:
            prefix += f"{self.field}: "
        return prefix + self.args[0]
