"""Error types raised by the market simulator."""

from pathlib import Path
from typing import Iterable, Optional


class MarketSimError(Exception):
    """Base class for all simulator errors."""


class InvalidInputError(MarketSimError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ZeroWelfareError(MarketSimError, ZeroDivisionError):
    """A welfare ratio has a vanishing denominator."""


class ConfigError(MarketSimError, ValueError):
    """An experiment configuration failed validation.

    Attributes:
        fields: Names of the offending configuration fields
    """

    def __init__(self, message: str, fields: Optional[Iterable[str]] = None):
        self.fields = tuple(fields or ())
        if self.fields:
            message = f"{message} (fields: {', '.join(self.fields)})"
        super().__init__(message)


class OutputError(MarketSimError, OSError):
    """A result table could not be written.

    Attributes:
        path: Target path of the failed write
    """

    def __init__(self, path: Path, reason: str):
        self.path = path
        super().__init__(f"Cannot write results to {path}: {reason}")
