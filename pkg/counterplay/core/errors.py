"""Exceptions raised by counterplay.

Every error derives from `CounterplayError` so commands can catch the whole
family in one place and map it to an exit code (see `exit_code_for`).
"""


class CounterplayError(Exception):
    """Base class for all counterplay errors."""

    exit_code = 1


class ConfigurationError(CounterplayError):
    """Raised when a run configuration or model configuration is invalid."""


class ValidationError(CounterplayError, ValueError):
    """Raised when a domain value is out of range (outcome, strength, rating...)."""


class RecordParseError(ValidationError):
    """Raised when a match or fold file row cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}"
        if line is not None:
            where = f"{where}:{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class PlayerLookupError(CounterplayError, LookupError):
    """Raised when a PlayerId is outside the model's player range."""


class SchemaVersionError(CounterplayError):
    """Raised when a serialized state uses an unknown schema version or model kind."""


class UndefinedResultError(CounterplayError):
    """Raised when a metric has nothing to measure (e.g. zero comparable pairs)."""


class DatasetIOError(CounterplayError, OSError):
    """Raised when a file cannot be read or written. The message names the path."""

    exit_code = 2


def exit_code_for(exc: BaseException) -> int:
    """Return the process exit code for an exception raised by a command."""
    if isinstance(exc, CounterplayError):
        return exc.exit_code
    if isinstance(exc, OSError):
        return 2
    return 1
