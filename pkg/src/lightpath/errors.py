"""Exception types shared across the package."""


class LightpathError(Exception):
    """Base class for every error raised by this package."""


class ResourceLimitError(LightpathError, RuntimeError):
    """A configured table size, event budget or search guard was exceeded."""


class GraphFormatError(LightpathError, ValueError):
    """Malformed or invalid edge-list input.

    ``lineno`` is the 1-based line of the offending text, or ``None`` when the
    problem is not tied to one line (e.g. an empty file).
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        self.reason = message
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ConfigurationError(LightpathError, ValueError):
    """A device configuration that cannot be simulated (e.g. a zero-delay cycle)."""
