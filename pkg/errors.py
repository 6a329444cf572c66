from typing import Optional


class SolenoidToolError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class DomainError(SolenoidToolError, ValueError):
    """The input is well formed but violates a mathematical precondition."""


class CountablyInfiniteError(DomainError):
    pass


class ResourceLimitError(SolenoidToolError, RuntimeError):
    """A configured cap (crossings, summit orbit) was exceeded."""

    def __init__(self, limit: str, size: int, cap: int):
        self.limit = limit
        self.size = size
        self.cap = cap
        super().__init__(f"{limit} limit exceeded: {size} > {cap}")


class ParseError(SolenoidToolError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
