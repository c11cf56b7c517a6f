"""Exception hierarchy shared by every module."""


class VNumError(Exception):
    """Base class for all errors raised by the package."""


class StructuralError(VNumError, ValueError):
    """Objects from different ambient rings were combined."""


class DomainError(VNumError, ValueError):
    """An input lies outside the domain of the requested invariant."""


class ResourceError(VNumError, RuntimeError):
    """A configured size cap would be exceeded."""


class ParseError(VNumError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
