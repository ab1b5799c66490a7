"""Error types shared across the package."""


class InvalidArgument(ValueError):
    """Raised when an input violates an operation's precondition."""


class ResourceLimit(RuntimeError):
    """Raised when an input exceeds a configured size budget."""


class ParseError(ValueError):
    """Raised for malformed graph, bi-labeled graph or expression files."""
