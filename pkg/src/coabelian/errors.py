"""Exception hierarchy shared by all modules."""


class CoabelianError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(CoabelianError, ValueError):
    """Input data that does not match the expected shape or field."""


class ParseError(MalformedInputError):
    """A JSON document could not be turned into a domain object.

    ``location`` points at the offending part of the document, e.g.
    ``"edges[2]"``.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class InvalidArgumentError(CoabelianError, ValueError):
    """A well-formed argument that violates an operation's precondition."""


class ResourceLimitError(CoabelianError):
    """A configured size ceiling would be exceeded."""


class InternalInconsistencyError(CoabelianError):
    """Two computations that must agree did not; indicates a bug."""
