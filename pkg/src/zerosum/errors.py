class DomainError(ValueError):
    """An input lies outside the domain of the operation."""


class ParseError(DomainError):
    """Malformed sequence text."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message if token is None else f"{message}: {token!r}")
        self.token = token


class InvariantViolation(RuntimeError):
    """A result guaranteed by a theorem could not be produced.

    Raised only when valid hypotheses fail to yield the promised object, which
    means the implementation (not the input) is wrong.
    """
