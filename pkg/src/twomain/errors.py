"""Exception types shared across the package."""


class TwomainError(Exception):
    """Base class for all package-specific errors."""


class OrderTooSmall(TwomainError):
    """The graph (or requested construction) has too few vertices."""


class OrderTooLarge(TwomainError):
    """The graph exceeds a configured size cap."""


class NotUnicyclic(TwomainError):
    """The simple graph is not connected with exactly one cycle."""


class NotAdjacent(TwomainError):
    """Two vertices required to be adjacent are not."""


class BadParameters(TwomainError):
    """Family parameters outside their documented domain."""


class UnknownTag(TwomainError):
    """Family tag is not one of the recognized identifiers."""


class NoTypeMatches(TwomainError):
    """No pendant-neighborhood type matches; certificate or structure inconsistent."""


class NumericalFailure(TwomainError):
    """The floating-point eigensolver failed to converge."""


class GraphParseError(TwomainError):
    """A graph file is malformed. Carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.reason = message
