"""
Exceptions raised by the chess Ferrers toolkit.
"""


class ChessFerrersError(Exception):
    """Base class for every error raised by this package."""


class InvalidPartitionError(ChessFerrersError, ValueError):
    """Raised when a sequence of integers is not a partition."""


class InvalidPolynomialError(ChessFerrersError, ValueError):
    """Raised when a coefficient sequence is not an admissible polynomial."""


class NegativeCoefficientError(InvalidPolynomialError):
    """Raised when the star map would produce a negative coefficient."""


class NotRealizableError(ChessFerrersError, ValueError):
    """Raised when no partition has the requested chess count."""


class UnknownCheckError(ChessFerrersError, ValueError):
    """Raised when a verification check name is not registered."""


class InvariantViolation(ChessFerrersError, RuntimeError):
    """Raised when a computed value breaks one of its stated invariants."""


def require(condition: bool, message: str) -> None:
    """
    Raise InvariantViolation unless condition holds.

    Args:
        condition (bool): The invariant to check
        message (str): Diagnostic used when the invariant fails
    """
    if not condition:
        raise InvariantViolation(message)
