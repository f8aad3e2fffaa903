"""Exception types shared across the package."""


class ProbconsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ProbconsError):
    """Malformed formula, argument, upset, or model text.

    Carries the 0-based character position of the offending token when
    available.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DepthError(ProbconsError):
    """Formula nesting exceeds the construction depth cap."""


class UpsetError(ProbconsError):
    """Value does not describe a legal upset of [0, 1]."""


class DomainError(ProbconsError):
    """Numeric argument outside its required domain (e.g. not in [0, 1])."""


class UnknownAtomError(ProbconsError):
    """A formula mentions an atom missing from the ambient atom list."""


class AtomCapError(ProbconsError):
    """A query needs more atoms than the configured cap allows."""


class EnumerationCapError(ProbconsError):
    """A combinatorial enumeration would exceed its size cap."""


class DimensionError(ProbconsError):
    """Linear-program data with inconsistent dimensions."""


class CertificateError(ProbconsError):
    """An internally produced certificate failed independent verification.

    This always indicates a bug in the engine, never bad user input.
    """


class PreconditionError(ProbconsError):
    """An operation's documented precondition does not hold."""
