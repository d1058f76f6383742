"""Exception hierarchy shared by the library and the CLI."""


class TrigonalError(Exception):
    """Base class for all library errors."""


class MalformedInput(TrigonalError, ValueError):
    """Input data has the wrong shape (lengths, types, unparsable rationals)."""


class DomainError(TrigonalError):
    """A mathematical precondition does not hold for otherwise well-formed input."""


class PreconditionError(DomainError):
    pass


class NotRegularError(DomainError):
    pass


class InternalError(TrigonalError, AssertionError):
    """A postcondition the algorithms guarantee was violated."""
