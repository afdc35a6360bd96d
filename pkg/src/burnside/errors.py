"""Exception hierarchy shared by all modules."""


class BurnsideError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BurnsideError):
    """Malformed or inconsistent input data (bad JSON, shape mismatch, ...)."""


class SizeError(BurnsideError):
    """An enumeration exceeded its configured bound."""


class PreconditionError(BurnsideError):
    """An operation was called on arguments violating its stated precondition."""


class InvariantError(BurnsideError):
    """A structural invariant of a value would be violated."""


class DomainError(BurnsideError):
    """The operation is not defined for this kind of input (e.g. nonabelian group)."""


class ProvenanceError(BurnsideError):
    """Field-label metadata needed for the computation is unresolved."""
