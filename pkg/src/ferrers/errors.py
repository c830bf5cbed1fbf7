"""Exception hierarchy shared by the library and the command line."""


class FerrersError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 2


class RejectedInput(FerrersError, ValueError):
    """The caller supplied an object that is not valid for the diagram."""

    exit_code = 1


class InvariantViolation(FerrersError, AssertionError):
    """An internal correctness check failed. This is a bug, not a user error."""

    exit_code = 2


class ResourceLimit(FerrersError, RuntimeError):
    """An exhaustive enumeration exceeded its configured cap."""

    exit_code = 3
