"""Exception types shared across the package."""


class ThompsonFError(Exception):
    """Base class for all errors raised by this package."""


class GrammarError(ThompsonFError):
    """Input text does not match the expected grammar."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class MalformedPairError(ThompsonFError):
    """A tree pair candidate whose trees have different leaf counts."""


class UnreducedPairError(ThompsonFError):
    """An operation that requires a reduced pair received an unreduced one."""


class CapacityError(ThompsonFError):
    """A ball enumeration exceeded its configured element capacity."""
