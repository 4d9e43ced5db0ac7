"""Exception types shared across the package."""


class GroupEqError(Exception):
    """Base class for all errors raised by groupeq."""


class GroupParseError(GroupEqError):
    """The group file is malformed."""


class InvalidGroupError(GroupEqError):
    """The multiplication table violates a group axiom."""


class GeneratingSetError(GroupEqError):
    """The generating set is asymmetric or does not generate the group."""


class EquationSyntaxError(GroupEqError):
    """An equation string or token sequence is not well formed."""


class CapacityError(GroupEqError):
    """A configured size cap would be exceeded."""


class StateLimitError(GroupEqError):
    """Automaton construction hit the state budget."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class SearchBudgetError(GroupEqError):
    """A search would enumerate more candidates than the configured cap."""


class RationalDomainError(GroupEqError):
    """Invalid input to the rational-set machinery."""
