"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for all algebra-level errors."""


class PresentationError(AlgebraError):
    """Bad presentation data, unknown generators, or mixed presentations."""


class NonTerminationError(AlgebraError):
    """The rewrite step budget was exhausted; the rule system is suspect."""


class DegreeBudgetError(AlgebraError):
    """A degree-bounded computation needs more degree than it was given."""


class UnsupportedFieldError(AlgebraError):
    """A computation left the rational field (e.g. an irrational eigenvalue)."""


class ParseError(AlgebraError):
    """Expression or definition-file syntax error, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
