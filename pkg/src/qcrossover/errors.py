"""Exception types raised by the cost model."""


class CrossoverError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CrossoverError, ValueError):
    """An argument lies outside the domain of a model function."""


class RangeError(CrossoverError, OverflowError):
    """A result does not fit in a double-precision float."""


class DistanceSelectionError(DomainError):
    """No admissible code distance satisfies the failure budget."""


class ScenarioError(CrossoverError, ValueError):
    """Base class for scenario parsing and validation problems."""


class ScenarioParseError(ScenarioError):
    """The scenario document is not well-formed."""


class ScenarioValidationError(ScenarioError):
    """A scenario field is missing, unknown or holds an invalid value."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
