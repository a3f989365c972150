"""Exception hierarchy shared by solvers, generators and the CLI."""


class TwoClubError(Exception):
    """Base class for all library errors."""


class PreconditionError(TwoClubError, ValueError):
    """An input violates an algorithm's structural precondition."""


class ModulatorError(PreconditionError):
    """A supplied modulator does not leave a graph of the required class."""

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class BudgetError(TwoClubError):
    """A parameter or instance size exceeds the configured budget."""


class InvalidWitnessError(TwoClubError, ValueError):
    """A source-instance witness fails its own check."""
