"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise
these rather than bare ValueError when the condition is user-facing.
"""


class D2draError(Exception):
    """Base class for all package errors."""


class ConfigError(D2draError):
    """Invalid configuration value, file, or inconsistent inputs."""


class ShapeMismatchError(D2draError):
    """Array arguments do not have the shapes the operation requires."""


class EmptyDatasetError(D2draError):
    """An operation needs more samples than were supplied."""


class InfeasibleLabelError(D2draError):
    """A supervised-loss label has no feasible allocation."""


class MissingLabelsError(D2draError):
    """Supervised tuning requested but labels do not cover the needed samples."""


class MissingDependencyError(D2draError):
    """A command/scheme needs an artifact (model, labels, stats) that was not given."""


class BudgetExceededError(D2draError):
    """The exhaustive search space exceeds the configured candidate cap."""
