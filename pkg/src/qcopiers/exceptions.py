"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InfeasibleError(ArithmeticError):
    """No admissible copier exists for the requested parameters."""


class ConsistencyError(RuntimeError):
    """Internal cross-checks disagree; indicates a bug rather than bad input."""
