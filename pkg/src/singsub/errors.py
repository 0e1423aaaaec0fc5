"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(ValueError):
    """A mesh, problem, or sweep configuration is inconsistent or infeasible."""


class CapabilityError(LookupError):
    """A check was requested that needs data (such as a derivative evaluator)
    which was not supplied."""


class NumericalError(ArithmeticError):
    """A numerical routine reached a degenerate state, e.g. a zero pivot."""
