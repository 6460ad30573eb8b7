"""Exception hierarchy shared across the package."""


class LaxkitError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LaxkitError):
    """Argument outside the mathematical domain (pole, singular configuration)."""


class PoleProximityError(DomainError):
    """Argument closer to a lattice point / singular hyperplane than the guard allows."""


class AccuracyError(LaxkitError):
    """A series or iteration failed to reach the requested accuracy."""


class NumericalError(LaxkitError):
    """A dense solver or integrator failed (non-convergence, step underflow)."""


class ConfigError(LaxkitError):
    """Invalid run configuration (unknown model, bad check name, empty seeds)."""
