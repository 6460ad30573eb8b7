"""laxkit: Lax operators, Hamiltonians and dynamical r-matrices of
Calogero-Moser and Ruijsenaars-Schneider systems, with numerical checks of
the algebraic identities they satisfy."""

__version__ = "0.1.0"

from .elliptic import EllipticParams, phi, phi_dx, sigma, wp, wp_prime, zeta_w
from .errors import (
    AccuracyError,
    ConfigError,
    DomainError,
    LaxkitError,
    NumericalError,
    PoleProximityError,
)
