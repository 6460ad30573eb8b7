r"""Weierstrass elliptic functions for a lattice with half-periods (omega1, omega2).

The functions sigma, zeta and wp are evaluated through their nome expansions.
With tau = omega2/omega1, q = exp(i*pi*tau) (|q| < 1) and v = pi*z/(2*omega1):

    sigma(z) = (2 w1/pi) exp(eta1 z^2 / (2 w1)) sin v
               * prod_{n>=1} (1 - 2 q^{2n} cos 2v + q^{4n}) / (1 - q^{2n})^2

    zeta(z)  = eta1 z / w1 + (pi/(2 w1)) cot v
               + (2 pi/w1) sum_{n>=1} q^{2n}/(1-q^{2n}) sin 2nv

    wp(z)    = -eta1/w1 + (pi/(2 w1))^2
               * [ 1/sin^2 v - 8 sum_{n>=1} n q^{2n}/(1-q^{2n}) cos 2nv ]

where eta1 = zeta(omega1) = pi^2 E2 / (12 w1), E2 = 1 - 24 sum sigma_1(n) q^{2n}.
The terms decay geometrically once z is reduced to the fundamental cell, which
is always done first; sigma and zeta are restored through their quasi-periodic
multipliers, wp is periodic.  A slow truncated lattice sum/product lives in the
test tree as an independent oracle for these expansions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import AccuracyError, DomainError, PoleProximityError

# Series terms are added until |term| < SERIES_RTOL * |partial sum|.
SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 256

# Lattice-distance guard: closer than this to a lattice point is a hard error.
POLE_EPS = 1e-8

# exp() overflow guard for the quasi-periodic sigma multiplier.
_EXP_LIMIT = 700.0


def _e2_series(q2: complex) -> complex:
    """Eisenstein-type series E2 = 1 - 24 sum_{n>=1} n q2^n / (1 - q2^n)."""
    acc = 0.0 + 0.0j
    term_pow = 1.0 + 0.0j
    for n in range(1, SERIES_MAX_TERMS + 1):
        term_pow *= q2
        term = n * term_pow / (1.0 - term_pow)
        acc += term
        if abs(term) < SERIES_RTOL * max(1.0, abs(acc)):
            return 1.0 - 24.0 * acc
    raise AccuracyError("E2 series did not converge within the term cap")


@dataclass(frozen=True)
class EllipticParams:
    """Half-periods of the Weierstrass lattice plus derived constants.

    Invariants enforced at construction: omega1 != 0 and Im(omega2/omega1) > 0,
    so the nome satisfies |q| < 1.  eta1 = zeta(omega1) comes from the E2
    series; eta2 follows from the Legendre relation
    eta1*omega2 - eta2*omega1 = i*pi/2, and is cross-checked against an
    independent evaluation of zeta(omega2) through the swapped basis
    (omega2, -omega1).
    """

    omega1: complex
    omega2: complex
    tau: complex = field(init=False)
    nome: complex = field(init=False)
    eta1: complex = field(init=False)
    eta2: complex = field(init=False)

    def __post_init__(self):
        w1 = complex(self.omega1)
        w2 = complex(self.omega2)
        if w1 == 0:
            raise DomainError("omega1 must be nonzero")
        tau = w2 / w1
        if tau.imag <= 0:
            raise DomainError(f"Im(omega2/omega1) must be positive, got {tau.imag}")
        nome = cmath.exp(1j * cmath.pi * tau)
        eta1 = cmath.pi**2 * _e2_series(nome * nome) / (12.0 * w1)
        eta2 = (eta1 * w2 - 0.5j * cmath.pi) / w1
        object.__setattr__(self, "omega1", w1)
        object.__setattr__(self, "omega2", w2)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "nome", nome)
        object.__setattr__(self, "eta1", eta1)
        object.__setattr__(self, "eta2", eta2)
        # Independent eta2: the lattice is unchanged under the basis swap
        # (omega1, omega2) -> (omega2, -omega1), whose "first" half-period is
        # omega2.  Relative 1e-12 agreement is required.
        tau_swap = -w1 / w2
        nome_swap = cmath.exp(1j * cmath.pi * tau_swap)
        eta2_indep = cmath.pi**2 * _e2_series(nome_swap * nome_swap) / (12.0 * w2)
        if abs(eta2 - eta2_indep) > 1e-12 * max(1.0, abs(eta2)):
            raise AccuracyError(
                "Legendre consistency check failed: eta2 mismatch "
                f"{abs(eta2 - eta2_indep):.3e}"
            )

    def reduce(self, z: complex) -> tuple[complex, int, int]:
        """Return (z0, m, n) with z = z0 + 2*m*omega1 + 2*n*omega2 and z0 in
        the centered fundamental cell."""
        z = complex(z)
        w1, w2 = self.omega1, self.omega2
        # Solve z = a*(2 w1) + b*(2 w2) over the reals.
        det = w1.real * w2.imag - w1.imag * w2.real
        a = 0.5 * (z.real * w2.imag - z.imag * w2.real) / det
        b = 0.5 * (w1.real * z.imag - w1.imag * z.real) / det
        m = round(a)
        n = round(b)
        return z - 2 * m * w1 - 2 * n * w2, m, n

    def lattice_distance(self, z: complex) -> float:
        """Distance from z to the nearest lattice point (basis-rounding metric)."""
        z0, _, _ = self.reduce(z)
        cands = [z0]
        for dm in (-1, 0, 1):
            for dn in (-1, 0, 1):
                cands.append(z0 - 2 * dm * self.omega1 - 2 * dn * self.omega2)
        return min(abs(c) for c in cands)


def _check_off_lattice(z: complex, params: EllipticParams, what: str) -> None:
    d = params.lattice_distance(z)
    if d < POLE_EPS:
        raise PoleProximityError(
            f"{what}: argument {z} within {d:.2e} of a lattice point"
        )


def sigma(z: complex, params: EllipticParams) -> complex:
    """Weierstrass sigma: odd entire function with sigma(z) ~ z near 0."""
    z = complex(z)
    if z == 0:
        return 0.0 + 0.0j
    z0, m, n = params.reduce(z)
    w1, q, eta1, eta2 = params.omega1, params.nome, params.eta1, params.eta2
    v = cmath.pi * z0 / (2.0 * w1)
    q2 = q * q
    e_plus = cmath.exp(2j * v)
    e_minus = 1.0 / e_plus
    prod = 1.0 + 0.0j
    qp = 1.0 + 0.0j
    for k in range(1, SERIES_MAX_TERMS + 1):
        qp *= q2
        num = (1.0 - qp * e_plus) * (1.0 - qp * e_minus)
        den = (1.0 - qp) ** 2
        factor = num / den
        prod *= factor
        if abs(factor - 1.0) < SERIES_RTOL:
            break
    else:
        raise AccuracyError("sigma product did not converge within the term cap")
    s0 = (2.0 * w1 / cmath.pi) * cmath.exp(eta1 * z0 * z0 / (2.0 * w1)) * cmath.sin(v) * prod
    if m == 0 and n == 0:
        return s0
    # sigma(z0 + 2m w1 + 2n w2) =
    #   (-1)^(m+n+mn) sigma(z0) exp((2m eta1 + 2n eta2)(z0 + m w1 + n w2))
    eta_shift = 2 * m * eta1 + 2 * n * eta2
    expo = eta_shift * (z0 + m * w1 + n * w2)
    if abs(expo.real) > _EXP_LIMIT:
        raise DomainError(
            f"sigma: quasi-periodic growth factor exp({expo.real:.1f}) overflows"
        )
    sign = -1.0 if (m + n + m * n) % 2 else 1.0
    return sign * s0 * cmath.exp(expo)


def zeta_w(z: complex, params: EllipticParams) -> complex:
    """Weierstrass zeta = sigma'/sigma, with a simple pole 1/z at each lattice point."""
    z = complex(z)
    _check_off_lattice(z, params, "zeta_w")
    z0, m, n = params.reduce(z)
    w1, q = params.omega1, params.nome
    v = cmath.pi * z0 / (2.0 * w1)
    q2 = q * q
    acc = 0.0 + 0.0j
    qp = 1.0 + 0.0j
    for k in range(1, SERIES_MAX_TERMS + 1):
        qp *= q2
        term = qp / (1.0 - qp) * cmath.sin(2 * k * v)
        acc += term
        if abs(term) < SERIES_RTOL * max(1.0, abs(acc)):
            break
    else:
        raise AccuracyError("zeta series did not converge within the term cap")
    val = (
        params.eta1 * z0 / w1
        + cmath.pi / (2.0 * w1) / cmath.tan(v)
        + (2.0 * cmath.pi / w1) * acc
    )
    return val + 2 * m * params.eta1 + 2 * n * params.eta2


def wp(z: complex, params: EllipticParams) -> complex:
    """Weierstrass wp = -zeta', even and periodic, double pole 1/z^2 at lattice points."""
    z = complex(z)
    _check_off_lattice(z, params, "wp")
    z0, _, _ = params.reduce(z)
    w1, q = params.omega1, params.nome
    v = cmath.pi * z0 / (2.0 * w1)
    q2 = q * q
    acc = 0.0 + 0.0j
    qp = 1.0 + 0.0j
    for k in range(1, SERIES_MAX_TERMS + 1):
        qp *= q2
        term = k * qp / (1.0 - qp) * cmath.cos(2 * k * v)
        acc += term
        if abs(term) < SERIES_RTOL * max(1.0, abs(acc)):
            break
    else:
        raise AccuracyError("wp series did not converge within the term cap")
    c = cmath.pi / (2.0 * w1)
    sv = cmath.sin(v)
    return -params.eta1 / w1 + c * c * (1.0 / (sv * sv) - 8.0 * acc)


def wp_prime(z: complex, params: EllipticParams) -> complex:
    """d(wp)/dz from the differentiated nome series."""
    z = complex(z)
    _check_off_lattice(z, params, "wp_prime")
    z0, _, _ = params.reduce(z)
    w1, q = params.omega1, params.nome
    v = cmath.pi * z0 / (2.0 * w1)
    q2 = q * q
    acc = 0.0 + 0.0j
    qp = 1.0 + 0.0j
    for k in range(1, SERIES_MAX_TERMS + 1):
        qp *= q2
        term = k * k * qp / (1.0 - qp) * cmath.sin(2 * k * v)
        acc += term
        if abs(term) < SERIES_RTOL * max(1.0, abs(acc)):
            break
    else:
        raise AccuracyError("wp' series did not converge within the term cap")
    c = cmath.pi / (2.0 * w1)
    sv = cmath.sin(v)
    return c**3 * (-2.0 * cmath.cos(v) / (sv * sv * sv) + 16.0 * acc)


def phi(x: complex, lam: complex, params: EllipticParams) -> complex:
    """Phi(x, lambda) = sigma(x + lambda) / (sigma(x) sigma(lambda))."""
    x = complex(x)
    lam = complex(lam)
    for name, arg in (("x", x), ("lambda", lam), ("x+lambda", x + lam)):
        _check_off_lattice(arg, params, f"phi argument {name}")
    return sigma(x + lam, params) / (sigma(x, params) * sigma(lam, params))


def phi_dx(x: complex, lam: complex, params: EllipticParams) -> complex:
    """d/dx of Phi, via the log-derivative Phi * (zeta(x+lambda) - zeta(x))."""
    return phi(x, lam, params) * (zeta_w(x + lam, params) - zeta_w(x, params))


def phi_dlam(x: complex, lam: complex, params: EllipticParams) -> complex:
    """d/dlambda of Phi; Phi is symmetric in its two arguments."""
    return phi(x, lam, params) * (zeta_w(x + lam, params) - zeta_w(lam, params))
