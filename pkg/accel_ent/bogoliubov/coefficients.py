"""
Bogoliubov coefficients for pair production in a uniform electric field.

A charged field of mass ``m`` in a constant field ``E`` mixes its in- and
out-mode operators with coefficients whose moduli depend only on the
dimensionless ratio ``mu2 = m**2 / (2 E)``. Scalars satisfy
``|alpha|**2 - |beta|**2 = 1`` and are parameterized by ``|beta| = sinh r``;
fermions satisfy ``|alpha|**2 + |beta|**2 = 1`` with ``beta = sin r_f``.

The coefficient moduli are evaluated from their Gamma-function forms using
the exact modulus identities

    |Gamma(1/2 + i y)|**2 = pi / cosh(pi y)
    |Gamma(i y)|**2       = pi / (y sinh(pi y))

in log space, so arbitrarily large ``mu2`` never overflows.
"""

import math
from dataclasses import dataclass
from enum import Enum

from accel_ent.errors import ParameterDomainError
from accel_ent.utilities import require_positive

# Bogoliubov phases do not affect any entanglement measure and are fixed to
# zero, which makes every downstream amplitude real.
PHASE_PHI = 0.0
PHASE_PHI1 = 0.0
PHASE_PHI2 = 0.0

R_MAX_SCALAR = math.asinh(1.0)
R_MAX_FERMION = math.pi / 2.0

_LOG_PI = math.log(math.pi)
_LOG_2 = math.log(2.0)


class Statistics(Enum):
    """Particle statistics of a charged field."""

    SCALAR = "scalar"
    FERMION = "fermion"

    @classmethod
    def parse(cls, value: "str | Statistics") -> "Statistics":
        """
        Parse statistics from its string value.

        Parameters
        ----------
        value : str | Statistics
            ``"scalar"`` / ``"boson"`` or ``"fermion"`` (case-insensitive).

        Returns
        -------
        Statistics
            The matching member.

        Raises
        ------
        ValueError
            If the value doesn't match any known statistics.
        """
        if isinstance(value, Statistics):
            return value
        key = value.strip().lower()
        if key == "boson":
            key = "scalar"
        for member in cls:
            if member.value == key:
                return member
        valid = ", ".join(f"'{m.value}'" for m in cls)
        raise ValueError(f"Unknown statistics: '{value}'. Valid: {valid}")


@dataclass(frozen=True)
class FieldConfig:
    """
    A charged particle in a uniform electric field (natural units).

    Parameters
    ----------
    m : float
        Particle mass, ``m > 0``.
    E : float
        Field strength, ``E > 0``.
    """

    m: float
    E: float

    def __post_init__(self) -> None:
        require_positive("m", self.m)
        require_positive("E", self.E)

    @property
    def a(self) -> float:
        """Classical acceleration ``E / m``."""
        return self.E / self.m

    @classmethod
    def from_acceleration(cls, m: float, a: float) -> "FieldConfig":
        """Build the configuration that accelerates mass ``m`` at ``a``."""
        m = require_positive("m", m)
        a = require_positive("a", a)
        return cls(m=m, E=m * a)


@dataclass(frozen=True)
class BogoliubovScalar:
    """Scalar coefficient moduli with ``beta_mod = sinh(r)``."""

    mu2: float
    alpha_mod: float
    beta_mod: float
    r: float

    @property
    def unitarity_residual(self) -> float:
        """``|alpha|**2 - |beta|**2 - 1``; zero up to round-off."""
        return self.alpha_mod**2 - self.beta_mod**2 - 1.0


@dataclass(frozen=True)
class BogoliubovFermion:
    """Fermion coefficient moduli with ``beta_mod = sin(r_f)``."""

    mu2: float
    alpha_mod: float
    beta_mod: float
    r_f: float

    @property
    def unitarity_residual(self) -> float:
        """``|alpha|**2 + |beta|**2 - 1``; zero up to round-off."""
        return self.alpha_mod**2 + self.beta_mod**2 - 1.0


def _log_cosh(z: float) -> float:
    z = abs(z)
    return z + math.log1p(math.exp(-2.0 * z)) - _LOG_2


def _log_sinh(z: float) -> float:
    # z > 0; expm1 keeps precision for small z
    return z + math.log(-math.expm1(-2.0 * z)) - _LOG_2


def log_abs_gamma_half_imag(y: float) -> float:
    """``log |Gamma(1/2 + i y)|`` from ``|Gamma(1/2 + i y)|**2 = pi / cosh(pi y)``."""
    return 0.5 * (_LOG_PI - _log_cosh(math.pi * y))


def log_abs_gamma_imag(y: float) -> float:
    """
    ``log |Gamma(i y)|`` from ``|Gamma(i y)|**2 = pi / (y sinh(pi y))``.

    Raises
    ------
    ParameterDomainError
        If ``y == 0`` (pole of Gamma).
    """
    if y == 0.0:
        raise ParameterDomainError("|Gamma(i y)| has a pole at y = 0")
    y = abs(y)
    return 0.5 * (_LOG_PI - math.log(y) - _log_sinh(math.pi * y))


def _check_mu2(mu2: float) -> float:
    mu2 = float(mu2)
    if math.isnan(mu2) or mu2 < 0.0:
        raise ParameterDomainError(f"mu2 must be non-negative, got {mu2!r}")
    return mu2


def mu_squared(cfg: FieldConfig) -> float:
    """
    Dimensionless pair-production exponent ``mu2 = m**2 / (2 E)``.

    Parameters
    ----------
    cfg : FieldConfig
        Mass and field strength.

    Returns
    -------
    float
        ``m**2 / (2 E)``.

    Examples
    --------
    >>> mu_squared(FieldConfig(m=2.0, E=1.0))
    2.0
    """
    return cfg.m**2 / (2.0 * cfg.E)


def mu_squared_from_acceleration(m: float, a: float) -> float:
    """``mu2`` for mass ``m`` at acceleration ``a``; equals ``m / (2 a)``."""
    m = require_positive("m", m)
    a = require_positive("a", a)
    return m / (2.0 * a)


def scalar_coefficients(mu2: float) -> BogoliubovScalar:
    """
    Scalar Bogoliubov coefficient moduli.

    Parameters
    ----------
    mu2 : float
        ``m**2 / (2 E)``; ``0`` is the infinite-acceleration boundary and
        ``math.inf`` the no-production limit.

    Returns
    -------
    BogoliubovScalar
        ``beta_mod = exp(-pi mu2)``, ``alpha_mod`` from the Gamma-modulus
        form ``sqrt(2 pi) exp(-pi mu2 / 2) / |Gamma(1/2 + i mu2)|`` and
        ``r = asinh(beta_mod)``.

    Raises
    ------
    ParameterDomainError
        If ``mu2 < 0``.
    """
    mu2 = _check_mu2(mu2)
    if math.isinf(mu2):
        return BogoliubovScalar(mu2=mu2, alpha_mod=1.0, beta_mod=0.0, r=0.0)

    beta_mod = math.exp(-math.pi * mu2)
    log_alpha = (
        0.5 * math.log(2.0 * math.pi)
        - 0.5 * math.pi * mu2
        - log_abs_gamma_half_imag(mu2)
    )
    return BogoliubovScalar(
        mu2=mu2,
        alpha_mod=math.exp(log_alpha),
        beta_mod=beta_mod,
        r=math.asinh(beta_mod),
    )


def fermion_coefficients(mu2: float) -> BogoliubovFermion:
    """
    Fermion Bogoliubov coefficient moduli.

    ``beta_mod = exp(-pi mu2)``; ``alpha_mod`` follows from
    ``sqrt(2 pi / mu2) exp(-pi mu2 / 2) / |Gamma(i mu2)|`` and
    ``r_f = arcsin(beta_mod)``. At ``mu2 = 0`` the limit ``alpha_mod = 0``,
    ``r_f = pi / 2`` is returned.

    Raises
    ------
    ParameterDomainError
        If ``mu2 < 0``.
    """
    mu2 = _check_mu2(mu2)
    if math.isinf(mu2):
        return BogoliubovFermion(mu2=mu2, alpha_mod=1.0, beta_mod=0.0, r_f=0.0)
    if mu2 == 0.0:
        return BogoliubovFermion(
            mu2=0.0, alpha_mod=0.0, beta_mod=1.0, r_f=R_MAX_FERMION
        )

    beta_mod = math.exp(-math.pi * mu2)
    log_alpha = (
        0.5 * math.log(2.0 * math.pi / mu2)
        - 0.5 * math.pi * mu2
        - log_abs_gamma_imag(mu2)
    )
    return BogoliubovFermion(
        mu2=mu2,
        alpha_mod=math.exp(log_alpha),
        beta_mod=beta_mod,
        r_f=math.asin(beta_mod),
    )


def r_from_acceleration(
    m: float, a: float, statistics: Statistics | str = Statistics.SCALAR
) -> float:
    """
    Squeezing parameter of a mode of mass ``m`` accelerated at ``a``.

    Parameters
    ----------
    m, a : float
        Mass and classical acceleration, both positive.
    statistics : Statistics | str
        ``scalar`` returns ``r = asinh(exp(-pi m / 2a))``; ``fermion``
        returns ``r_f = arcsin(exp(-pi m / 2a))``.

    Returns
    -------
    float
        ``r`` in ``[0, asinh(1)]`` or ``r_f`` in ``[0, pi/2]``.

    Examples
    --------
    >>> round(r_from_acceleration(1.0, 1.0, "scalar"), 6)
    0.206411
    """
    m = require_positive("m", m)
    a = require_positive("a", a)
    beta = math.exp(-math.pi * m / (2.0 * a))
    if Statistics.parse(statistics) is Statistics.FERMION:
        return math.asin(beta)
    return math.asinh(beta)


def pair_occupation(value: float, statistics: Statistics | str) -> float:
    """
    Mean number of produced particles per mode in the in-vacuum.

    ``sinh(r)**2`` for scalars and ``sin(r_f)**2`` for fermions; the latter
    never exceeds one.
    """
    if Statistics.parse(statistics) is Statistics.FERMION:
        return math.sin(value) ** 2
    return math.sinh(value) ** 2


__all__ = [
    "PHASE_PHI",
    "PHASE_PHI1",
    "PHASE_PHI2",
    "R_MAX_FERMION",
    "R_MAX_SCALAR",
    "BogoliubovFermion",
    "BogoliubovScalar",
    "FieldConfig",
    "Statistics",
    "fermion_coefficients",
    "log_abs_gamma_half_imag",
    "log_abs_gamma_imag",
    "mu_squared",
    "mu_squared_from_acceleration",
    "pair_occupation",
    "r_from_acceleration",
    "scalar_coefficients",
]
