"""
Particle spectra seen in a uniformly accelerated setting.

Two spectra are compared at matched parameters: the pair spectrum of
particles accelerated by the field, ``exp(-pi m / a)``, which equals
``sinh(r)**2``; and the thermal spectrum a uniformly accelerating
detector registers, ``1 / (exp(2 pi omega / a) - 1)``. The detector
spectrum is itself ``sinh(r_U)**2`` for ``tanh(r_U) = exp(-pi omega / a)``,
so both are two-mode squeezing spectra with different squeezing laws.
"""

import math
from dataclasses import dataclass

from accel_ent.bogoliubov.coefficients import Statistics, r_from_acceleration
from accel_ent.utilities import require_positive

ACCELERATED_FORM = "exp(-pi*m/a)"
UNRUH_FORM = "1/(exp(2*pi*omega/a)-1)"


@dataclass(frozen=True)
class SpectraResult:
    """
    Accelerated-particle and detector spectra at one parameter point.

    Parameters
    ----------
    m, a, omega : float
        Mass, acceleration and detector frequency.
    accelerated : float
        ``exp(-pi m / a)``.
    unruh : float
        ``1 / (exp(2 pi omega / a) - 1)``.
    r : float
        Scalar squeezing parameter of the accelerated mode.
    r_unruh : float
        Squeezing parameter reproducing the detector spectrum.
    """

    m: float
    a: float
    omega: float
    accelerated: float
    unruh: float
    r: float
    r_unruh: float

    accelerated_form: str = ACCELERATED_FORM
    unruh_form: str = UNRUH_FORM

    @property
    def identity_residual(self) -> float:
        """``sinh(r)**2 - exp(-pi m / a)``."""
        return math.sinh(self.r) ** 2 - self.accelerated


def unruh_parameter(omega: float, a: float) -> float:
    """
    Squeezing parameter of the detector spectrum.

    Returns ``r_U`` with ``tanh(r_U) = exp(-pi omega / a)``, so that
    ``sinh(r_U)**2 = 1 / (exp(2 pi omega / a) - 1)``.
    """
    omega = require_positive("omega", omega)
    a = require_positive("a", a)
    return math.atanh(math.exp(-math.pi * omega / a))


def spectra(m: float, a: float, omega: float) -> SpectraResult:
    """
    Evaluate both spectra for mass ``m``, acceleration ``a`` and frequency ``omega``.

    Parameters
    ----------
    m, a, omega : float
        All strictly positive.

    Returns
    -------
    SpectraResult
        Both spectra with their squeezing parameters.

    Raises
    ------
    ParameterDomainError
        If any input is not positive.

    Examples
    --------
    >>> result = spectra(math.log(2) / math.pi, 1.0, 1.0)
    >>> round(result.accelerated, 12)
    0.5
    """
    m = require_positive("m", m)
    a = require_positive("a", a)
    omega = require_positive("omega", omega)

    accelerated = math.exp(-math.pi * m / a)
    unruh = 1.0 / math.expm1(2.0 * math.pi * omega / a)
    return SpectraResult(
        m=m,
        a=a,
        omega=omega,
        accelerated=accelerated,
        unruh=unruh,
        r=r_from_acceleration(m, a, Statistics.SCALAR),
        r_unruh=unruh_parameter(omega, a),
    )


__all__ = [
    "ACCELERATED_FORM",
    "UNRUH_FORM",
    "SpectraResult",
    "spectra",
    "unruh_parameter",
]
