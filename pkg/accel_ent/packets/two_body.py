"""
Two-body entangled Gaussian wavefunctions and their Schmidt numbers.

The two-body state is a (anti)symmetrized pair of product packets

    Psi(x, y, t) = N [A1(x) B1(y) + s A2(x) B2(y)]

with ``A1 = psi(x; v1, a1)``, ``B1 = psi(y; v2, a2)``, ``A2 = psi(x; v2, a1)``
and ``B2 = psi(y; v1, a2)``. The coordinate ``x`` always carries ``a1`` and
``y`` carries ``a2``; only the velocities are exchanged between the terms.

Purity of the reduced state is assembled from the 2x2 overlap matrices
``<A_i|A_j>`` and ``<B_i|B_j>``, each computed by adaptive quadrature, so
the closed-form Schmidt number is checked against an independent number.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate

from accel_ent.errors import DegenerateStateError, QuadratureToleranceError
from accel_ent.packets.wave_packet import (
    PacketParams,
    accelerated_packet_amplitude,
    packet_center,
    packet_width,
)
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings
from accel_ent.utilities import require_positive

# Integration half-width in units of the packet standard deviation.
SIGMA_SPAN = 8.0

_DEGENERATE_NORM = 1e-14


class Sign(Enum):
    """Relative sign between the two product terms."""

    PLUS = "+"
    MINUS = "-"

    @property
    def factor(self) -> float:
        """``+1.0`` or ``-1.0``."""
        return 1.0 if self is Sign.PLUS else -1.0

    @classmethod
    def parse(cls, value: "str | Sign") -> "Sign":
        """
        Parse a sign from ``"+"``/``"plus"`` or ``"-"``/``"minus"``.

        Raises
        ------
        ValueError
            If the value doesn't match either sign.
        """
        if isinstance(value, Sign):
            return value
        aliases = {"+": cls.PLUS, "plus": cls.PLUS, "-": cls.MINUS, "minus": cls.MINUS}
        try:
            return aliases[value.strip().lower()]
        except KeyError:
            raise ValueError(
                f"Unknown sign: '{value}'. Valid: '+', '-', 'plus', 'minus'"
            ) from None


@dataclass(frozen=True)
class TwoBodyParams:
    """
    Parameters of the two-body accelerating wavefunction.

    Both particles share mass, squared width and initial center.

    Parameters
    ----------
    m, b : float
        Mass and squared width, both positive.
    x0 : float
        Shared initial center.
    v1, v2 : float
        Velocities exchanged between the two product terms.
    a1, a2 : float
        Accelerations attached to coordinates ``x`` and ``y``.
    sign : Sign
        Relative sign of the second term.
    """

    m: float = 1.0
    b: float = 1.0
    x0: float = 0.0
    v1: float = 0.0
    v2: float = 1.0
    a1: float = 0.0
    a2: float = 0.0
    sign: Sign = Sign.PLUS

    def __post_init__(self) -> None:
        require_positive("m", self.m)
        require_positive("b", self.b)
        object.__setattr__(self, "sign", Sign.parse(self.sign))

    @property
    def is_degenerate(self) -> bool:
        """True when the antisymmetric combination vanishes identically."""
        return self.sign is Sign.MINUS and self.v1 == self.v2

    @property
    def coefficients(self) -> tuple[float, float]:
        """Expansion coefficients ``(c1, c2)`` of the two product terms."""
        return (1.0, self.sign.factor)

    @property
    def v_tilde(self) -> float:
        """Dimensionless relative velocity ``|v2 - v1| m sqrt(b)``."""
        return abs(self.v2 - self.v1) * self.m * math.sqrt(self.b)

    def x_packets(self) -> tuple[PacketParams, PacketParams]:
        """Single-particle factors ``(A1, A2)`` in coordinate ``x``."""
        base = PacketParams(m=self.m, b=self.b, x0=self.x0)
        return base.with_motion(self.v1, self.a1), base.with_motion(self.v2, self.a1)

    def y_packets(self) -> tuple[PacketParams, PacketParams]:
        """Single-particle factors ``(B1, B2)`` in coordinate ``y``."""
        base = PacketParams(m=self.m, b=self.b, x0=self.x0)
        return base.with_motion(self.v2, self.a2), base.with_motion(self.v1, self.a2)


@dataclass(frozen=True)
class SchmidtResult:
    """Schmidt number ``K`` and purity ``P`` with ``K * P = 1``."""

    K: float
    P: float

    @classmethod
    def from_purity(cls, purity: float) -> "SchmidtResult":
        """Build the result from a purity value."""
        return cls(K=1.0 / purity, P=purity)


def _span(packets: tuple[PacketParams, ...], t: float) -> tuple[float, float]:
    lows, highs = [], []
    for p in packets:
        center = float(packet_center(t, p))
        half = SIGMA_SPAN * float(packet_width(t, p.m, p.b))
        lows.append(center - half)
        highs.append(center + half)
    return min(lows), max(highs)


def overlap(
    p_i: PacketParams,
    p_j: PacketParams,
    t: float,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> complex:
    """
    Overlap ``<psi_i|psi_j>`` of two packets at time ``t``.

    The real and imaginary parts are integrated separately with
    ``scipy.integrate.quad`` over the union of ``[c - 8 sigma, c + 8 sigma]``
    around both centers.

    Raises
    ------
    QuadratureToleranceError
        If either part reports an error estimate above
        ``settings.quad_tolerance``.
    """
    value, _ = _overlap_with_error(p_i, p_j, t, settings)
    return value


def _overlap_with_error(
    p_i: PacketParams,
    p_j: PacketParams,
    t: float,
    settings: NumericSettings,
) -> tuple[complex, float]:
    lower, upper = _span((p_i, p_j), t)
    breakpoints = sorted(
        {float(packet_center(t, p_i)), float(packet_center(t, p_j))}
    )

    def integrand(x: float) -> complex:
        return complex(
            np.conj(accelerated_packet_amplitude(x, t, p_i))
            * accelerated_packet_amplitude(x, t, p_j)
        )

    parts = []
    worst = 0.0
    for part in (lambda x: integrand(x).real, lambda x: integrand(x).imag):
        value, error = integrate.quad(
            part,
            lower,
            upper,
            points=breakpoints,
            epsabs=settings.quad_epsabs,
            epsrel=settings.quad_epsrel,
            limit=settings.quad_limit,
        )
        if error > settings.quad_tolerance:
            raise QuadratureToleranceError(
                f"interval [{lower:.6g}, {upper:.6g}], error estimate {error:.3e}",
                f"tolerance {settings.quad_tolerance:.1e}",
            )
        parts.append(value)
        worst = max(worst, error)
    return complex(parts[0], parts[1]), worst


def _gram(
    packets: tuple[PacketParams, PacketParams], t: float, settings: NumericSettings
) -> tuple[NDArray[np.complex128], float]:
    gram = np.empty((2, 2), dtype=np.complex128)
    worst = 0.0
    for i in range(2):
        value, error = _overlap_with_error(packets[i], packets[i], t, settings)
        gram[i, i] = value.real
        worst = max(worst, error)
    cross, error = _overlap_with_error(packets[0], packets[1], t, settings)
    gram[0, 1] = cross
    gram[1, 0] = np.conj(gram[0, 1])
    return gram, max(worst, error)


def _bounded_purity(value: float, tolerance: float) -> float:
    """Clip ``value`` to 1 when the overshoot is within ``tolerance``."""
    if value - 1.0 > tolerance:
        raise QuadratureToleranceError(
            f"purity {value!r} exceeds 1",
            f"allowed overshoot {tolerance:.3e}",
        )
    return min(value, 1.0)


@dataclass(frozen=True)
class _Overlaps:
    a: NDArray[np.complex128]
    b: NDArray[np.complex128]
    c: NDArray[np.float64]
    error: float = 0.0

    @property
    def inverse_norm_sq(self) -> float:
        # N**-2 = sum_ij c_i* c_j <A_i|A_j> <B_i|B_j>
        total = np.einsum("i,j,ij,ij->", np.conj(self.c), self.c, self.a, self.b)
        return float(total.real)

    @property
    def norm_constant(self) -> float:
        return 1.0 / math.sqrt(self.inverse_norm_sq)

    @property
    def purity_tolerance(self) -> float:
        # first order in the worst overlap error; four overlaps per purity term
        norm_sq = self.norm_constant**2
        bound = 64.0 * self.error * norm_sq**2 + 16.0 * self.error * norm_sq
        return bound + 16.0 * float(np.finfo(np.float64).eps)


def _overlaps(p: TwoBodyParams, t: float, settings: NumericSettings) -> _Overlaps:
    if p.is_degenerate:
        raise DegenerateStateError(
            "sign '-' with v1 == v2 gives the zero vector",
            f"v1 = v2 = {p.v1!r}",
        )
    a, error_a = _gram(p.x_packets(), t, settings)
    b, error_b = _gram(p.y_packets(), t, settings)
    overlaps = _Overlaps(
        a=a,
        b=b,
        c=np.asarray(p.coefficients, dtype=np.float64),
        error=max(error_a, error_b),
    )
    inverse_sq = overlaps.inverse_norm_sq
    if inverse_sq < _DEGENERATE_NORM:
        raise DegenerateStateError(f"norm squared {inverse_sq:.3e} before scaling")
    return overlaps


def two_body_amplitude(
    x: ArrayLike,
    y: ArrayLike,
    t: float,
    p: TwoBodyParams,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> NDArray[np.complex128]:
    """
    Normalized two-body amplitude ``Psi(x, y, t)``.

    Parameters
    ----------
    x, y : ArrayLike
        Coordinates of the two particles; broadcast together.
    t : float
        Time.
    p : TwoBodyParams
        State parameters.
    settings : NumericSettings
        Quadrature settings for the normalization overlaps.

    Returns
    -------
    NDArray[np.complex128]
        ``Psi`` at the requested points.

    Raises
    ------
    DegenerateStateError
        For ``sign = '-'`` with ``v1 == v2``.
    """
    norm = _overlaps(p, t, settings).norm_constant
    return _unnormalized(x, y, t, p) * norm


def _unnormalized(
    x: ArrayLike, y: ArrayLike, t: float, p: TwoBodyParams
) -> NDArray[np.complex128]:
    a1, a2 = p.x_packets()
    b1, b2 = p.y_packets()
    c1, c2 = p.coefficients
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return (
        c1
        * accelerated_packet_amplitude(x, t, a1)
        * accelerated_packet_amplitude(y, t, b1)
        + c2
        * accelerated_packet_amplitude(x, t, a2)
        * accelerated_packet_amplitude(y, t, b2)
    )[()]


def purity(
    p: TwoBodyParams, t: float, settings: NumericSettings = DEFAULT_SETTINGS
) -> float:
    """
    Purity ``Tr rho_x**2`` of the one-particle reduced state.

    The four-fold purity integral is expanded into the 16 products

        N**4 sum_ijkl c_i c_j* c_k c_l* <B_j|B_i> <B_l|B_k> <A_j|A_k> <A_l|A_i>

    of one-dimensional overlaps.

    Returns
    -------
    float
        Purity in ``(0, 1]``.

    Raises
    ------
    DegenerateStateError
        For a zero-norm state.
    QuadratureToleranceError
        If an overlap integral misses its tolerance.

    Examples
    --------
    >>> round(purity(TwoBodyParams(v1=0.0, v2=1.0, sign="-"), 0.0), 6)
    0.5
    """
    ov = _overlaps(p, t, settings)
    c = ov.c.astype(np.complex128)
    cc = np.conj(c)
    total = np.einsum(
        "i,j,k,l,ji,lk,jk,li->", c, cc, c, cc, ov.b, ov.b, ov.a, ov.a
    )
    value = float(total.real) * ov.norm_constant**4
    return _bounded_purity(value, ov.purity_tolerance)


def schmidt_result(
    p: TwoBodyParams, t: float = 0.0, settings: NumericSettings = DEFAULT_SETTINGS
) -> SchmidtResult:
    """Schmidt number from the numerically assembled purity."""
    return SchmidtResult.from_purity(purity(p, t, settings))


def schmidt_coefficients(
    p: TwoBodyParams, t: float = 0.0, settings: NumericSettings = DEFAULT_SETTINGS
) -> tuple[float, float]:
    """
    The two Schmidt weights ``lambda1 >= lambda2`` of the two-body state.

    The reduced state has rank at most two, so its weights follow from
    ``lambda1 + lambda2 = 1`` and ``lambda1**2 + lambda2**2 = P``.
    """
    value = purity(p, t, settings)
    spread = math.sqrt(max(2.0 * value - 1.0, 0.0))
    return 0.5 * (1.0 + spread), 0.5 * (1.0 - spread)


def schmidt_number_closed(v_tilde: float, sign: Sign | str) -> float:
    """
    Closed-form Schmidt number in the frame ``v1 = 0``, ``v2 = v``.

    Parameters
    ----------
    v_tilde : float
        ``v m sqrt(b) >= 0``.
    sign : Sign | str
        ``+`` gives ``K = 2 / (1 + 4 f / (1 + f)**2)`` with
        ``f = exp(-v_tilde**2)``; ``-`` always gives ``K = 2``.

    Examples
    --------
    >>> round(schmidt_number_closed(1.0, "+"), 6)
    1.11954
    """
    if Sign.parse(sign) is Sign.MINUS:
        return 2.0
    f = math.exp(-(v_tilde**2))
    return 2.0 / (1.0 + 4.0 * f / (1.0 + f) ** 2)


def two_body_grid(
    p: TwoBodyParams,
    t: float,
    xs: ArrayLike,
    ys: ArrayLike,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> NDArray[np.float64]:
    """``|Psi|`` on the tensor grid ``xs x ys``; shape ``(len(xs), len(ys))``."""
    norm = _overlaps(p, t, settings).norm_constant
    gx, gy = np.meshgrid(np.asarray(xs), np.asarray(ys), indexing="ij")
    return np.abs(_unnormalized(gx, gy, t, p)) * norm


def norm_squared(
    p: TwoBodyParams,
    t: float,
    nodes: int = 256,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> float:
    """
    ``Integral |Psi|**2 dx dy`` by tensor-product Gauss-Legendre quadrature.

    Independent of the overlap expansion used to normalize ``Psi``.
    """
    x_lo, x_hi = _span(p.x_packets(), t)
    y_lo, y_hi = _span(p.y_packets(), t)
    u, w = np.polynomial.legendre.leggauss(nodes)
    xs = 0.5 * (x_hi - x_lo) * u + 0.5 * (x_hi + x_lo)
    ys = 0.5 * (y_hi - y_lo) * u + 0.5 * (y_hi + y_lo)
    wx = 0.5 * (x_hi - x_lo) * w
    wy = 0.5 * (y_hi - y_lo) * w
    density = two_body_grid(p, t, xs, ys, settings) ** 2
    return float(wx @ density @ wy)


__all__ = [
    "SIGMA_SPAN",
    "SchmidtResult",
    "Sign",
    "TwoBodyParams",
    "norm_squared",
    "overlap",
    "purity",
    "schmidt_coefficients",
    "schmidt_number_closed",
    "schmidt_result",
    "two_body_amplitude",
    "two_body_grid",
]
