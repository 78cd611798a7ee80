"""
Free and uniformly accelerated Gaussian wave packets.

A free packet of mass ``m`` and squared width ``b`` spreads as

    psi0(x, t) = (8 b / pi)**(1/4) / sqrt(4 b + 2 i t / m)
                 * exp(-x**2 / (4 b + 2 i t / m))

and a packet driven by a linear potential ``-m a x`` is the same profile
carried along the classical trajectory ``x0 + v0 t + a t**2 / 2`` with the
phase

    S / m = v0 x + a x t - a v0 t**2 / 2 - a**2 t**3 / 6 - v0**2 t / 2.

All functions broadcast over array arguments with NumPy rules and return a
NumPy scalar for scalar input.
"""

from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike, NDArray

from accel_ent.utilities import require_positive


@dataclass(frozen=True)
class PacketParams:
    """
    Parameters of a single accelerating Gaussian packet.

    Parameters
    ----------
    m : float
        Mass, ``m > 0``.
    b : float
        Squared-width parameter, ``b > 0``; ``|psi|**2`` has variance ``b``
        at ``t = 0``.
    x0 : float
        Initial center.
    v0 : float
        Initial velocity.
    a : float
        Acceleration.
    """

    m: float = 1.0
    b: float = 1.0
    x0: float = 0.0
    v0: float = 0.0
    a: float = 0.0

    def __post_init__(self) -> None:
        require_positive("m", self.m)
        require_positive("b", self.b)

    def with_motion(self, v0: float, a: float) -> "PacketParams":
        """Copy with a different initial velocity and acceleration."""
        return replace(self, v0=v0, a=a)


def free_packet_amplitude(
    x: ArrayLike, t: ArrayLike, m: float, b: float
) -> NDArray[np.complex128]:
    """
    Amplitude of a freely spreading Gaussian packet centered at the origin.

    Parameters
    ----------
    x, t : ArrayLike
        Position(s) and time(s); broadcast together.
    m, b : float
        Mass and squared width, both positive.

    Returns
    -------
    NDArray[np.complex128]
        ``psi0(x, t)``; a NumPy scalar for scalar input.

    Examples
    --------
    >>> round(float(abs(free_packet_amplitude(0.0, 0.0, 1.0, 1.0))), 6)
    0.631619
    """
    m = require_positive("m", m)
    b = require_positive("b", b)
    x = np.asarray(x, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)

    denom = 4.0 * b + 2j * t / m
    amplitude = (8.0 * b / np.pi) ** 0.25 / np.sqrt(denom) * np.exp(-(x**2) / denom)
    return amplitude[()]


def packet_center(t: ArrayLike, p: PacketParams) -> NDArray[np.float64]:
    """Classical trajectory ``x0 + v0 t + a t**2 / 2``."""
    t = np.asarray(t, dtype=np.float64)
    return (p.x0 + p.v0 * t + 0.5 * p.a * t**2)[()]


def packet_width(t: ArrayLike, m: float, b: float) -> NDArray[np.float64]:
    """Standard deviation of ``|psi|**2``: ``sqrt(b + t**2 / (4 m**2 b))``."""
    t = np.asarray(t, dtype=np.float64)
    return np.sqrt(b + t**2 / (4.0 * m**2 * b))[()]


def _phase(
    x: NDArray[np.float64], t: NDArray[np.float64], p: PacketParams
) -> NDArray[np.float64]:
    return p.m * (
        p.v0 * x
        + p.a * x * t
        - 0.5 * p.a * p.v0 * t**2
        - p.a**2 * t**3 / 6.0
        - 0.5 * p.v0**2 * t
    )


def accelerated_packet_amplitude(
    x: ArrayLike, t: ArrayLike, p: PacketParams
) -> NDArray[np.complex128]:
    """
    Amplitude of a Gaussian packet under constant acceleration.

    Parameters
    ----------
    x, t : ArrayLike
        Position(s) and time(s); broadcast together.
    p : PacketParams
        Packet parameters.

    Returns
    -------
    NDArray[np.complex128]
        ``psi0(x - X(t), t) * exp(i S(x, t))`` with ``X(t)`` the classical
        trajectory. For ``a = v0 = x0 = 0`` this is the free packet.
    """
    x = np.asarray(x, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    xi = x - packet_center(t, p)
    envelope = free_packet_amplitude(xi, t, p.m, p.b)
    return (envelope * np.exp(1j * _phase(x, t, p)))[()]


def schrodinger_residual(
    x: ArrayLike, t: float, p: PacketParams, h: float
) -> NDArray[np.complex128]:
    """
    Central-difference residual of the driven Schrodinger equation.

    Evaluates ``i d_t psi + (1/2m) d_xx psi + m a x psi`` with step ``h`` in
    both ``x`` and ``t``. For an exact solution this is ``O(h**2)``.

    Parameters
    ----------
    x : ArrayLike
        Sample positions.
    t : float
        Sample time.
    p : PacketParams
        Packet parameters.
    h : float
        Finite-difference step.

    Returns
    -------
    NDArray[np.complex128]
        Residual at each position.
    """
    h = require_positive("h", h)
    x = np.asarray(x, dtype=np.float64)

    psi = accelerated_packet_amplitude(x, t, p)
    d_t = (
        accelerated_packet_amplitude(x, t + h, p)
        - accelerated_packet_amplitude(x, t - h, p)
    ) / (2.0 * h)
    d_xx = (
        accelerated_packet_amplitude(x + h, t, p)
        - 2.0 * psi
        + accelerated_packet_amplitude(x - h, t, p)
    ) / h**2
    return 1j * d_t + d_xx / (2.0 * p.m) + p.m * p.a * x * psi


__all__ = [
    "PacketParams",
    "accelerated_packet_amplitude",
    "free_packet_amplitude",
    "packet_center",
    "packet_width",
    "schrodinger_residual",
]
