"""
Utility functions shared by the accel-ent modules.

Parameter validation helpers that raise :class:`ParameterDomainError`,
compensated summation for reproducible reductions, and grid builders.
"""

import math
from collections.abc import Iterable

import numpy as np
from numpy.typing import NDArray

from accel_ent.errors import ParameterDomainError


def require_positive(name: str, value: float) -> float:
    """
    Validate that a parameter is finite and strictly positive.

    Parameters
    ----------
    name : str
        Parameter name used in the error note.
    value : float
        Value to check.

    Returns
    -------
    float
        ``value`` converted to ``float``.

    Raises
    ------
    ParameterDomainError
        If ``value`` is not a finite positive number.
    """
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ParameterDomainError(f"{name} must be positive, got {value!r}")
    return value


def require_range(
    name: str, value: float, lower: float, upper: float, tolerance: float = 1e-12
) -> float:
    """
    Validate that ``lower <= value <= upper`` within ``tolerance``.

    Values within ``tolerance`` outside the interval are clamped onto it, so
    that e.g. a grid endpoint computed as ``asinh(1)`` never fails on round-off.

    Raises
    ------
    ParameterDomainError
        If ``value`` is NaN or lies outside the interval by more than
        ``tolerance``.
    """
    value = float(value)
    if math.isnan(value) or value < lower - tolerance or value > upper + tolerance:
        raise ParameterDomainError(
            f"{name} must lie in [{lower!r}, {upper!r}], got {value!r}"
        )
    return min(max(value, lower), upper)


def stable_sum(values: Iterable[float]) -> float:
    """Order-independent, correctly rounded sum (``math.fsum``)."""
    return math.fsum(values)


def even_grid(lower: float, upper: float, points: int) -> NDArray[np.float64]:
    """
    Evenly spaced grid including both endpoints.

    The last point is set to ``upper`` exactly so range checks on the
    endpoint never see round-off.
    """
    if points < 1:
        raise ParameterDomainError(f"grid needs at least one point, got {points}")
    if points == 1:
        return np.array([float(lower)])
    grid = np.linspace(lower, upper, points)
    grid[-1] = upper
    return grid


__all__ = ["even_grid", "require_positive", "require_range", "stable_sum"]
