"""
Out-basis expansions of in-basis states for one accelerated mode.

Fermions mix only the empty and doubly occupied pair states:

    |0>_in = cos(r_f) |0_p 0_a> - sin(r_f) |1_p 1_a>
    |1>_in = |1_p 0_a>

Scalars become two-mode squeezed states

    |0>_in = (1/cosh r) sum_n tanh(r)**n |n_p n_a>
    |1>_in = (1/cosh(r)**2) sum_n sqrt(n+1) tanh(r)**n |(n+1)_p n_a>

which are either truncated at a cutoff ``N_c`` (keeping the ``1/cosh``
normalization and recording the discarded mass) or restricted to at most
``M`` pairs and renormalized with ``N1`` and ``N2``. Truncation and
restriction describe different physics and are never mixed.

All Bogoliubov phases are zero, so every amplitude is real.
"""

import math

from accel_ent.bogoliubov import R_MAX_FERMION, R_MAX_SCALAR, Statistics
from accel_ent.errors import ParameterDomainError
from accel_ent.fock.fock_types import (
    FockVector,
    Mode,
    RestrictionParams,
    SpecKind,
    StateSpec,
    mode_slots,
)
from accel_ent.utilities import require_range

# Extra terms kept beyond the geometric-tail estimate.
CUTOFF_MARGIN = 2


def _check_r(r: float) -> float:
    return require_range("r", r, 0.0, R_MAX_SCALAR)


def _check_r_f(r_f: float) -> float:
    return require_range("r_f", r_f, 0.0, R_MAX_FERMION)


def _check_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not 0.0 < epsilon < 1.0:
        raise ParameterDomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    return epsilon


def truncation_cutoff(r: float, epsilon: float) -> int:
    """
    Series cutoff ``N_c`` for squeezing ``r`` and tolerance ``epsilon``.

    ``N_c = ceil(ln(epsilon (1 - tanh(r)**2)) / (2 ln tanh r)) + 2``, and
    ``N_c = 0`` at ``r = 0``.

    Examples
    --------
    >>> truncation_cutoff(math.asinh(1.0), 1e-12)
    43
    """
    r = _check_r(r)
    epsilon = _check_epsilon(epsilon)
    if r == 0.0:
        return 0
    t = math.tanh(r)
    estimate = math.log(epsilon * (1.0 - t * t)) / (2.0 * math.log(t))
    return max(math.ceil(estimate), 0) + CUTOFF_MARGIN


def one_particle_cutoff(r: float, epsilon: float) -> int:
    """
    Series cutoff of the one-particle expansion.

    The one-particle tail decays more slowly than the vacuum tail, so the
    vacuum cutoff is raised until ``one_particle_tail(r, N) <= epsilon``.

    Examples
    --------
    >>> one_particle_cutoff(math.asinh(1.0), 1e-12)
    44
    """
    cutoff = truncation_cutoff(r, epsilon)
    while one_particle_tail(r, cutoff) > epsilon:
        cutoff += 1
    return cutoff


def vacuum_tail(r: float, cutoff: int) -> float:
    """Probability mass of the vacuum series beyond ``n = cutoff``."""
    return math.tanh(r) ** (2 * (cutoff + 1))


def one_particle_tail(r: float, cutoff: int) -> float:
    """
    Probability mass of the one-particle series beyond ``n = cutoff``.

    With ``x = tanh(r)**2`` and ``K = cutoff + 1`` this is
    ``x**K ((K + 1) - K x)``.
    """
    x = math.tanh(r) ** 2
    k = cutoff + 1
    return x**k * ((k + 1) - k * x)


def negativity_error_constant(r: float, cutoff: int) -> float:
    """
    Constant ``c`` in ``|delta N_e| <= c * delta`` for a truncated factor.

    ``c = (N_c + 1) / tanh(r)**2``, the boundary-sector weight relative to
    the tail times its occupation factor. Zero at ``r = 0``.
    """
    if r == 0.0:
        return 0.0
    return (cutoff + 1) / math.tanh(r) ** 2


def _factor(
    mode: Mode,
    statistics: Statistics,
    amplitudes: dict[tuple[int, ...], float],
    occupancy_limit: int,
    tail: float = 0.0,
    error: float = 0.0,
    cutoff: int | None = None,
) -> FockVector:
    return FockVector(
        statistics=statistics,
        slots=mode_slots(mode),
        amplitudes=amplitudes,
        occupancy_limit=occupancy_limit,
        truncation_tail=tail,
        negativity_error=error,
        cutoff=cutoff,
    )


def inertial_vacuum(mode: Mode, statistics: Statistics) -> FockVector:
    """``|0> -> |0_p 0_a>`` for a mode that is not accelerated."""
    return _factor(mode, statistics, {(0, 0): 1.0}, 1)


def inertial_one(mode: Mode, statistics: Statistics) -> FockVector:
    """``|1> -> |1_p 0_a>`` for a mode that is not accelerated."""
    return _factor(mode, statistics, {(1, 0): 1.0}, 1)


def fermion_out_vacuum(r_f: float, mode: Mode = Mode.OMEGA) -> FockVector:
    """
    Fermion in-vacuum in the out basis.

    Parameters
    ----------
    r_f : float
        Parameter in ``[0, pi/2]``.
    mode : Mode
        Mode the slots are labelled with.

    Returns
    -------
    FockVector
        ``cos(r_f) |0 0> - sin(r_f) |1 1>``.

    Raises
    ------
    ParameterDomainError
        If ``r_f`` lies outside ``[0, pi/2]``.
    """
    r_f = _check_r_f(r_f)
    return _factor(
        mode,
        Statistics.FERMION,
        {(0, 0): math.cos(r_f), (1, 1): -math.sin(r_f)},
        1,
    )


def fermion_out_one(r_f: float, mode: Mode = Mode.OMEGA) -> FockVector:
    """Fermion one-particle in-state in the out basis: exactly ``|1 0>``."""
    _check_r_f(r_f)
    return _factor(mode, Statistics.FERMION, {(1, 0): 1.0}, 1)


def scalar_out_vacuum(
    r: float, epsilon: float = 1e-12, mode: Mode = Mode.OMEGA
) -> FockVector:
    """
    Truncated scalar in-vacuum in the out basis.

    Amplitudes ``tanh(r)**n / cosh(r)`` on ``|n n>`` for ``n <= N_c``. The
    series is not renormalized; the discarded mass ``tanh(r)**(2 N_c + 2)``
    is recorded as ``truncation_tail``.

    Raises
    ------
    ParameterDomainError
        If ``r`` is outside ``[0, asinh 1]`` or ``epsilon`` outside ``(0, 1)``.
    """
    cutoff = truncation_cutoff(r, epsilon)
    t, c = math.tanh(r), math.cosh(r)
    amplitudes = {(n, n): t**n / c for n in range(cutoff + 1)}
    tail = vacuum_tail(r, cutoff)
    return _factor(
        mode,
        Statistics.SCALAR,
        amplitudes,
        cutoff + 1,
        tail=tail,
        error=negativity_error_constant(r, cutoff) * tail,
        cutoff=cutoff,
    )


def scalar_out_one(
    r: float, epsilon: float = 1e-12, mode: Mode = Mode.OMEGA
) -> FockVector:
    """
    Truncated scalar one-particle in-state in the out basis.

    Amplitudes ``sqrt(n+1) tanh(r)**n / cosh(r)**2`` on ``|n+1, n>`` for
    ``n <= N_c``; the discarded mass is recorded, not renormalized away.
    """
    cutoff = one_particle_cutoff(r, epsilon)
    t, c2 = math.tanh(r), math.cosh(r) ** 2
    amplitudes = {(n + 1, n): math.sqrt(n + 1) * t**n / c2 for n in range(cutoff + 1)}
    tail = one_particle_tail(r, cutoff)
    return _factor(
        mode,
        Statistics.SCALAR,
        amplitudes,
        cutoff + 1,
        tail=tail,
        error=negativity_error_constant(r, cutoff) * tail,
        cutoff=cutoff,
    )


def restriction_params(r: float, M: int) -> RestrictionParams:
    """
    Normalization factors ``N1``, ``N2`` for at most ``M`` produced pairs.

    Examples
    --------
    >>> params = restriction_params(math.asinh(1.0), 1)
    >>> round(params.N1, 6), round(params.N2, 6)
    (1.154701, 2.0)
    """
    return RestrictionParams.compute(_check_r(r), M)


def scalar_restricted_vacuum(
    r: float, M: int, mode: Mode = Mode.OMEGA
) -> FockVector:
    """In-vacuum with at most ``M`` pairs: ``N1 tanh(r)**n / cosh r``, ``n <= M``."""
    params = restriction_params(r, M)
    t, c = math.tanh(r), math.cosh(r)
    amplitudes = {(n, n): params.N1 * t**n / c for n in range(params.M + 1)}
    return _factor(mode, Statistics.SCALAR, amplitudes, params.M)


def scalar_restricted_one(r: float, M: int, mode: Mode = Mode.OMEGA) -> FockVector:
    """
    One-particle state with at most ``M`` particles per species.

    ``N2 sqrt(n+1) tanh(r)**n / cosh(r)**2`` on ``|n+1, n>``, ``n <= M - 1``.
    """
    params = restriction_params(r, M)
    t, c2 = math.tanh(r), math.cosh(r) ** 2
    amplitudes = {
        (n + 1, n): params.N2 * math.sqrt(n + 1) * t**n / c2 for n in range(params.M)
    }
    return _factor(mode, Statistics.SCALAR, amplitudes, params.M)


def out_vacuum(spec: StateSpec, mode: Mode, statistics: Statistics) -> FockVector:
    """Out-basis image of ``|0>_in`` for ``spec`` on ``mode``."""
    match spec.kind:
        case SpecKind.INERTIAL:
            return inertial_vacuum(mode, statistics)
        case SpecKind.FERMION:
            return fermion_out_vacuum(spec.r, mode)
        case SpecKind.SCALAR:
            return scalar_out_vacuum(spec.r, spec.epsilon, mode)
        case SpecKind.SCALAR_RESTRICTED:
            return scalar_restricted_vacuum(spec.r, _restriction(spec), mode)


def out_one(spec: StateSpec, mode: Mode, statistics: Statistics) -> FockVector:
    """Out-basis image of ``|1>_in`` for ``spec`` on ``mode``."""
    match spec.kind:
        case SpecKind.INERTIAL:
            return inertial_one(mode, statistics)
        case SpecKind.FERMION:
            return fermion_out_one(spec.r, mode)
        case SpecKind.SCALAR:
            return scalar_out_one(spec.r, spec.epsilon, mode)
        case SpecKind.SCALAR_RESTRICTED:
            return scalar_restricted_one(spec.r, _restriction(spec), mode)


def _restriction(spec: StateSpec) -> int:
    if spec.M is None:
        raise ParameterDomainError("restricted spec needs a pair limit M")
    return spec.M


__all__ = [
    "CUTOFF_MARGIN",
    "fermion_out_one",
    "fermion_out_vacuum",
    "inertial_one",
    "inertial_vacuum",
    "negativity_error_constant",
    "one_particle_cutoff",
    "one_particle_tail",
    "out_one",
    "out_vacuum",
    "restriction_params",
    "scalar_out_one",
    "scalar_out_vacuum",
    "scalar_restricted_one",
    "scalar_restricted_vacuum",
    "truncation_cutoff",
    "vacuum_tail",
]
