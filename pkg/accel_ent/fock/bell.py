"""
Entangled two-mode Bell states expressed in the out basis.

The in-state ``(|0>_s |0>_omega + |1>_s |1>_omega) / sqrt(2)`` is mapped
mode by mode through :mod:`accel_ent.fock.expansions`. Two-mode fermion
states are written as plain tensor products with no extra reordering signs.
"""

import math

from accel_ent.bogoliubov import Statistics
from accel_ent.errors import MixedStatisticsError
from accel_ent.fock.expansions import out_one, out_vacuum
from accel_ent.fock.fock_types import FockVector, Mode, StateSpec


def bell_statistics(spec_s: StateSpec, spec_omega: StateSpec) -> Statistics:
    """
    Statistics shared by the two specs.

    An inertial mode adopts its partner's statistics; two inertial modes
    are treated as fermions (occupations never exceed one).

    Raises
    ------
    MixedStatisticsError
        If one spec is fermionic and the other bosonic.
    """
    kinds = {s for s in (spec_s.statistics, spec_omega.statistics) if s is not None}
    if len(kinds) > 1:
        raise MixedStatisticsError(f"s mode: {spec_s}", f"omega mode: {spec_omega}")
    return kinds.pop() if kinds else Statistics.FERMION


def build_bell_out(spec_s: StateSpec, spec_omega: StateSpec) -> FockVector:
    """
    Out-basis image of the two-mode Bell state.

    Parameters
    ----------
    spec_s, spec_omega : StateSpec
        How each mode is mapped to the out basis.

    Returns
    -------
    FockVector
        ``(vac_s x vac_omega + one_s x one_omega) / sqrt(2)`` over the slots
        ``(s,p), (s,a), (omega,p), (omega,a)``. Its truncation tail and
        negativity error combine those of the factors.

    Raises
    ------
    MixedStatisticsError
        If the specs disagree on statistics.

    Examples
    --------
    >>> state = build_bell_out(StateSpec.inertial(), StateSpec.inertial())
    >>> state.records()
    [((0, 0, 0, 0), 0.7071067811865475), ((1, 0, 1, 0), 0.7071067811865475)]
    """
    statistics = bell_statistics(spec_s, spec_omega)
    vacuum = out_vacuum(spec_s, Mode.S, statistics).tensor(
        out_vacuum(spec_omega, Mode.OMEGA, statistics)
    )
    excited = out_one(spec_s, Mode.S, statistics).tensor(
        out_one(spec_omega, Mode.OMEGA, statistics)
    )
    return vacuum.superpose(excited).scaled(1.0 / math.sqrt(2.0))


__all__ = ["bell_statistics", "build_bell_out"]
