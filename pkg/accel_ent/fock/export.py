"""
JSON export of Fock-state amplitude tables.

The dump lists every nonzero amplitude with its occupation tuple in slot
order ``(s,p), (s,a), (omega,p), (omega,a)``.
"""

from pydantic import BaseModel, Field

from accel_ent.fock.fock_types import FockVector


class AmplitudeRecord(BaseModel):
    """One basis state and its (real) amplitude."""

    occupations: list[int] = Field(description="Occupation numbers in slot order")
    amplitude: float = Field(description="Real amplitude of this basis state")


class StateDump(BaseModel):
    """
    Serializable view of a :class:`FockVector`.

    Parameters
    ----------
    statistics : str
        ``"fermion"`` or ``"scalar"``.
    slots : list[str]
        Slot labels, e.g. ``["s_p", "s_a", "omega_p", "omega_a"]``.
    truncation_tail : float
        Discarded probability mass.
    negativity_error : float
        Truncation bound on derived negativities.
    cutoff : int | None
        Series cutoff of unrestricted bosonic factors.
    amplitudes : list[AmplitudeRecord]
        Amplitude table sorted by occupation tuple.
    """

    statistics: str = Field(description="Particle statistics")
    slots: list[str] = Field(description="Slot labels in tuple order")
    truncation_tail: float = Field(ge=0.0, description="Discarded probability mass")
    negativity_error: float = Field(ge=0.0, description="Bound on negativity shift")
    cutoff: int | None = Field(default=None, description="Series cutoff N_c")
    amplitudes: list[AmplitudeRecord] = Field(description="Nonzero amplitudes")

    @classmethod
    def from_state(cls, state: FockVector) -> "StateDump":
        """Build the dump for ``state``."""
        return cls(
            statistics=state.statistics.value,
            slots=[str(slot) for slot in state.slots],
            truncation_tail=state.truncation_tail,
            negativity_error=state.negativity_error,
            cutoff=state.cutoff,
            amplitudes=[
                AmplitudeRecord(occupations=list(occ), amplitude=float(amp))
                for occ, amp in state.records()
            ],
        )

    def to_json(self) -> str:
        """Deterministic JSON text (indent 2)."""
        return self.model_dump_json(indent=2)


__all__ = ["AmplitudeRecord", "StateDump"]
