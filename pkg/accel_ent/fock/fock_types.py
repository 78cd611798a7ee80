"""
Data types for occupation-number (Fock) states.

A two-mode state lives on four slots, one per (mode, species) pair, always
ordered ``(s,p), (s,a), (omega,p), (omega,a)``. States are stored as sparse
amplitude tables keyed by occupation tuples in that slot order.
"""

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType

from accel_ent.bogoliubov import Statistics
from accel_ent.errors import MixedStatisticsError, ParameterDomainError
from accel_ent.utilities import stable_sum

Occupations = tuple[int, ...]


class Mode(Enum):
    """Field mode carrying one half of the entangled pair."""

    S = "s"
    OMEGA = "omega"


class Species(Enum):
    """Particle or antiparticle content of a mode."""

    PARTICLE = "p"
    ANTIPARTICLE = "a"


@dataclass(frozen=True)
class SlotLabel:
    """One occupation slot: a (mode, species) pair."""

    mode: Mode
    species: Species

    def __str__(self) -> str:
        return f"{self.mode.value}_{self.species.value}"

    @classmethod
    def parse(cls, value: str) -> "SlotLabel":
        """
        Parse ``"s_p"``, ``"s_a"``, ``"omega_p"`` or ``"omega_a"``.

        Raises
        ------
        ValueError
            If the value names no slot.
        """
        for slot in SLOTS:
            if str(slot) == value.strip():
                return slot
        valid = ", ".join(f"'{s}'" for s in SLOTS)
        raise ValueError(f"Unknown slot: '{value}'. Valid: {valid}")


SLOTS: tuple[SlotLabel, ...] = (
    SlotLabel(Mode.S, Species.PARTICLE),
    SlotLabel(Mode.S, Species.ANTIPARTICLE),
    SlotLabel(Mode.OMEGA, Species.PARTICLE),
    SlotLabel(Mode.OMEGA, Species.ANTIPARTICLE),
)


def mode_slots(mode: Mode) -> tuple[SlotLabel, SlotLabel]:
    """The (particle, antiparticle) slots of ``mode``."""
    return SlotLabel(mode, Species.PARTICLE), SlotLabel(mode, Species.ANTIPARTICLE)


@dataclass(frozen=True)
class FockVector:
    """
    Finite superposition of occupation-number basis states.

    Parameters
    ----------
    statistics : Statistics
        ``FERMION`` restricts every occupation to 0 or 1.
    slots : tuple[SlotLabel, ...]
        Slot labels, one per entry of every occupation tuple.
    amplitudes : Mapping[tuple[int, ...], float]
        Nonzero amplitudes keyed by occupation tuple.
    occupancy_limit : int
        Largest occupation allowed in any slot.
    truncation_tail : float
        Probability mass discarded by truncating a series, so the norm
        squared falls short of the untruncated one by this amount.
    negativity_error : float
        Bound on the shift of any negativity computed from this state caused
        by the truncation.
    cutoff : int | None
        Series cutoff ``N_c`` used for unrestricted bosonic factors.

    Notes
    -----
    Instances are immutable and safe to share across threads.
    """

    statistics: Statistics
    slots: tuple[SlotLabel, ...]
    amplitudes: Mapping[Occupations, float]
    occupancy_limit: int
    truncation_tail: float = 0.0
    negativity_error: float = 0.0
    cutoff: int | None = None

    def __post_init__(self) -> None:
        if self.statistics is Statistics.FERMION and self.occupancy_limit > 1:
            raise ParameterDomainError(
                f"fermion occupancy limit must be 1, got {self.occupancy_limit}"
            )
        table: dict[Occupations, float] = {}
        for occupations, amplitude in self.amplitudes.items():
            key = tuple(int(n) for n in occupations)
            if len(key) != len(self.slots):
                raise ParameterDomainError(
                    f"occupation tuple {key} does not match {len(self.slots)} slots"
                )
            if any(n < 0 or n > self.occupancy_limit for n in key):
                raise ParameterDomainError(
                    f"occupation tuple {key} outside [0, {self.occupancy_limit}]"
                )
            if amplitude != 0.0:
                table[key] = amplitude
        object.__setattr__(self, "amplitudes", MappingProxyType(table))

    def __iter__(self) -> Iterator[tuple[Occupations, float]]:
        return iter(self.amplitudes.items())

    def __len__(self) -> int:
        return len(self.amplitudes)

    def norm_squared(self) -> float:
        """Sum of squared amplitude moduli (compensated)."""
        return stable_sum(abs(a) ** 2 for a in self.amplitudes.values())

    def scaled(self, factor: float) -> "FockVector":
        """Multiply every amplitude by ``factor``."""
        weight = abs(factor) ** 2
        return FockVector(
            statistics=self.statistics,
            slots=self.slots,
            amplitudes={k: factor * a for k, a in self.amplitudes.items()},
            occupancy_limit=self.occupancy_limit,
            truncation_tail=weight * self.truncation_tail,
            negativity_error=weight * self.negativity_error,
            cutoff=self.cutoff,
        )

    def tensor(self, other: "FockVector") -> "FockVector":
        """
        Tensor product with ``other``; slots of ``self`` come first.

        Raises
        ------
        MixedStatisticsError
            If the two factors have different statistics.
        """
        if self.statistics is not other.statistics:
            raise MixedStatisticsError(
                f"{self.statistics.value} factor combined with "
                f"{other.statistics.value} factor"
            )
        amplitudes = {
            left + right: a * b
            for left, a in self.amplitudes.items()
            for right, b in other.amplitudes.items()
        }
        kept = (1.0 - self.truncation_tail) * (1.0 - other.truncation_tail)
        cutoffs = [c for c in (self.cutoff, other.cutoff) if c is not None]
        return FockVector(
            statistics=self.statistics,
            slots=self.slots + other.slots,
            amplitudes=amplitudes,
            occupancy_limit=max(self.occupancy_limit, other.occupancy_limit),
            truncation_tail=1.0 - kept,
            negativity_error=self.negativity_error + other.negativity_error,
            cutoff=max(cutoffs) if cutoffs else None,
        )

    def superpose(self, other: "FockVector") -> "FockVector":
        """
        Sum of two vectors with disjoint support.

        Disjoint support makes the branches orthogonal, so the truncation
        tails add.

        Raises
        ------
        ParameterDomainError
            If the slots differ or the supports overlap.
        MixedStatisticsError
            If the statistics differ.
        """
        if self.statistics is not other.statistics:
            raise MixedStatisticsError(
                f"{self.statistics.value} branch added to "
                f"{other.statistics.value} branch"
            )
        if self.slots != other.slots:
            raise ParameterDomainError("cannot superpose vectors over different slots")
        shared = self.amplitudes.keys() & other.amplitudes.keys()
        if shared:
            raise ParameterDomainError(
                f"branches share {len(shared)} basis states; support must be disjoint"
            )
        cutoffs = [c for c in (self.cutoff, other.cutoff) if c is not None]
        return FockVector(
            statistics=self.statistics,
            slots=self.slots,
            amplitudes={**self.amplitudes, **other.amplitudes},
            occupancy_limit=max(self.occupancy_limit, other.occupancy_limit),
            truncation_tail=self.truncation_tail + other.truncation_tail,
            negativity_error=self.negativity_error + other.negativity_error,
            cutoff=max(cutoffs) if cutoffs else None,
        )

    def records(self) -> list[tuple[Occupations, float]]:
        """Amplitude table sorted by occupation tuple."""
        return sorted(self.amplitudes.items())


@dataclass(frozen=True)
class RestrictionParams:
    """
    Normalization of the pair-number-restricted expansions.

    Parameters
    ----------
    r : float
        Squeezing parameter.
    M : int
        Maximum number of produced pairs per mode.
    N1 : float
        ``(1 - tanh(r)**(2M+2))**-1/2``.
    N2 : float
        ``(1 - (M+1) tanh(r)**(2M) + M tanh(r)**(2M+2))**-1/2``.
    """

    r: float
    M: int
    N1: float
    N2: float

    @classmethod
    def compute(cls, r: float, M: int) -> "RestrictionParams":
        """Evaluate ``N1`` and ``N2`` for ``(r, M)``."""
        if int(M) != M or M < 1:
            raise ParameterDomainError(f"M must be a positive integer, got {M!r}")
        M = int(M)
        x = math.tanh(r) ** 2
        n1 = (1.0 - x ** (M + 1)) ** -0.5
        n2 = (1.0 - (M + 1) * x**M + M * x ** (M + 1)) ** -0.5
        return cls(r=r, M=M, N1=n1, N2=n2)


class SpecKind(Enum):
    """How one mode of the entangled pair is mapped to out-states."""

    INERTIAL = "inertial"
    FERMION = "fermion"
    SCALAR = "scalar"
    SCALAR_RESTRICTED = "restricted"


@dataclass(frozen=True)
class StateSpec:
    """
    Out-state recipe for one mode.

    Parameters
    ----------
    kind : SpecKind
        Expansion to apply.
    r : float
        ``r_f`` for fermions, ``r`` for scalars; ignored when inertial.
    epsilon : float
        Truncation tolerance of an unrestricted scalar expansion.
    M : int | None
        Pair restriction of a restricted scalar expansion.
    """

    kind: SpecKind
    r: float = 0.0
    epsilon: float = 1e-12
    M: int | None = None

    @property
    def statistics(self) -> Statistics | None:
        """Statistics implied by the spec; ``None`` for an inertial mode."""
        if self.kind is SpecKind.INERTIAL:
            return None
        if self.kind is SpecKind.FERMION:
            return Statistics.FERMION
        return Statistics.SCALAR

    @classmethod
    def inertial(cls) -> "StateSpec":
        """Mode that stays inertial: ``|0> -> |0,0>``, ``|1> -> |1,0>``."""
        return cls(SpecKind.INERTIAL)

    @classmethod
    def fermion(cls, r_f: float) -> "StateSpec":
        """Accelerated fermion mode with parameter ``r_f``."""
        return cls(SpecKind.FERMION, r=r_f)

    @classmethod
    def scalar(cls, r: float, epsilon: float = 1e-12) -> "StateSpec":
        """Accelerated scalar mode, series truncated at tolerance ``epsilon``."""
        return cls(SpecKind.SCALAR, r=r, epsilon=epsilon)

    @classmethod
    def restricted(cls, r: float, M: int) -> "StateSpec":
        """Accelerated scalar mode producing at most ``M`` pairs."""
        return cls(SpecKind.SCALAR_RESTRICTED, r=r, M=M)

    @classmethod
    def parse(cls, text: str) -> "StateSpec":
        """
        Parse ``inertial``, ``fermion:<r_f>``, ``scalar:<r>[:<eps>]`` or
        ``restricted:<r>:<M>``.

        Raises
        ------
        ValueError
            If the text is malformed.
        """
        head, *args = [part.strip() for part in text.strip().split(":")]
        try:
            kind = SpecKind(head.lower())
        except ValueError:
            valid = ", ".join(f"'{k.value}'" for k in SpecKind)
            raise ValueError(f"Unknown state spec: '{text}'. Valid: {valid}") from None

        arity = {
            SpecKind.INERTIAL: (0, 0),
            SpecKind.FERMION: (1, 1),
            SpecKind.SCALAR: (1, 2),
            SpecKind.SCALAR_RESTRICTED: (2, 2),
        }[kind]
        if not arity[0] <= len(args) <= arity[1]:
            raise ValueError(f"Malformed state spec: '{text}'")

        if kind is SpecKind.INERTIAL:
            return cls.inertial()
        if kind is SpecKind.FERMION:
            return cls.fermion(float(args[0]))
        if kind is SpecKind.SCALAR:
            epsilon = float(args[1]) if len(args) == 2 else 1e-12
            return cls.scalar(float(args[0]), epsilon)
        return cls.restricted(float(args[0]), int(args[1]))

    def __str__(self) -> str:
        if self.kind is SpecKind.INERTIAL:
            return "inertial"
        if self.kind is SpecKind.FERMION:
            return f"fermion:{self.r!r}"
        if self.kind is SpecKind.SCALAR:
            return f"scalar:{self.r!r}:{self.epsilon!r}"
        return f"restricted:{self.r!r}:{self.M}"


__all__ = [
    "SLOTS",
    "FockVector",
    "Mode",
    "Occupations",
    "RestrictionParams",
    "SlotLabel",
    "SpecKind",
    "Species",
    "StateSpec",
    "mode_slots",
]
