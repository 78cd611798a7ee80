"""
Reduced density matrices of Fock states and their partial transposes.

A :class:`BipartitionSpec` splits the slots of a state into side A, side B
and the traced-out rest. :func:`reduced_density` assembles
``rho = Tr_traced |psi><psi|`` directly in sparse COO form over the
occupation basis of A x B that the state actually populates, so a
truncated bosonic state with ``N_c = 44`` per mode never needs a dense
buffer. Basis index of ``|a, b>`` is ``i_a * d_B + i_b``.
"""

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.sparse import coo_matrix, csr_matrix

from accel_ent.errors import (
    DegenerateStateError,
    DimensionLimitError,
    ParameterDomainError,
)
from accel_ent.fock import SLOTS, FockVector, Mode, SlotLabel, Species
from accel_ent.fock.fock_types import Occupations
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings
from accel_ent.utilities import stable_sum

_S_P = SlotLabel(Mode.S, Species.PARTICLE)
_S_A = SlotLabel(Mode.S, Species.ANTIPARTICLE)
_OMEGA_P = SlotLabel(Mode.OMEGA, Species.PARTICLE)
_OMEGA_A = SlotLabel(Mode.OMEGA, Species.ANTIPARTICLE)


@dataclass(frozen=True)
class BipartitionSpec:
    """
    Split of the four slots into side A, side B and traced-out slots.

    Parameters
    ----------
    side_a, side_b : tuple[SlotLabel, ...]
        Nonempty, disjoint slot sets kept in the reduced state.
    name : str
        Short label used in tables and reports.
    """

    side_a: tuple[SlotLabel, ...]
    side_b: tuple[SlotLabel, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.side_a or not self.side_b:
            raise ParameterDomainError(
                "both sides of a bipartition must be nonempty",
                f"side A: {self.side_a}, side B: {self.side_b}",
            )
        shared = set(self.side_a) & set(self.side_b)
        if shared:
            raise ParameterDomainError(
                "bipartition sides overlap",
                f"shared slots: {sorted(str(s) for s in shared)}",
            )
        if len(set(self.side_a)) != len(self.side_a) or len(set(self.side_b)) != len(
            self.side_b
        ):
            raise ParameterDomainError("bipartition lists a slot twice")
        unknown = [s for s in (*self.side_a, *self.side_b) if s not in SLOTS]
        if unknown:
            raise ParameterDomainError(f"unknown slots in bipartition: {unknown}")
        if not self.name:
            side_a = "+".join(map(str, self.side_a))
            side_b = "+".join(map(str, self.side_b))
            object.__setattr__(self, "name", f"{side_a}|{side_b}")

    def traced_out(self, slots: Iterable[SlotLabel] = SLOTS) -> tuple[SlotLabel, ...]:
        """Slots of ``slots`` that belong to neither side."""
        kept = set(self.side_a) | set(self.side_b)
        return tuple(s for s in slots if s not in kept)

    def __str__(self) -> str:
        return self.name


BIPARTITIONS: dict[str, BipartitionSpec] = {
    "s|omega": BipartitionSpec((_S_P, _S_A), (_OMEGA_P, _OMEGA_A), "s|omega"),
    "(p,a)|(p,a)": BipartitionSpec((_S_P, _S_A), (_OMEGA_P, _OMEGA_A), "(p,a)|(p,a)"),
    "s|omega_p": BipartitionSpec((_S_P, _S_A), (_OMEGA_P,), "s|omega_p"),
    "s|omega_a": BipartitionSpec((_S_P, _S_A), (_OMEGA_A,), "s|omega_a"),
    "p|p": BipartitionSpec((_S_P,), (_OMEGA_P,), "p|p"),
    "p|a": BipartitionSpec((_S_P,), (_OMEGA_A,), "p|a"),
    "a|p": BipartitionSpec((_S_A,), (_OMEGA_P,), "a|p"),
    "a|a": BipartitionSpec((_S_A,), (_OMEGA_A,), "a|a"),
}


def bipartition(name: str | BipartitionSpec) -> BipartitionSpec:
    """
    Look up a named bipartition.

    ``s|omega`` and ``(p,a)|(p,a)`` keep everything; ``s|omega_p`` and
    ``s|omega_a`` trace one species of the omega mode; ``x|y`` keeps
    species ``x`` of mode s and species ``y`` of mode omega.

    Raises
    ------
    ParameterDomainError
        If the name is unknown.
    """
    if isinstance(name, BipartitionSpec):
        return name
    key = name.strip().replace(" ", "")
    if key in BIPARTITIONS:
        return BIPARTITIONS[key]
    valid = ", ".join(f"'{k}'" for k in BIPARTITIONS)
    raise ParameterDomainError(f"Unknown bipartition: '{name}'. Valid: {valid}")


@dataclass(frozen=True)
class DensityMatrix:
    """
    Sparse density matrix on the occupation basis of A x B.

    Parameters
    ----------
    spec : BipartitionSpec
        Bipartition the matrix was reduced to.
    basis_a, basis_b : tuple[tuple[int, ...], ...]
        Occupation tuples of each side, sorted; index ``i_a * d_B + i_b``.
    matrix : scipy.sparse.csr_matrix
        Matrix entries.
    truncation_tail : float
        Probability mass missing from the trace.
    negativity_error : float
        Truncation bound carried over from the state.
    """

    spec: BipartitionSpec
    basis_a: tuple[Occupations, ...]
    basis_b: tuple[Occupations, ...]
    matrix: csr_matrix
    truncation_tail: float = 0.0
    negativity_error: float = 0.0

    @property
    def dims(self) -> tuple[int, int]:
        """``(d_A, d_B)``."""
        return len(self.basis_a), len(self.basis_b)

    @property
    def dimension(self) -> int:
        """``d_A * d_B``."""
        d_a, d_b = self.dims
        return d_a * d_b

    def trace(self) -> float:
        """Real part of the trace."""
        return float(self.matrix.diagonal().real.sum())

    def purity(self) -> float:
        """``Tr rho**2``, i.e. the sum of squared entry moduli for Hermitian rho."""
        return stable_sum(np.abs(self.matrix.data) ** 2)

    def hermiticity_residual(self) -> float:
        """Largest entry of ``|rho - rho^H|``."""
        diff = self.matrix - self.matrix.conj().T
        return float(np.abs(diff.data).max()) if diff.nnz else 0.0

    def to_dense(self) -> NDArray[np.float64]:
        """Dense copy of the matrix."""
        return self.matrix.toarray()


def purity(rho: DensityMatrix) -> float:
    """``Tr rho**2`` of a reduced density matrix."""
    return rho.purity()


def _positions(state: FockVector, slots: Iterable[SlotLabel]) -> list[int]:
    try:
        return [state.slots.index(slot) for slot in slots]
    except ValueError as e:
        raise ParameterDomainError(
            "bipartition names a slot the state does not carry",
            f"state slots: {[str(s) for s in state.slots]}",
        ) from e


def check_dimension(dimension: int, settings: NumericSettings) -> None:
    """
    Reject matrices larger than ``settings.dimension_limit``.

    Raises
    ------
    DimensionLimitError
        With a note suggesting a larger epsilon or a pair restriction.
    """
    if dimension > settings.dimension_limit:
        raise DimensionLimitError(
            f"dimension {dimension} > limit {settings.dimension_limit}",
            "hint: raise epsilon to shorten the series cutoff, "
            "or use a restricted state with a pair limit M",
        )


def reduced_density(
    state: FockVector,
    spec: BipartitionSpec | str,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> DensityMatrix:
    """
    Partial trace of ``|state><state|`` over the slots outside ``spec``.

    Parameters
    ----------
    state : FockVector
        Pure state, normalized up to its recorded truncation tail.
    spec : BipartitionSpec | str
        Bipartition or its registered name.
    settings : NumericSettings
        Supplies the dimension guard.

    Returns
    -------
    DensityMatrix
        Hermitian, trace ``1 - truncation_tail`` for a truncated state.

    Raises
    ------
    DimensionLimitError
        If ``d_A * d_B`` exceeds the configured limit.
    """
    spec = bipartition(spec)
    if not len(state):
        raise DegenerateStateError("state has no nonzero amplitudes")
    idx_a = _positions(state, spec.side_a)
    idx_b = _positions(state, spec.side_b)
    idx_t = _positions(state, spec.traced_out(state.slots))

    basis_a = tuple(sorted({tuple(occ[i] for i in idx_a) for occ, _ in state}))
    basis_b = tuple(sorted({tuple(occ[i] for i in idx_b) for occ, _ in state}))
    d_b = len(basis_b)
    check_dimension(len(basis_a) * d_b, settings)
    index_a = {occ: i for i, occ in enumerate(basis_a)}
    index_b = {occ: i for i, occ in enumerate(basis_b)}

    # rho = sum over traced configurations t of |v_t><v_t|
    groups: dict[Occupations, list[tuple[int, float]]] = defaultdict(list)
    for occ, amp in state:
        row = index_a[tuple(occ[i] for i in idx_a)] * d_b + index_b[
            tuple(occ[i] for i in idx_b)
        ]
        groups[tuple(occ[i] for i in idx_t)].append((row, amp))

    rows: list[NDArray[np.intp]] = []
    cols: list[NDArray[np.intp]] = []
    data: list[NDArray] = []
    for members in groups.values():
        index = np.fromiter((m[0] for m in members), dtype=np.intp, count=len(members))
        amps = np.array([m[1] for m in members])
        rows.append(np.repeat(index, index.size))
        cols.append(np.tile(index, index.size))
        data.append(np.outer(amps, np.conj(amps)).ravel())

    dimension = len(basis_a) * d_b
    matrix = coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dimension, dimension),
    ).tocsr()
    return DensityMatrix(
        spec=spec,
        basis_a=basis_a,
        basis_b=basis_b,
        matrix=matrix,
        truncation_tail=state.truncation_tail,
        negativity_error=state.negativity_error,
    )


def transpose_subsystem(matrix: csr_matrix, d_a: int, d_b: int) -> csr_matrix:
    """
    Transpose the A indices of a matrix on ``C^{d_A} x C^{d_B}``.

    ``|a b><a' b'|`` maps to ``|a' b><a b'|``. Applying it twice returns
    the original matrix.
    """
    coo = coo_matrix(matrix)
    row_a, row_b = np.divmod(coo.row, d_b)
    col_a, col_b = np.divmod(coo.col, d_b)
    return coo_matrix(
        (coo.data, (col_a * d_b + row_b, row_a * d_b + col_b)),
        shape=(d_a * d_b, d_a * d_b),
    ).tocsr()


def partial_transpose(rho: DensityMatrix) -> csr_matrix:
    """
    Partial transpose of ``rho`` with respect to side A.

    Hermiticity and trace are preserved; the result generally has negative
    eigenvalues when ``rho`` is entangled.
    """
    d_a, d_b = rho.dims
    return transpose_subsystem(rho.matrix, d_a, d_b)


__all__ = [
    "BIPARTITIONS",
    "BipartitionSpec",
    "DensityMatrix",
    "bipartition",
    "check_dimension",
    "partial_transpose",
    "purity",
    "reduced_density",
    "transpose_subsystem",
]
