"""
Negativity and logarithmic negativity.

``N_e`` is the modulus of the sum of the negative eigenvalues of the
partial transpose; ``LN = log2(2 N_e + 1)``. When a bipartition keeps every
slot the state is pure, and the negativity follows from its Schmidt
weights ``lambda_i``:

    N_e = ((sum_i sqrt(lambda_i))**2 - sum_i lambda_i) / 2

with negative partial-transpose eigenvalues ``-sqrt(lambda_i lambda_j)``
for ``i < j``. The weights come from ``C C^H`` where ``C`` is the
coefficient matrix of the state between the two sides.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.sparse import coo_matrix, csr_matrix

from accel_ent.entanglement.density import (
    BipartitionSpec,
    bipartition,
    check_dimension,
    partial_transpose,
    reduced_density,
)
from accel_ent.entanglement.jacobi import hermitian_eigenvalues
from accel_ent.errors import DegenerateStateError, ParameterDomainError
from accel_ent.fock import FockVector
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings
from accel_ent.utilities import stable_sum

# |delta LN| <= LN_ERROR_FACTOR * |delta N_e| since d/dN log2(2N+1) <= 2/ln 2
LN_ERROR_FACTOR = 2.0 / math.log(2.0)


class Method:
    """Labels for how a report's negativity was obtained."""

    PARTIAL_TRANSPOSE = "partial-transpose"
    SCHMIDT = "schmidt"


def negative_eigenvalues(
    eigenvalues: ArrayLike, settings: NumericSettings = DEFAULT_SETTINGS
) -> NDArray[np.float64]:
    """Eigenvalues below ``-settings.negative_threshold``, ascending."""
    values = np.sort(np.asarray(eigenvalues, dtype=np.float64))
    return values[values < -settings.negative_threshold]


def negativity(
    pt_matrix: ArrayLike | csr_matrix, settings: NumericSettings = DEFAULT_SETTINGS
) -> float:
    """
    Negativity of a partially transposed density matrix.

    Parameters
    ----------
    pt_matrix : ArrayLike | scipy.sparse matrix
        Hermitian partial transpose.
    settings : NumericSettings
        Eigenvalue threshold and Jacobi controls.

    Returns
    -------
    float
        ``|sum of eigenvalues < -negative_threshold|``.

    Raises
    ------
    ConvergenceError
        If the eigensolver does not converge.
    """
    values = negative_eigenvalues(hermitian_eigenvalues(pt_matrix, settings), settings)
    return abs(stable_sum(values))


def log_negativity(n_e: float) -> float:
    """
    ``log2(2 N_e + 1)``.

    Raises
    ------
    ParameterDomainError
        If ``n_e`` is negative.

    Examples
    --------
    >>> log_negativity(0.5)
    1.0
    """
    if n_e < 0.0 or math.isnan(n_e):
        raise ParameterDomainError(f"negativity must be >= 0, got {n_e!r}")
    return math.log2(2.0 * n_e + 1.0)


@dataclass(frozen=True)
class EntanglementReport:
    """
    Negativity of one bipartition of a state.

    Parameters
    ----------
    bipartition : str
        Bipartition name.
    negativity : float
        ``N_e >= 0``.
    log_negativity : float
        ``log2(2 N_e + 1)``.
    negative_eigenvalues : tuple[float, ...]
        Negative eigenvalues of the partial transpose, ascending.
    truncation_error : float
        Bound on the shift of ``log_negativity`` caused by series truncation.
    dimension : int
        Dimension of the matrix that was diagonalized.
    method : str
        ``"partial-transpose"`` or ``"schmidt"``.
    """

    bipartition: str
    negativity: float
    log_negativity: float
    negative_eigenvalues: tuple[float, ...]
    truncation_error: float
    dimension: int
    method: str

    @classmethod
    def from_eigenvalues(
        cls,
        name: str,
        negatives: Sequence[float],
        truncation_error: float,
        dimension: int,
        method: str,
    ) -> "EntanglementReport":
        """Build a report whose ``log_negativity`` follows exactly from ``N_e``."""
        n_e = abs(stable_sum(negatives))
        return cls(
            bipartition=name,
            negativity=n_e,
            log_negativity=log_negativity(n_e),
            negative_eigenvalues=tuple(float(v) for v in sorted(negatives)),
            truncation_error=truncation_error,
            dimension=dimension,
            method=method,
        )

    @property
    def N_e(self) -> float:  # noqa: N802
        return self.negativity

    @property
    def LN(self) -> float:  # noqa: N802
        return self.log_negativity


def _coefficient_matrix(
    state: FockVector, spec: BipartitionSpec
) -> tuple[csr_matrix, int, int]:
    idx_a = [state.slots.index(s) for s in spec.side_a]
    idx_b = [state.slots.index(s) for s in spec.side_b]
    keys_a = sorted({tuple(occ[i] for i in idx_a) for occ, _ in state})
    keys_b = sorted({tuple(occ[i] for i in idx_b) for occ, _ in state})
    index_a = {k: i for i, k in enumerate(keys_a)}
    index_b = {k: i for i, k in enumerate(keys_b)}
    rows, cols, data = [], [], []
    for occ, amp in state:
        rows.append(index_a[tuple(occ[i] for i in idx_a)])
        cols.append(index_b[tuple(occ[i] for i in idx_b)])
        data.append(amp)
    shape = (len(keys_a), len(keys_b))
    return coo_matrix((data, (rows, cols)), shape=shape).tocsr(), *shape


def schmidt_weights(
    state: FockVector,
    spec: BipartitionSpec | str,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> NDArray[np.float64]:
    """
    Schmidt weights of a pure state across ``spec``, descending.

    Weights at or below ``settings.negative_threshold`` are rounding
    residue of the eigensolver and are dropped.
    """
    spec = bipartition(spec)
    if spec.traced_out(state.slots):
        raise ParameterDomainError(
            "Schmidt weights need a bipartition that keeps every slot",
            f"traced slots: {[str(s) for s in spec.traced_out(state.slots)]}",
        )
    if not len(state):
        raise DegenerateStateError("state has no nonzero amplitudes")
    coefficients, d_a, d_b = _coefficient_matrix(state, spec)
    gram = (
        coefficients @ coefficients.conj().T
        if d_a <= d_b
        else coefficients.conj().T @ coefficients
    )
    check_dimension(gram.shape[0], settings)
    weights = hermitian_eigenvalues(gram.tocsr(), settings)
    return np.sort(weights[weights > settings.negative_threshold])[::-1]


def _schmidt_report(
    state: FockVector, spec: BipartitionSpec, settings: NumericSettings
) -> EntanglementReport:
    weights = schmidt_weights(state, spec, settings)
    roots = np.sqrt(weights)
    pairs = -np.outer(roots, roots)[np.triu_indices(roots.size, k=1)]
    negatives = negative_eigenvalues(pairs, settings)
    n_e = max((stable_sum(roots) ** 2 - stable_sum(weights)) / 2.0, 0.0)
    return EntanglementReport(
        bipartition=spec.name,
        negativity=n_e,
        log_negativity=log_negativity(n_e),
        negative_eigenvalues=tuple(float(v) for v in negatives),
        truncation_error=LN_ERROR_FACTOR * state.negativity_error,
        dimension=int(roots.size),
        method=Method.SCHMIDT,
    )


def entanglement_report(
    state: FockVector,
    spec: BipartitionSpec | str,
    settings: NumericSettings = DEFAULT_SETTINGS,
) -> EntanglementReport:
    """
    Negativity and logarithmic negativity of ``state`` across ``spec``.

    Parameters
    ----------
    state : FockVector
        Out-basis state, e.g. from :func:`accel_ent.fock.build_bell_out`.
    spec : BipartitionSpec | str
        Bipartition or its registered name.
    settings : NumericSettings
        Thresholds, Jacobi controls and the dimension guard.

    Returns
    -------
    EntanglementReport
        With ``truncation_error = (2 / ln 2) * state.negativity_error``.

    Raises
    ------
    DimensionLimitError
        If the matrix to diagonalize is above the guard.
    ConvergenceError
        If the eigensolver does not converge.
    """
    spec = bipartition(spec)
    if not spec.traced_out(state.slots):
        return _schmidt_report(state, spec, settings)

    rho = reduced_density(state, spec, settings)
    eigenvalues = hermitian_eigenvalues(partial_transpose(rho), settings)
    return EntanglementReport.from_eigenvalues(
        spec.name,
        list(negative_eigenvalues(eigenvalues, settings)),
        LN_ERROR_FACTOR * rho.negativity_error,
        rho.dimension,
        Method.PARTIAL_TRANSPOSE,
    )


__all__ = [
    "LN_ERROR_FACTOR",
    "EntanglementReport",
    "Method",
    "entanglement_report",
    "log_negativity",
    "negative_eigenvalues",
    "negativity",
    "schmidt_weights",
]
