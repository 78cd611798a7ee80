"""
Cyclic Jacobi eigensolver for Hermitian matrices.

Partial transposes of the Fock-space density matrices handled here are
very sparse and split into many small independent blocks. The solver first
finds the connected components of the sparsity graph
(``scipy.sparse.csgraph.connected_components``) and diagonalizes each block
on its own.

Within a block each sweep visits every off-diagonal pair once, in
round-robin (parallel) order: the ``n // 2`` disjoint pairs of a round are
rotated together with vectorized column and row updates. Complex entries
are first made real by a diagonal phase on column/row ``q``, followed by
the usual real rotation

    theta = (a_qq - a_pp) / (2 |a_pq|)
    t = sign(theta) / (|theta| + sqrt(theta**2 + 1))
    c = 1 / sqrt(1 + t**2),  s = t c

which zeroes ``a_pq``. Real-symmetric blocks skip the phase step.
"""

from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.sparse import csr_matrix, issparse
from scipy.sparse.csgraph import connected_components

from accel_ent.errors import ConvergenceError
from accel_ent.settings import DEFAULT_SETTINGS, NumericSettings

IndexPair = tuple[NDArray[np.intp], NDArray[np.intp]]


@lru_cache(maxsize=256)
def _round_robin(n: int) -> tuple[IndexPair, ...]:
    # Circle method: every pair (p, q) appears in exactly one round.
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        matches = [(players[i], players[size - 1 - i]) for i in range(size // 2)]
        pairs = [(min(u, v), max(u, v)) for u, v in matches if u >= 0 and v >= 0]
        p = np.fromiter((pair[0] for pair in pairs), dtype=np.intp, count=len(pairs))
        q = np.fromiter((pair[1] for pair in pairs), dtype=np.intp, count=len(pairs))
        rounds.append((p, q))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def off_diagonal_norm(a: NDArray) -> float:
    """Frobenius norm of the off-diagonal part of ``a``."""
    off = np.array(a, copy=True)
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.vdot(off, off).real))


def _rotate_round(a: NDArray, p: NDArray[np.intp], q: NDArray[np.intp]) -> None:
    apq = a[p, q]
    magnitude = np.abs(apq)
    active = magnitude > 0.0
    if not active.any():
        return
    p, q, apq, magnitude = p[active], q[active], apq[active], magnitude[active]

    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * magnitude)
    t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    # J = D R with D the phase on q; A <- J^H A J
    phase_conj = np.conj(apq / magnitude)
    j_qp = -s * phase_conj
    j_qq = c * phase_conj

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = col_p * c + col_q * j_qp
    a[:, q] = col_p * s + col_q * j_qq

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c[:, None] * row_p + np.conj(j_qp)[:, None] * row_q
    a[q, :] = s[:, None] * row_p + np.conj(j_qq)[:, None] * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0


def jacobi_eigenvalues(
    block: ArrayLike, settings: NumericSettings = DEFAULT_SETTINGS
) -> NDArray[np.float64]:
    """
    Eigenvalues of a dense Hermitian matrix by cyclic Jacobi sweeps.

    Parameters
    ----------
    block : ArrayLike
        Square Hermitian matrix. A real-symmetric matrix (or a complex one
        with zero imaginary part) takes the real fast path.
    settings : NumericSettings
        ``jacobi_tolerance`` bounds the final off-diagonal norm and
        ``jacobi_max_sweeps`` caps the iteration.

    Returns
    -------
    NDArray[np.float64]
        Eigenvalues in ascending order.

    Raises
    ------
    ConvergenceError
        If the off-diagonal norm is still above tolerance after the last
        sweep; notes carry the dimension, sweep count and residual norm.
    """
    a = np.array(block, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {a.shape}")
    if np.iscomplexobj(a) and not np.any(a.imag):
        a = a.real.copy()
    elif not np.iscomplexobj(a):
        a = a.astype(np.float64)

    n = a.shape[0]
    if n == 1:
        return a.diagonal().real.astype(np.float64)

    rounds = _round_robin(n)
    residual = off_diagonal_norm(a)
    for _ in range(settings.jacobi_max_sweeps):
        if residual < settings.jacobi_tolerance:
            break
        for p, q in rounds:
            _rotate_round(a, p, q)
        residual = off_diagonal_norm(a)
    else:
        if residual >= settings.jacobi_tolerance:
            raise ConvergenceError(
                f"dimension {n}",
                f"sweeps {settings.jacobi_max_sweeps}",
                f"off-diagonal norm {residual:.3e} "
                f"(tolerance {settings.jacobi_tolerance:.1e})",
            )
    return np.sort(a.diagonal().real.astype(np.float64))


def connected_blocks(matrix: csr_matrix) -> list[NDArray[np.intp]]:
    """
    Index sets of the independent diagonal blocks of a sparse matrix.

    Two indices share a block when a chain of nonzero entries links them.
    """
    n = matrix.shape[0]
    pattern = csr_matrix(
        (np.ones(matrix.nnz), matrix.indices, matrix.indptr), shape=(n, n)
    )
    _, labels = connected_components(pattern, directed=False)
    order = np.argsort(labels, kind="stable")
    cuts = np.flatnonzero(np.diff(labels[order])) + 1
    return list(np.split(order, cuts))


def hermitian_eigenvalues(
    matrix: ArrayLike | csr_matrix, settings: NumericSettings = DEFAULT_SETTINGS
) -> NDArray[np.float64]:
    """
    Eigenvalues of a Hermitian matrix, block by block.

    Parameters
    ----------
    matrix : ArrayLike | scipy.sparse matrix
        Square Hermitian matrix, dense or sparse.
    settings : NumericSettings
        Jacobi tolerance and sweep cap.

    Returns
    -------
    NDArray[np.float64]
        All eigenvalues in ascending order.

    Raises
    ------
    ConvergenceError
        If any block fails to converge.
    """
    sparse = csr_matrix(matrix) if not issparse(matrix) else csr_matrix(matrix)
    sparse.eliminate_zeros()
    if sparse.shape[0] != sparse.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {sparse.shape}")

    diagonal = sparse.diagonal().real
    values: list[NDArray[np.float64]] = []
    for indices in connected_blocks(sparse):
        if indices.size == 1:
            values.append(diagonal[indices].astype(np.float64))
            continue
        block = sparse[indices][:, indices].toarray()
        try:
            values.append(jacobi_eigenvalues(block, settings))
        except ConvergenceError as e:
            e.add_note(f"block of {indices.size} within matrix of {sparse.shape[0]}")
            raise
    if not values:
        return np.zeros(0)
    return np.sort(np.concatenate(values))


__all__ = [
    "connected_blocks",
    "hermitian_eigenvalues",
    "jacobi_eigenvalues",
    "off_diagonal_norm",
]
