"""
Tests for the block-sparse cyclic Jacobi eigensolver.
"""

from dataclasses import replace

import numpy as np
import pytest
from scipy.sparse import block_diag, csr_matrix

from accel_ent.entanglement import hermitian_eigenvalues, jacobi_eigenvalues
from accel_ent.entanglement.jacobi import connected_blocks, off_diagonal_norm
from accel_ent.errors import ConvergenceError
from accel_ent.settings import NumericSettings


def _random_symmetric(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2.0


def _random_hermitian(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2.0


class TestJacobiEigenvalues:
    """Tests for the dense Jacobi solver."""

    @pytest.mark.parametrize("n", [2, 3, 7, 16])
    def test_real_symmetric(self, n: int) -> None:
        """Test against numpy for real-symmetric matrices."""
        a = _random_symmetric(n, seed=n)
        np.testing.assert_allclose(
            jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-12
        )

    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_complex_hermitian(self, n: int) -> None:
        """Test against numpy for complex Hermitian matrices."""
        a = _random_hermitian(n, seed=100 + n)
        np.testing.assert_allclose(
            jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-12
        )

    def test_complex_with_zero_imaginary(self) -> None:
        """Test that a complex-typed real matrix takes the real path."""
        a = _random_symmetric(6, seed=3).astype(complex)
        values = jacobi_eigenvalues(a)
        assert values.dtype == np.float64
        np.testing.assert_allclose(values, np.linalg.eigvalsh(a.real), atol=1e-12)

    def test_one_by_one(self) -> None:
        """Test the trivial block."""
        np.testing.assert_array_equal(jacobi_eigenvalues([[-0.25]]), [-0.25])

    def test_diagonal_input(self) -> None:
        """Test that an already diagonal matrix is returned sorted."""
        values = jacobi_eigenvalues(np.diag([3.0, -1.0, 2.0]))
        np.testing.assert_array_equal(values, [-1.0, 2.0, 3.0])

    def test_not_square(self) -> None:
        """Test that non-square input raises."""
        with pytest.raises(ValueError, match="square"):
            jacobi_eigenvalues(np.zeros((2, 3)))

    def test_sweep_cap(self) -> None:
        """Test that a single sweep on a dense matrix does not converge."""
        settings = replace(NumericSettings(), jacobi_max_sweeps=1)
        with pytest.raises(ConvergenceError) as excinfo:
            jacobi_eigenvalues(_random_symmetric(12, seed=7), settings)
        assert any("dimension 12" in note for note in excinfo.value.details)

    def test_off_diagonal_norm(self) -> None:
        """Test the Frobenius norm of the off-diagonal part."""
        a = np.array([[1.0, 3.0], [4.0, 2.0]])
        assert off_diagonal_norm(a) == pytest.approx(5.0)


class TestBlockSparse:
    """Tests for the block decomposition and the sparse entry point."""

    def test_connected_blocks(self) -> None:
        """Test that independent blocks and isolated entries are separated."""
        matrix = csr_matrix(
            block_diag(
                [np.ones((2, 2)), np.array([[5.0]]), _random_symmetric(3, seed=1)]
            )
        )
        blocks = connected_blocks(matrix)
        sizes = sorted(block.size for block in blocks)
        assert sizes == [1, 2, 3]
        covered = np.sort(np.concatenate(blocks))
        np.testing.assert_array_equal(covered, np.arange(6))

    def test_sparse_matches_dense(self) -> None:
        """Test that block-wise eigenvalues equal the full spectrum."""
        blocks = [
            _random_hermitian(4, seed=11),
            np.array([[0.5]]),
            _random_symmetric(3, seed=2),
        ]
        dense = block_diag(blocks).toarray()
        np.testing.assert_allclose(
            hermitian_eigenvalues(csr_matrix(dense)),
            np.linalg.eigvalsh(dense),
            atol=1e-12,
        )

    def test_permuted_blocks(self) -> None:
        """Test blocks whose indices are interleaved."""
        dense = block_diag([_random_symmetric(3, 5), _random_symmetric(3, 6)]).toarray()
        perm = np.array([0, 3, 1, 4, 2, 5])
        shuffled = dense[np.ix_(perm, perm)]
        assert len(connected_blocks(csr_matrix(shuffled))) == 2
        np.testing.assert_allclose(
            hermitian_eigenvalues(shuffled), np.linalg.eigvalsh(dense), atol=1e-12
        )

    def test_convergence_note(self) -> None:
        """Test that a failing block reports its size."""
        settings = replace(NumericSettings(), jacobi_max_sweeps=1)
        with pytest.raises(ConvergenceError) as excinfo:
            hermitian_eigenvalues(_random_symmetric(10, seed=4), settings)
        assert any("block of 10" in note for note in excinfo.value.details)

