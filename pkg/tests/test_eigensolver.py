import numpy as np
import pytest

from rabiotto.eigensolver import EigensolverError, hermitian_eigh, symmetric_eigh


def charpoly_roots(m):
    """Independent eigenvalue oracle: Faddeev-LeVerrier characteristic
    polynomial coefficients followed by companion-matrix root finding."""
    n = m.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    mk = np.array(m, dtype=float)
    for k in range(1, n + 1):
        coeffs[k] = -np.trace(mk) / k
        if k < n:
            mk = m @ (mk + coeffs[k] * np.eye(n))
    return np.sort(np.roots(coeffs).real)


class TestSymmetricEigh:
    def test_diagonal(self):
        w, v = symmetric_eigh(np.diag([3.0, 1.0, 2.0]))
        np.testing.assert_allclose(w, [1.0, 2.0, 3.0], atol=1e-14)
        # eigenvectors are the permuted standard basis
        np.testing.assert_allclose(np.abs(v), np.eye(3)[:, [1, 2, 0]], atol=1e-14)

    def test_two_by_two_offdiagonal(self):
        w, v = symmetric_eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-15)
        expected = np.array([1.0, -1.0]) / np.sqrt(2.0)
        assert min(np.max(np.abs(v[:, 0] - s * expected)) for s in (1, -1)) < 1e-14

    def test_against_charpoly_oracle(self, rng):
        for n in (3, 5, 7):
            m = rng.normal(size=(n, n))
            m = m + m.T
            w, _ = symmetric_eigh(m)
            np.testing.assert_allclose(w, charpoly_roots(m), atol=1e-8)

    def test_residuals_and_orthonormality(self, rng):
        for n in (2, 11, 60):
            m = rng.normal(size=(n, n))
            m = m + m.T
            w, v = symmetric_eigh(m)
            assert np.all(np.diff(w) >= 0)
            assert np.linalg.norm(m @ v - v * w, axis=0).max() < 1e-12 * max(1, n)
            assert np.max(np.abs(v.T @ v - np.eye(n))) < 1e-13 * max(1, n)

    def test_matches_lapack(self, rng):
        m = rng.normal(size=(40, 40))
        m = m + m.T
        w, _ = symmetric_eigh(m)
        np.testing.assert_allclose(w, np.linalg.eigvalsh(m), atol=1e-11)

    def test_eigenvalues_only_path(self, rng):
        m = rng.normal(size=(25, 25))
        m = m + m.T
        w_full, _ = symmetric_eigh(m)
        w_only, v = symmetric_eigh(m, vectors=False)
        assert v is None
        np.testing.assert_allclose(w_only, w_full, atol=1e-12)

    def test_degenerate_spectrum(self):
        # fourfold-degenerate eigenvalue; vectors must still be orthonormal
        m = np.diag([2.0, 2.0, 2.0, 2.0, 5.0])
        q, _ = np.linalg.qr(np.random.default_rng(7).normal(size=(5, 5)))
        m = q @ m @ q.T
        w, v = symmetric_eigh(m)
        np.testing.assert_allclose(w, [2, 2, 2, 2, 5], atol=1e-12)
        assert np.max(np.abs(v.T @ v - np.eye(5))) < 1e-12
        assert np.linalg.norm(m @ v - v * w, axis=0).max() < 1e-12

    def test_trace_equals_eigenvalue_sum(self, rng):
        m = rng.normal(size=(30, 30))
        m = m + m.T
        w, _ = symmetric_eigh(m)
        assert abs(w.sum() - np.trace(m)) < 1e-10

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            symmetric_eigh(np.ones((2, 3)))

    def test_one_by_one(self):
        w, v = symmetric_eigh(np.array([[4.0]]))
        assert w[0] == 4.0 and v[0, 0] == 1.0

    def test_nonconvergence_reports_iterations(self):
        m = np.array([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(EigensolverError, match="0 iterations"):
            symmetric_eigh(m, max_iter=0)


class TestHermitianEigh:
    def test_pauli_y_like(self):
        m = np.array([[0.0, -1.0j], [1.0j, 0.0]])
        w, v = hermitian_eigh(m)
        np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-14)
        assert np.linalg.norm(m @ v - v * w, axis=0).max() < 1e-13

    def test_random_hermitian(self, rng):
        for n in (4, 9, 20):
            x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            m = x + x.conj().T
            w, v = hermitian_eigh(m)
            np.testing.assert_allclose(w, np.linalg.eigvalsh(m), atol=1e-10)
            assert np.linalg.norm(m @ v - v * w, axis=0).max() < 1e-11
            assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-11

    def test_degenerate_hermitian(self, rng):
        # complex Hermitian with a degenerate pair
        d = np.diag([1.0, 1.0, 3.0])
        x = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        q, _ = np.linalg.qr(x)
        m = q @ d @ q.conj().T
        w, v = hermitian_eigh(m)
        np.testing.assert_allclose(w, [1, 1, 3], atol=1e-12)
        assert np.max(np.abs(v.conj().T @ v - np.eye(3))) < 1e-10
        assert np.linalg.norm(m @ v - v * w, axis=0).max() < 1e-11

    def test_real_input_shortcut(self, rng):
        m = rng.normal(size=(6, 6))
        m = (m + m.T).astype(complex)
        w, v = hermitian_eigh(m)
        assert np.max(np.abs(v.imag)) == 0.0
        np.testing.assert_allclose(w, np.linalg.eigvalsh(m), atol=1e-12)
