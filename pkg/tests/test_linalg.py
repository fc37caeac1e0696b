import numpy as np
import pytest

from qutritbraid.linalg import (OMEGA, QUTRIT_X, QUTRIT_Z, adjoint,
                                frobenius_distance, hermitian_eigenvalues,
                                kron, mat_mul)

I3 = np.eye(3, dtype=complex)


def brute_matmul(a, b):
    """Independent triple-loop product oracle."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i, j] += a[i, k] * b[k, j]
    return out


def brute_kron(a, b):
    """Independent block-assembly Kronecker oracle."""
    n, m = a.shape[0], b.shape[0]
    out = np.zeros((n * m, n * m), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[i * m:(i + 1) * m, j * m:(j + 1) * m] = a[i, j] * b
    return out


def random_complex(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def test_matmul_identity():
    assert np.allclose(mat_mul(I3, I3), I3)


def test_shift_cubes_to_identity():
    assert np.linalg.norm(mat_mul(mat_mul(QUTRIT_X, QUTRIT_X), QUTRIT_X) - I3) < 1e-15


def test_matmul_against_brute_force():
    got = mat_mul(QUTRIT_Z, QUTRIT_X)
    assert np.linalg.norm(got - brute_matmul(QUTRIT_Z, QUTRIT_X)) < 1e-15


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(I3, np.eye(9, dtype=complex))


def test_kron_identities():
    assert np.allclose(kron(I3, I3), np.eye(9))


def test_kron_zx_against_brute_force():
    got = kron(QUTRIT_Z, QUTRIT_X)
    assert np.linalg.norm(got - brute_kron(QUTRIT_Z, QUTRIT_X)) < 1e-15
    # Z_22 * X_12 = omega lands at 1-based entry (4, 5)
    assert abs(got[3, 4] - OMEGA) < 1e-15


def test_kron_left_factor_most_significant(b12):
    diag = np.diag([np.exp(-1j * np.pi / 3), np.exp(1j * np.pi / 3),
                    np.exp(-1j * np.pi / 3)])
    assert np.linalg.norm(kron(diag, I3) - b12) < 1e-12


def test_kron_associativity(rng):
    for _ in range(5):
        a, b, c = (random_complex(rng, 3) for _ in range(3))
        assert np.linalg.norm(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12


def test_mixed_product(rng):
    for _ in range(5):
        a, b, c, d = (random_complex(rng, 3) for _ in range(4))
        lhs = kron(a, b) @ kron(c, d)
        rhs = kron(a @ c, b @ d)
        assert np.linalg.norm(lhs - rhs) < 1e-12


def test_adjoint():
    assert np.allclose(adjoint(I3), I3)
    xd = adjoint(QUTRIT_X)
    assert np.linalg.norm(xd @ QUTRIT_X - I3) < 1e-15


def test_adjoint_involution(rng):
    a = random_complex(rng, 9)
    assert np.allclose(adjoint(adjoint(a)), a)


def test_braid_unitary(b23):
    assert np.linalg.norm(adjoint(b23) @ b23 - np.eye(9)) < 1e-12


def test_frobenius_distance_basics():
    assert frobenius_distance(I3, I3) == 0.0
    assert abs(frobenius_distance(I3, np.zeros((3, 3))) - np.sqrt(3)) < 1e-15
    with pytest.raises(ValueError):
        frobenius_distance(I3, np.eye(9))


def test_frobenius_triangle_inequality(rng):
    for _ in range(10):
        a, b, c = (random_complex(rng, 3) for _ in range(3))
        assert (frobenius_distance(a, c)
                <= frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-12)


def test_eigenvalues_diagonal():
    assert np.allclose(hermitian_eigenvalues(np.diag([1 / 3] * 3)), [1 / 3] * 3)
    assert np.allclose(hermitian_eigenvalues(np.diag([1.0, 0, 0])), [1, 0, 0])


def test_eigenvalues_random_hermitian(rng):
    for _ in range(5):
        lam = np.sort(rng.normal(size=4))[::-1]
        q, _ = np.linalg.qr(random_complex(rng, 4))
        h = q @ np.diag(lam) @ q.conj().T
        got = hermitian_eigenvalues(h)
        assert np.linalg.norm(got - lam) < 1e-10
        assert abs(np.sum(got) - np.trace(h).real) < 1e-10


def test_eigenvalues_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eigenvalues(QUTRIT_X)


def test_eigenvalues_of_psi_quarter_reduced_density():
    from qutritbraid import partial_trace, psi_theta
    rho = partial_trace(psi_theta(np.pi / 4), 1)
    # Schmidt-form shortcut oracle: squared amplitude moduli at theta=pi/4
    expected = np.array([5 / 9, 2 / 9, 2 / 9])
    assert np.linalg.norm(hermitian_eigenvalues(rho) - expected) < 1e-10
