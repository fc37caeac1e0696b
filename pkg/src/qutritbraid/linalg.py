"""Dense complex linear algebra helpers for small operators (dim <= 81).

Everything here is a thin, checked wrapper around numpy.  Matrices are
plain complex ndarrays; all functions are pure and never mutate their
arguments.  Indexing in error messages and docs is 1-based to match the
|1>,|2>,|3> qutrit labels used throughout the package.
"""

import numpy as np

# Cube root of unity, stored to full double precision (no trig calls).
SQRT3 = np.sqrt(3.0)
OMEGA = complex(-0.5, SQRT3 / 2.0)          # exp(2i*pi/3)
OMEGA2 = complex(-0.5, -SQRT3 / 2.0)        # exp(-2i*pi/3) = conj(OMEGA)
PHASE_M30 = complex(SQRT3 / 2.0, -0.5)      # exp(-i*pi/6)

# Single-qutrit clock and shift matrices.
QUTRIT_Z = np.diag([1.0 + 0.0j, OMEGA, OMEGA2])
QUTRIT_X = np.array([[0, 1, 0],
                     [0, 0, 1],
                     [1, 0, 0]], dtype=complex)


def identity(dim):
    return np.eye(dim, dtype=complex)


def mat_mul(a, b):
    """Matrix product with an explicit dimension check."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def kron(a, b):
    """Tensor product; the left factor is the most significant index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*factors):
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def adjoint(a):
    """Conjugate transpose."""
    return np.asarray(a, dtype=complex).conj().T


def frobenius_distance(a, b):
    """sqrt(sum |a_ij - b_ij|^2); the residual metric for identity checks."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def commutator_norm(a, b):
    return float(np.linalg.norm(a @ b - b @ a))


def hermitian_eigenvalues(h, herm_tol=1e-10):
    """Real eigenvalues of a Hermitian matrix, in descending order.

    Raises ValueError if the input fails the Hermiticity check at
    ``herm_tol`` in Frobenius distance.
    """
    h = np.asarray(h, dtype=complex)
    dist = frobenius_distance(h, adjoint(h))
    if dist >= herm_tol:
        raise ValueError(f"matrix is not Hermitian (||H - H^dag||_F = {dist:.3e})")
    vals = np.linalg.eigvalsh(h)
    return np.sort(vals)[::-1]
