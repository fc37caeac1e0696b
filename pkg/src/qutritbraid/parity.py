"""2-qutrit parity grading and the 3x3 sector reduction.

The parity operator P|ij> = w^(i+j)|ij> splits the 9-dim pair space into
three 3-dim sectors with eigenvalues w^2, 1, w.  Braid generators and
their Yang-Baxterizations commute with P, so they block-diagonalize under
the basis reordering U into three 3x3 matrices; the w^2 sector
{|11>,|23>,|32>} carries the worked reduced matrices A12(theta) and
A23(theta).
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import OMEGA, OMEGA2, commutator_norm

# Sector listing: (key, parity eigenvalue, 2-qutrit labels, 0-based natural
# indices).  Natural ordering is |11>,|12>,|13>,|21>,...,|33>.
SECTORS = (
    ("omega2", OMEGA2, ("11", "23", "32"), (0, 5, 7)),
    ("one", 1.0 + 0.0j, ("12", "21", "33"), (1, 3, 8)),
    ("omega", OMEGA, ("13", "22", "31"), (2, 4, 6)),
)

# Natural index order after reordering: concatenation of the sector bases.
_PERM = tuple(idx for _, _, _, idxs in SECTORS for idx in idxs)


@dataclass(frozen=True)
class SectorDecomposition:
    """Three 3x3 blocks keyed by sector name, plus off-block leakage."""
    blocks: dict
    leakage: float


def parity_operator():
    """9x9 diagonal P with entry w^(i+j) at |ij>; P^3 = 1."""
    diag = [OMEGA ** ((i + j) % 3) for i in range(1, 4) for j in range(1, 4)]
    return np.diag(np.array(diag, dtype=complex))


def reorder_unitary():
    """Permutation U whose conjugation U^dag op U sorts the parity sectors.

    Column j of U holds a single 1 at the natural index of the j-th vector
    of the reordered basis (|11>,|23>,|32>,|12>,|21>,|33>,|13>,|22>,|31>).
    """
    u = np.zeros((9, 9), dtype=complex)
    for col, row in enumerate(_PERM):
        u[row, col] = 1.0
    return u


def sector_blocks(op, comm_tol=1e-10):
    """Block decomposition of a parity-commuting 9x9 operator.

    Conjugates by the reordering permutation, extracts the three diagonal
    3x3 blocks and reports the Frobenius mass left outside them.  Inputs
    that fail [op, P] = 0 within ``comm_tol`` are rejected rather than
    silently truncated.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (9, 9):
        raise ValueError(f"expected a 9x9 operator, got {op.shape}")
    cn = commutator_norm(op, parity_operator())
    if cn >= comm_tol:
        raise ValueError(f"operator does not commute with parity: "
                         f"||[op, P]||_F = {cn:.3e}")
    u = reorder_unitary()
    d = u.conj().T @ op @ u
    blocks = {}
    mask = np.zeros((9, 9), dtype=bool)
    for k, (key, _, _, _) in enumerate(SECTORS):
        sl = slice(3 * k, 3 * k + 3)
        blocks[key] = d[sl, sl].copy()
        mask[sl, sl] = True
    leakage = float(np.linalg.norm(d[~mask]))
    return SectorDecomposition(blocks=blocks, leakage=leakage)


def reduced_a12(theta):
    """The w^2-sector block of the Yang-Baxterized B12: diag(e^-it, e^it, e^-it)."""
    return np.diag(np.array([np.exp(-1j * theta),
                             np.exp(1j * theta),
                             np.exp(-1j * theta)], dtype=complex))


def reduced_a23(theta):
    """The w^2-sector block of the Yang-Baxterized B23; unitary for all theta."""
    c = math.cos(theta) - 1j * math.sin(theta) / 3.0
    p = (2j / 3.0) * OMEGA2 * math.sin(theta)   # one step forward (cyclic)
    q = (2j / 3.0) * OMEGA * math.sin(theta)    # one step backward
    return np.array([[c, p, q],
                     [q, c, p],
                     [p, q, c]], dtype=complex)
