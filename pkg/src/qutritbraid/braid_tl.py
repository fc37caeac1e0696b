"""Temperley-Lieb elements and braid generators, d = sqrt(3).

Two distinct T-L families live here and must not be conflated:

* the *nearest* family T_i = (1/sqrt3)(1 + w^2 C_i^dag C_{i+1}
  + w^2 C_i C_{i+1}^dag), indexed by adjacent parafermion pairs
  (2N - 1 elements on an N-qutrit register);
* the *localized* family T'_i = I ... I (x) T' (x) I ... I, where T' is a
  fixed 9x9 stencil acting on qutrits (i, i+1).

Both satisfy T^2 = sqrt(3) T, T T' T = T for adjacent elements, and far
commutation.  Braid generators follow from B = w (exp(-i*pi/6) T - 1).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import (OMEGA, OMEGA2, PHASE_M30, SQRT3, identity, kron_all)
from .report import AlgebraReport

_W, _W2 = OMEGA, OMEGA2

# The localized 9x9 T-L stencil on a qutrit pair, in the natural basis
# |11>,|12>,...,|33>.  Entries are exact constants times 1/sqrt(3).
# Equal to sqrt(3)(|a><a| + |b><b| + |g><g|) over the three maximally
# entangled pair states (see the topo module); Hermiticity fixes entry
# (5,7) to w^2 even though one published rendering shows w there.
TL_STENCIL = np.array([
    [1,   0,  0,   0,   0,  _W,  0, _W2,  0],
    [0,   1,  0,   1,   0,   0,  0,   0,  1],
    [0,   0,  1,   0, _W2,   0, _W,   0,  0],
    [0,   1,  0,   1,   0,   0,  0,   0,  1],
    [0,   0, _W,   0,   1,   0, _W2,  0,  0],
    [_W2, 0,  0,   0,   0,   1,  0,  _W,  0],
    [0,   0, _W2,  0,  _W,   0,  1,   0,  0],
    [_W,  0,  0,   0,   0, _W2,  0,   1,  0],
    [0,   1,  0,   1,   0,   0,  0,   0,  1],
], dtype=complex) / SQRT3


# Literal 9x9 braid generators on the qutrit pair, natural basis.  These
# are published reference values and acceptance targets; the construction
# paths (parafermions -> T -> B) are what gets tested against them.
B12_LITERAL = np.kron(
    np.diag(np.array([PHASE_M30 ** 2, np.conj(PHASE_M30) ** 2, PHASE_M30 ** 2])),
    np.eye(3, dtype=complex))

B23_LITERAL = (1j * _W / SQRT3) * np.array([
    [_W, 0,  0,  0,  0, _W,  0,  1,  0],
    [0, _W,  0, _W,  0,  0,  0,  0,  1],
    [0,  0, _W,  0, _W,  0,  1,  0,  0],
    [0,  1,  0, _W,  0,  0,  0,  0, _W],
    [0,  0,  1,  0, _W,  0, _W,  0,  0],
    [1,  0,  0,  0,  0, _W,  0, _W,  0],
    [0,  0, _W,  0,  1,  0, _W,  0,  0],
    [_W, 0,  0,  0,  0,  1,  0, _W,  0],
    [0, _W,  0,  1,  0,  0,  0,  0, _W],
], dtype=complex)


class TLKind(Enum):
    NEAREST = "nearest"
    LOCALIZED = "localized"


@dataclass(frozen=True)
class TLFamily:
    kind: TLKind
    nsites: int
    elements: tuple  # elements[i] = T_{i+1}


def tl_nearest(pset, i):
    """T_i from the adjacent parafermion pair (C_i, C_{i+1})."""
    n_ops = 2 * pset.nsites
    if not 1 <= i <= n_ops - 1:
        raise ValueError(f"index i must be in 1..{n_ops - 1}, got {i}")
    ci, cid = pset.c(i), pset.cdag(i)
    cj, cjd = pset.c(i + 1), pset.cdag(i + 1)
    eye = identity(pset.dim)
    return (eye + OMEGA2 * (cid @ cj) + OMEGA2 * (ci @ cjd)) / SQRT3


def tl_localized(nsites, i):
    """T'_i: the 9x9 stencil on qutrits (i, i+1), identity elsewhere."""
    if nsites < 2:
        raise ValueError("localized family needs at least 2 qutrits")
    if not 1 <= i <= nsites - 1:
        raise ValueError(f"index i must be in 1..{nsites - 1}, got {i}")
    factors = []
    if i > 1:
        factors.append(identity(3 ** (i - 1)))
    factors.append(TL_STENCIL)
    if i < nsites - 1:
        factors.append(identity(3 ** (nsites - i - 1)))
    return kron_all(*factors)


def nearest_family(pset):
    elems = tuple(tl_nearest(pset, i) for i in range(1, 2 * pset.nsites))
    return TLFamily(TLKind.NEAREST, pset.nsites, elems)


def localized_family(nsites):
    elems = tuple(tl_localized(nsites, i) for i in range(1, nsites))
    return TLFamily(TLKind.LOCALIZED, nsites, elems)


def braid_from_tl(t, idem_tol=1e-10):
    """B = w (exp(-i*pi/6) T - 1); unitary whenever T is a valid T-L element.

    The input is rejected unless it satisfies T^2 = sqrt(3) T within
    ``idem_tol`` (loose enough for T matrices reassembled from ket-bra
    sums, which carry accumulated rounding).
    """
    t = np.asarray(t, dtype=complex)
    res = np.linalg.norm(t @ t - SQRT3 * t)
    if res >= idem_tol:
        raise ValueError(
            f"input fails the T-L idempotency check: ||T^2 - sqrt3 T||_F = {res:.3e}")
    return OMEGA * (PHASE_M30 * t - identity(t.shape[0]))


def verify_tl_algebra(family, tol):
    """Residuals of the T-L relations for the given family.

    Covers T_i^2 = sqrt3 T_i and Hermiticity for every element,
    T_i T_{i+-1} T_i = T_i for adjacent pairs, and [T_i, T_j] = 0 for
    |i - j| >= 2.  Adjacent commutator norms (nonzero) are recorded in
    the report notes, not asserted.
    """
    rep = AlgebraReport()
    elems = family.elements
    n = len(elems)
    for i, t in enumerate(elems, start=1):
        rep.add(f"T{i}^2 - sqrt3 T{i}", np.linalg.norm(t @ t - SQRT3 * t), tol)
        rep.add(f"T{i} Hermitian", np.linalg.norm(t - t.conj().T), tol)
    for i in range(n - 1):
        a, b = elems[i], elems[i + 1]
        rep.add(f"T{i + 1}T{i + 2}T{i + 1} - T{i + 1}",
                np.linalg.norm(a @ b @ a - a), tol)
        rep.add(f"T{i + 2}T{i + 1}T{i + 2} - T{i + 2}",
                np.linalg.norm(b @ a @ b - b), tol)
    adjacent = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = np.linalg.norm(elems[i] @ elems[j] - elems[j] @ elems[i])
            if j - i >= 2:
                rep.add(f"[T{i + 1}, T{j + 1}]", comm, tol)
            else:
                adjacent[f"[T{i + 1}, T{j + 1}]"] = float(comm)
    if adjacent:
        rep.notes["adjacent_commutator_norms"] = adjacent
    return rep


def verify_braid_relation(b1, b2, tol=None):
    """||b1 b2 b1 - b2 b1 b2||_F.  ``tol`` is informational only."""
    b1 = np.asarray(b1, dtype=complex)
    b2 = np.asarray(b2, dtype=complex)
    if b1.shape != b2.shape:
        raise ValueError(f"dimension mismatch: {b1.shape} vs {b2.shape}")
    return float(np.linalg.norm(b1 @ b2 @ b1 - b2 @ b1 @ b2))
