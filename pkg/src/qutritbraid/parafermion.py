"""Z3 parafermion operators on an N-qutrit register.

The 2N operators C_1 .. C_2N are built by the qutrit Jordan-Wigner map:
a string of clock matrices Z on sites 1..k-1, followed by X (odd index)
or XZ (even index) on site k, identity beyond.  Site k carries the
parafermion pair (2k-1, 2k).

The exchange phase convention verified here is C_i C_j = w C_j C_i for
i < j (and w^2 for i > j), with w = exp(2i*pi/3).
"""

from dataclasses import dataclass

import numpy as np

from .linalg import (OMEGA, QUTRIT_X, QUTRIT_Z, adjoint, identity, kron_all)
from .report import AlgebraReport

MAX_SITES = 6  # 3^6 = 729; the artifact needs at most N = 4


@dataclass(frozen=True)
class ParafermionSet:
    """The 2N operators (C_k, C_k^dag), each of dimension 3^nsites."""
    nsites: int
    ops: tuple  # ops[k] = (C_{k+1}, C_{k+1}^dag), 0-based storage

    @property
    def dim(self):
        return 3 ** self.nsites

    def c(self, i):
        """C_i, 1-based index in 1..2N."""
        return self.ops[i - 1][0]

    def cdag(self, i):
        return self.ops[i - 1][1]


def build_parafermions(nsites):
    """Construct the 2*nsites parafermion operators on 3^nsites dimensions."""
    if not 1 <= nsites <= MAX_SITES:
        raise ValueError(f"nsites must be in 1..{MAX_SITES}, got {nsites}")
    eye3 = identity(3)
    z = QUTRIT_Z
    zdag = adjoint(z)
    x = QUTRIT_X
    xz = QUTRIT_X @ QUTRIT_Z
    ops = []
    for k in range(1, nsites + 1):
        left = [z] * (k - 1)
        left_dag = [zdag] * (k - 1)
        right = [eye3] * (nsites - k)
        c_odd_dag = kron_all(*(left + [x] + right))
        c_odd = kron_all(*(left_dag + [adjoint(x)] + right))
        c_even_dag = kron_all(*(left + [xz] + right))
        c_even = kron_all(*(left_dag + [adjoint(xz)] + right))
        ops.append((c_odd, c_odd_dag))
        ops.append((c_even, c_even_dag))
    return ParafermionSet(nsites=nsites, ops=tuple(ops))


def verify_parafermion_algebra(pset, tol):
    """Residuals of the defining Z3-parafermion relations.

    Checks, for every ordered pair i < j, ||C_i C_j - w C_j C_i||_F, and
    for every i the relations C_i^2 = C_i^dag, (C_i^dag)^2 = C_i,
    C_i^3 = 1 and unitarity.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rep = AlgebraReport()
    n_ops = 2 * pset.nsites
    eye = identity(pset.dim)
    for i in range(1, n_ops + 1):
        ci, cid = pset.c(i), pset.cdag(i)
        rep.add(f"C{i}^2 - C{i}^dag", np.linalg.norm(ci @ ci - cid), tol)
        rep.add(f"(C{i}^dag)^2 - C{i}", np.linalg.norm(cid @ cid - ci), tol)
        rep.add(f"C{i}^3 - 1", np.linalg.norm(ci @ ci @ ci - eye), tol)
        rep.add(f"C{i} unitary", np.linalg.norm(cid @ ci - eye), tol)
    for i in range(1, n_ops + 1):
        for j in range(i + 1, n_ops + 1):
            ci, cj = pset.c(i), pset.c(j)
            rep.add(f"C{i}C{j} - w C{j}C{i}",
                    np.linalg.norm(ci @ cj - OMEGA * (cj @ ci)), tol)
    rep.notes["phase_convention"] = (
        "verified C_i C_j = w C_j C_i for i < j (w = exp(2i*pi/3)); "
        "the reverse order carries w^2"
    )
    return rep
