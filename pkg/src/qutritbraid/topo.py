"""Maximally entangled pair states, the 4-qutrit fusion basis, and the
projection of the localized 81x81 operators to the 2x2 Jones representation.

The three pair states (one per parity sector)

    a = (1/sqrt3)(|11> + w^2|23> + w|32>)
    b = (1/sqrt3)(|12> + |21> + |33>)
    g = (1/sqrt3)(|13> + w|22> + w^2|31>)

assemble both the ket-bra form of the localized T-L element,
T' = sqrt3 (|a><a| + |b><b| + |g><g|), and the two fusion-basis vectors

    e1 = (1/sqrt3)(a_12 g_34 + b_12 b_34 + g_12 a_34)
    e2 = (i/sqrt2)(w a_23 g_41 + b_23 b_41 + w g_23 a_41) - (1/sqrt2) e1.

A pair state on sites (i, j) binds the FIRST slot of its coefficient
table to site i and the second to site j; this is what makes the wrapped
pair (4, 1) in e2 well-defined.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product

import numpy as np

from .linalg import OMEGA, OMEGA2, SQRT3, identity, kron_all


class PairStateKind(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


def _coeff_table(kind):
    c = np.zeros((3, 3), dtype=complex)
    if kind is PairStateKind.ALPHA:
        c[0, 0], c[1, 2], c[2, 1] = 1.0, OMEGA2, OMEGA
    elif kind is PairStateKind.BETA:
        c[0, 1] = c[1, 0] = c[2, 2] = 1.0
    elif kind is PairStateKind.GAMMA:
        c[0, 2], c[1, 1], c[2, 0] = 1.0, OMEGA, OMEGA2
    else:
        raise ValueError(f"unknown pair-state kind: {kind}")
    return c / SQRT3


PAIR_COEFFS = {k: _coeff_table(k) for k in PairStateKind}


@dataclass(frozen=True)
class TopologicalBasis:
    """The two orthonormal 4-qutrit fusion-basis vectors."""
    e1: np.ndarray
    e2: np.ndarray


def _config_index(config):
    """Configuration (n_1..n_N), n in 0..2, site 1 most significant."""
    idx = 0
    for n in config:
        idx = 3 * idx + n
    return idx


def pair_state(kind, site_i, site_j, nsites):
    """Pair state on sites (i, j); remaining sites carry the filler |1>.

    The first ket slot of the coefficient table sits on site_i, the
    second on site_j.  For nsites = 2 this is the bare 9-dim pair state.
    """
    _check_sites(site_i, site_j, nsites)
    c = PAIR_COEFFS[kind]
    vec = np.zeros(3 ** nsites, dtype=complex)
    for a, b in product(range(3), repeat=2):
        config = [0] * nsites
        config[site_i - 1] = a
        config[site_j - 1] = b
        vec[_config_index(config)] = c[a, b]
    return vec


def pair_product(kind_a, sites_a, kind_b, sites_b, nsites=4):
    """Product of two pair states on disjoint site pairs, as a 3^N vector."""
    ia, ja = sites_a
    ib, jb = sites_b
    _check_sites(ia, ja, nsites)
    _check_sites(ib, jb, nsites)
    if {ia, ja} & {ib, jb}:
        raise ValueError(f"site pairs overlap: {sites_a} and {sites_b}")
    if len({ia, ja, ib, jb}) != nsites:
        raise ValueError("the two pairs must cover all sites")
    ca = PAIR_COEFFS[kind_a]
    cb = PAIR_COEFFS[kind_b]
    vec = np.zeros(3 ** nsites, dtype=complex)
    for config in product(range(3), repeat=nsites):
        vec[_config_index(config)] = (ca[config[ia - 1], config[ja - 1]]
                                      * cb[config[ib - 1], config[jb - 1]])
    return vec


def _check_sites(i, j, nsites):
    if not (1 <= i <= nsites and 1 <= j <= nsites):
        raise ValueError(f"sites ({i}, {j}) out of range for nsites = {nsites}")
    if i == j:
        raise ValueError("pair sites must be distinct")


def build_topological_basis():
    """The 81-dim fusion-basis vectors e1, e2; orthonormal by construction."""
    A, B, G = PairStateKind.ALPHA, PairStateKind.BETA, PairStateKind.GAMMA
    e1 = (pair_product(A, (1, 2), G, (3, 4))
          + pair_product(B, (1, 2), B, (3, 4))
          + pair_product(G, (1, 2), A, (3, 4))) / SQRT3
    cross = (OMEGA * pair_product(A, (2, 3), G, (4, 1))
             + pair_product(B, (2, 3), B, (4, 1))
             + OMEGA * pair_product(G, (2, 3), A, (4, 1)))
    e2 = (1j / np.sqrt(2.0)) * cross - e1 / np.sqrt(2.0)
    return TopologicalBasis(e1=e1, e2=e2)


def tl_ketbra(i):
    """T'_i on 4 qutrits as sqrt3 times the sum of the three pair projectors.

    The projectors act on sites (i, i+1) and are tensored with identity on
    the remaining two sites; equals the stencil-built tl_localized(4, i).
    """
    if i not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {i}")
    proj = np.zeros((9, 9), dtype=complex)
    for kind in PairStateKind:
        v = pair_state(kind, 1, 2, 2)
        proj += np.outer(v, v.conj())
    stencil = SQRT3 * proj
    factors = []
    if i > 1:
        factors.append(identity(3 ** (i - 1)))
    factors.append(stencil)
    if i < 3:
        factors.append(identity(3 ** (3 - i)))
    return kron_all(*factors)


def project_operator(op, basis):
    """Restrict an 81x81 operator to span{e1, e2}.

    Returns the 2x2 matrix <e_a|op|e_b> and the leakage, i.e. the largest
    norm of the component of op|e_b> outside the span.  Leakage below
    tolerance certifies the 2x2 matrix as a faithful representation.
    """
    op = np.asarray(op, dtype=complex)
    vecs = (basis.e1, basis.e2)
    mat = np.array([[np.vdot(va, op @ vb) for vb in vecs] for va in vecs],
                   dtype=complex)
    leakage = 0.0
    for vb in vecs:
        w = op @ vb
        w = w - sum(np.vdot(v, w) * v for v in vecs)
        leakage = max(leakage, float(np.linalg.norm(w)))
    return mat, leakage


def jones_reference(i, kind):
    """Literal 2x2 Jones-representation matrices for the 4-strand system.

    ``kind`` is "tl" for the Temperley-Lieb elements E'_i and "braid" for
    the braid generators B'_i.  These are hard-coded acceptance targets,
    never derived.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {i}")
    if kind == "tl":
        if i in (1, 3):
            return np.array([[SQRT3, 0], [0, 0]], dtype=complex)
        return np.array([[1, np.sqrt(2.0)], [np.sqrt(2.0), 2]],
                        dtype=complex) / SQRT3
    if kind == "braid":
        if i in (1, 3):
            return np.diag(np.array([np.exp(1j * np.pi / 3),
                                     np.exp(-1j * np.pi / 3)], dtype=complex))
        rt2 = np.sqrt(2.0)
        return np.array([[np.exp(-1j * np.pi / 6), 1j * rt2],
                         [1j * rt2, np.exp(1j * np.pi / 6)]],
                        dtype=complex) / SQRT3
    raise ValueError(f'kind must be "tl" or "braid", got {kind!r}')
