"""Numerical verification of the Z3-parafermion braid representation,
its Yang-Baxterization, qutrit entanglement extrema, and the reduction
to the 2x2 Jones representation on the 4-anyon fusion basis."""

from .linalg import (OMEGA, OMEGA2, SQRT3, adjoint, frobenius_distance,
                     hermitian_eigenvalues, kron, mat_mul)
from .parafermion import ParafermionSet, build_parafermions, verify_parafermion_algebra
from .braid_tl import (TL_STENCIL, TLFamily, TLKind, braid_from_tl,
                       localized_family, nearest_family, tl_localized,
                       tl_nearest, verify_braid_relation, verify_tl_algebra)
from .yangbaxter import YbeTriple, constrained_triple, r_matrix, theta2_of, ybe_residual
from .parity import (SECTORS, SectorDecomposition, parity_operator,
                     reduced_a12, reduced_a23, reorder_unitary, sector_blocks)
from .entanglement import (ExtremaReport, Extremum, QutritPairState,
                           ThetaSample, entropy_schmidt, find_extrema,
                           l1_norm, partial_trace, psi_theta, sweep_theta,
                           von_neumann_entropy)
from .topo import (PairStateKind, TopologicalBasis, build_topological_basis,
                   jones_reference, pair_product, pair_state, project_operator,
                   tl_ketbra)
from .report import AlgebraReport, Check

__version__ = "0.1.0"
