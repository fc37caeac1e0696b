import numpy as np
import pytest

from qutritbraid import (PairStateKind, braid_from_tl,
                         jones_reference, pair_product, pair_state,
                         parity_operator, project_operator, tl_ketbra,
                         tl_localized, verify_braid_relation)
from qutritbraid.entanglement import QutritPairState, partial_trace
from qutritbraid.linalg import OMEGA, OMEGA2, SQRT3

A, B, G = PairStateKind.ALPHA, PairStateKind.BETA, PairStateKind.GAMMA


def test_alpha_pair_state_entries():
    v = pair_state(A, 1, 2, 2)
    assert abs(v[0] - 1 / SQRT3) < 1e-15        # |11>
    assert abs(v[5] - OMEGA2 / SQRT3) < 1e-15   # |23>
    assert abs(v[7] - OMEGA / SQRT3) < 1e-15    # |32>
    assert np.count_nonzero(v) == 3


def test_beta_is_swap_symmetric():
    assert np.allclose(pair_state(B, 1, 2, 2), pair_state(B, 2, 1, 2))


def test_alpha_is_not_swap_symmetric():
    assert not np.allclose(pair_state(A, 1, 2, 2), pair_state(A, 2, 1, 2))


def test_pair_state_site_validation():
    with pytest.raises(ValueError):
        pair_state(A, 1, 1, 2)
    with pytest.raises(ValueError):
        pair_state(A, 0, 2, 2)
    with pytest.raises(ValueError):
        pair_product(A, (1, 2), B, (2, 3))


def test_pair_product_brute_force_oracle():
    got = pair_product(G, (4, 1), A, (2, 3))
    coeffs = {A: {(0, 0): 1 / SQRT3, (1, 2): OMEGA2 / SQRT3, (2, 1): OMEGA / SQRT3},
              B: {(0, 1): 1 / SQRT3, (1, 0): 1 / SQRT3, (2, 2): 1 / SQRT3},
              G: {(0, 2): 1 / SQRT3, (1, 1): OMEGA / SQRT3, (2, 0): OMEGA2 / SQRT3}}
    from itertools import product as iproduct
    expected = np.zeros(81, dtype=complex)
    for idx, cfg in enumerate(iproduct(range(3), repeat=4)):
        n1, n2, n3, n4 = cfg
        expected[idx] = (coeffs[G].get((n4, n1), 0.0)
                         * coeffs[A].get((n2, n3), 0.0))
    assert np.linalg.norm(got - expected) < 1e-14
    # configuration (3,1,1,1): gamma_13 on (site4=1, site1=3) x alpha_11
    assert abs(got[2 * 27] - 1 / 3) < 1e-14


def test_pair_states_maximally_entangled():
    for kind in PairStateKind:
        st = QutritPairState(pair_state(kind, 1, 2, 2))
        vals = np.linalg.eigvalsh(partial_trace(st, 1))
        assert np.linalg.norm(vals - 1 / 3) < 1e-10


def test_pair_state_parity_sectors():
    p = parity_operator()
    expected = {A: OMEGA2, B: 1.0 + 0j, G: OMEGA}
    for kind, eig in expected.items():
        v = pair_state(kind, 1, 2, 2)
        assert np.linalg.norm(p @ v - eig * v) < 1e-12


def test_basis_orthonormal(topo_basis):
    e1, e2 = topo_basis.e1, topo_basis.e2
    assert abs(np.vdot(e1, e1) - 1) < 1e-12
    assert abs(np.vdot(e2, e2) - 1) < 1e-12
    assert abs(np.vdot(e1, e2)) < 1e-12


def test_ketbra_equals_stencil_embedding():
    for i in (1, 2, 3):
        assert np.linalg.norm(tl_ketbra(i) - tl_localized(4, i)) < 1e-12


def test_ketbra_is_tl_element():
    t = tl_ketbra(1)
    assert np.linalg.norm(t @ t - SQRT3 * t) < 1e-12


def test_ketbra_far_commutation():
    t1, t3 = tl_ketbra(1), tl_ketbra(3)
    assert np.linalg.norm(t1 @ t3 - t3 @ t1) < 1e-12


def test_ketbra_index_validation():
    with pytest.raises(ValueError):
        tl_ketbra(4)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_jones_reduction_tl(i, topo_basis):
    mat, leak = project_operator(tl_ketbra(i), topo_basis)
    assert leak < 1e-12
    assert np.linalg.norm(mat - jones_reference(i, "tl")) < 1e-12


@pytest.mark.parametrize("i", [1, 2, 3])
def test_jones_reduction_braid(i, topo_basis):
    mat, leak = project_operator(braid_from_tl(tl_ketbra(i)), topo_basis)
    assert leak < 1e-12
    assert np.linalg.norm(mat - jones_reference(i, "braid")) < 1e-12


def test_projected_braid_two_routes_agree(topo_basis):
    # project-then-braid equals braid-then-project
    for i in (1, 2, 3):
        e_mat, _ = project_operator(tl_ketbra(i), topo_basis)
        via_projection = braid_from_tl(e_mat)
        direct, _ = project_operator(braid_from_tl(tl_ketbra(i)), topo_basis)
        assert np.linalg.norm(via_projection - direct) < 1e-12


def test_projected_tl_algebra():
    e1 = jones_reference(1, "tl")
    e2 = jones_reference(2, "tl")
    e3 = jones_reference(3, "tl")
    for e in (e1, e2, e3):
        assert np.linalg.norm(e @ e - SQRT3 * e) < 1e-12
    assert np.linalg.norm(e1 @ e2 @ e1 - e1) < 1e-12
    assert np.linalg.norm(e2 @ e1 @ e2 - e2) < 1e-12
    assert np.linalg.norm(e2 @ e3 @ e2 - e2) < 1e-12


def test_projected_braid_relation():
    b1 = jones_reference(1, "braid")
    b2 = jones_reference(2, "braid")
    b3 = jones_reference(3, "braid")
    assert verify_braid_relation(b1, b2) < 1e-12
    assert np.allclose(b1, b3)


def test_project_identity(topo_basis):
    mat, leak = project_operator(np.eye(81, dtype=complex), topo_basis)
    assert np.linalg.norm(mat - np.eye(2)) < 1e-12
    assert leak < 1e-12


def test_jones_reference_literals():
    assert np.allclose(jones_reference(1, "tl"), [[SQRT3, 0], [0, 0]])
    b2 = jones_reference(2, "braid")
    assert abs(b2[0, 1] - 1j * np.sqrt(2) / SQRT3) < 1e-15
    assert np.allclose(jones_reference(3, "braid"),
                       np.diag([np.exp(1j * np.pi / 3), np.exp(-1j * np.pi / 3)]))
    with pytest.raises(ValueError):
        jones_reference(2, "other")
