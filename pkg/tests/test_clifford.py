"""Algebraic ground truth for the gamma-matrix layer.

Every identity here is exact in exact arithmetic; tolerances only absorb
floating-point roundoff from the handful of complex multiplies involved.
"""

import numpy as np
import pytest

from epr_dirac import (
    CHARGE_CONJUGATION,
    GAMMA,
    GAMMA5,
    METRIC,
    PAULI,
    EprDiracError,
    GammaLabel,
    clifford_element,
    feynman_slash,
    gamma,
    gamma5,
    pauli,
    sigma_map,
)

I2 = np.eye(2)
I4 = np.eye(4)


def test_metric_signature():
    np.testing.assert_array_equal(METRIC, np.diag([1.0, -1.0, -1.0, -1.0]))


def test_pauli_algebra():
    """sigma_i sigma_j = delta_ij I + i eps_ijk sigma_k, sigma_0 = I."""
    np.testing.assert_array_equal(PAULI[0], I2)
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k], eps[j, i, k] = 1.0, -1.0
    for i in range(3):
        for j in range(3):
            expected = (i == j) * I2 + 1j * sum(
                eps[i, j, k] * PAULI[k + 1] for k in range(3)
            )
            np.testing.assert_allclose(PAULI[i + 1] @ PAULI[j + 1], expected, atol=1e-15)


def test_pauli_hermitian_traceless():
    for i in range(1, 4):
        np.testing.assert_array_equal(PAULI[i], PAULI[i].conj().T)
        assert abs(np.trace(PAULI[i])) == 0.0


def test_gamma_anticommutator():
    """{gamma_mu, gamma_nu} = 2 g_munu."""
    for mu in range(4):
        for nu in range(4):
            anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
            np.testing.assert_allclose(anti, 2.0 * METRIC[mu, nu] * I4, atol=1e-15)


def test_gamma5_properties():
    """gamma5 = i g0 g1 g2 g3 is diagonal, squares to one, anticommutes."""
    np.testing.assert_allclose(
        GAMMA5, 1j * GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3], atol=1e-15
    )
    np.testing.assert_allclose(GAMMA5, np.diag([1.0, 1.0, -1.0, -1.0]), atol=1e-15)
    np.testing.assert_allclose(GAMMA5 @ GAMMA5, I4, atol=1e-15)
    for mu in range(4):
        np.testing.assert_allclose(
            GAMMA5 @ GAMMA[mu] + GAMMA[mu] @ GAMMA5, np.zeros((4, 4)), atol=1e-15
        )


def test_charge_conjugation_flips_gamma():
    """C gamma_mu C^-1 = -gamma_mu^T, with C = -i g2 g0."""
    np.testing.assert_allclose(CHARGE_CONJUGATION, -1j * GAMMA[2] @ GAMMA[0], atol=1e-15)
    c_inv = np.linalg.inv(CHARGE_CONJUGATION)
    for mu in range(4):
        np.testing.assert_allclose(
            CHARGE_CONJUGATION @ GAMMA[mu] @ c_inv, -GAMMA[mu].T, atol=1e-14
        )


def test_charge_conjugation_block_form():
    block = np.zeros((4, 4), dtype=complex)
    block[:2, :2] = 1j * PAULI[2]
    block[2:, 2:] = -1j * PAULI[2]
    np.testing.assert_allclose(CHARGE_CONJUGATION, block, atol=1e-15)


def test_sigma2_conjugation_flips_pauli():
    """sigma_2 sigma_i^T sigma_2 = -sigma_i for the three traceless generators."""
    s2 = PAULI[2]
    for i in range(1, 4):
        np.testing.assert_allclose(s2 @ PAULI[i].T @ s2, -PAULI[i], atol=1e-15)


def test_accessors_return_copies():
    g = gamma(1)
    g[0, 0] = 99.0
    assert GAMMA[1][0, 0] != 99.0
    s = pauli(2)
    s[0, 0] = 99.0
    assert PAULI[2][0, 0] != 99.0
    gamma5()[0, 0] = 99.0
    assert GAMMA5[0, 0] == 1.0


def test_accessors_reject_bad_indices():
    with pytest.raises(IndexError):
        pauli(4)
    with pytest.raises(IndexError):
        gamma(-1)
    with pytest.raises(IndexError):
        gamma(4)


def test_feynman_slash_squares_to_invariant():
    """slash(k)^2 = (k.k) I for random real and complex four-vectors."""
    rng = np.random.default_rng(11)
    for _ in range(100):
        k = rng.normal(size=4) + 1j * rng.normal(size=4)
        kk = k[0] ** 2 - k[1:] @ k[1:]
        np.testing.assert_allclose(
            feynman_slash(k) @ feynman_slash(k), kk * I4, atol=1e-12
        )


def test_feynman_slash_linear():
    rng = np.random.default_rng(12)
    k, p = rng.normal(size=4), rng.normal(size=4)
    np.testing.assert_allclose(
        feynman_slash(2.0 * k - 0.5 * p),
        2.0 * feynman_slash(k) - 0.5 * feynman_slash(p),
        atol=1e-14,
    )


def test_sigma_map_determinant_is_invariant():
    """det(k0 I + k.sigma) = k.k, the SL(2,C) side of the same invariant."""
    rng = np.random.default_rng(13)
    for _ in range(100):
        k = rng.normal(size=4)
        np.testing.assert_allclose(
            np.linalg.det(sigma_map(k)).real, k[0] ** 2 - k[1:] @ k[1:], atol=1e-12
        )


def test_clifford_element_labels():
    np.testing.assert_array_equal(clifford_element(GammaLabel("identity")), I4)
    np.testing.assert_array_equal(clifford_element(GammaLabel("gamma5")), GAMMA5)
    np.testing.assert_array_equal(
        clifford_element(GammaLabel("gamma_mu", mu=2)), GAMMA[2]
    )
    np.testing.assert_allclose(
        clifford_element(GammaLabel("gamma_mu_gamma5", mu=1)),
        GAMMA[1] @ GAMMA5,
        atol=1e-15,
    )
    np.testing.assert_allclose(
        clifford_element(GammaLabel("commutator", mu=0, nu=3)),
        GAMMA[0] @ GAMMA[3] - GAMMA[3] @ GAMMA[0],
        atol=1e-15,
    )


def test_gamma_label_validation():
    with pytest.raises(EprDiracError):
        GammaLabel("nonsense")
    with pytest.raises(EprDiracError):
        GammaLabel("gamma_mu")  # missing index
    with pytest.raises(EprDiracError):
        GammaLabel("gamma_mu", mu=7)
    with pytest.raises(EprDiracError):
        GammaLabel("identity", mu=0)  # spurious index
    with pytest.raises(EprDiracError):
        GammaLabel("commutator", mu=1, nu=1)  # vanishes identically
