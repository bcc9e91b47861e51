"""Four-vector algebra, SL(2,C) boosts and rotations, the bispinor representation,
and Wigner rotations.

Four-vectors are numpy arrays ``(k0, k1, k2, k3)`` with the metric
``diag(1, -1, -1, -1)``. SL(2,C) elements are 2x2 complex matrices with unit
determinant; ``sl2_to_lorentz`` realizes the two-to-one covering map onto
proper orthochronous Lorentz matrices.
"""

from __future__ import annotations

import numpy as np

from .clifford import GAMMA, PAULI, sigma_map
from .errors import DirectionError, EprDiracError, OffShellError, UnimodularError

__all__ = [
    "apply_lorentz",
    "bispinor_rep",
    "boost_sl2",
    "check_on_shell",
    "cmf_momentum",
    "inv_sl2",
    "minkowski_dot",
    "on_shell_energy",
    "on_shell_momentum",
    "parity_flip",
    "rotation_sl2",
    "sl2_to_lorentz",
    "standard_boost_sl2",
    "wigner_rotation",
]

ON_SHELL_TOL = 1e-9
SL2_DET_TOL = 1e-12


def minkowski_dot(k: np.ndarray, p: np.ndarray):
    """Minkowski inner product k0 p0 - kvec . pvec (no complex conjugation)."""
    k = np.asarray(k)
    p = np.asarray(p)
    return k[0] * p[0] - k[1:] @ p[1:]


def parity_flip(k: np.ndarray) -> np.ndarray:
    """Spatial reflection (k0, kvec) -> (k0, -kvec)."""
    k = np.asarray(k)
    return np.concatenate(([k[0]], -k[1:]))


def on_shell_energy(kvec: np.ndarray, m: float = 1.0) -> float:
    """Positive energy sqrt(m^2 + |kvec|^2)."""
    kvec = np.asarray(kvec, dtype=float)
    return float(np.sqrt(m * m + kvec @ kvec))


def on_shell_momentum(kvec: np.ndarray, m: float = 1.0) -> np.ndarray:
    """Four-momentum with the energy recomputed from the spatial part (recommended constructor)."""
    kvec = np.asarray(kvec, dtype=float)
    return np.concatenate(([on_shell_energy(kvec, m)], kvec))


def check_on_shell(k: np.ndarray, m: float = 1.0, tol: float = ON_SHELL_TOL) -> np.ndarray:
    """Validate |k0 - sqrt(m^2+|kvec|^2)| <= tol * max(1, k0) and k0 > 0.

    Returns k as a float array; raises :class:`OffShellError` otherwise.
    """
    k = np.asarray(k, dtype=float)
    if k.shape != (4,):
        raise OffShellError(f"four-momentum must have shape (4,), got {k.shape}")
    if m <= 0:
        raise EprDiracError(f"mass must be positive, got {m}")
    e = on_shell_energy(k[1:], m)
    if k[0] <= 0 or abs(k[0] - e) > tol * max(1.0, abs(k[0])):
        raise OffShellError(
            f"momentum {k} is off shell for mass {m}: expected energy {e}"
        )
    return k


def standard_boost_sl2(k: np.ndarray, m: float = 1.0) -> np.ndarray:
    """Rotation-free boost taking (m, 0, 0, 0) to the on-shell momentum k.

    Returned as the positive hermitian SL(2,C) matrix
    ``(m I + k^mu sigma_mu) / sqrt(2 m (m + k0))``; it satisfies
    ``A (m I) A^dagger = k^mu sigma_mu`` and ``det A = 1``.
    """
    k = check_on_shell(k, m)
    return (m * PAULI[0] + sigma_map(k)) / np.sqrt(2.0 * m * (m + k[0]))


def _check_sl2(a: np.ndarray, tol: float = SL2_DET_TOL) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.shape != (2, 2):
        raise UnimodularError(f"SL(2,C) element must be 2x2, got {a.shape}")
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if abs(det - 1.0) > tol:
        raise UnimodularError(f"matrix determinant {det} is not 1 within {tol}")
    return a


def inv_sl2(a: np.ndarray) -> np.ndarray:
    """Inverse of a unit-determinant 2x2 matrix via the adjugate (no inversion error)."""
    a = _check_sl2(a)
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=complex)


def sl2_to_lorentz(a: np.ndarray) -> np.ndarray:
    """Lorentz matrix of an SL(2,C) element: L^mu_nu = Tr[sigma_mu A sigma_nu A^dagger] / 2.

    Satisfies ``sigma_map(L k) = A sigma_map(k) A^dagger`` for every four-vector k.
    """
    a = _check_sl2(a)
    lam = 0.5 * np.einsum("mab,bc,ncd,da->mn", PAULI, a, PAULI, a.conj().T)
    return lam.real


def bispinor_rep(a: np.ndarray) -> np.ndarray:
    """Chiral bispinor representation blockdiag(A, (A^dagger)^{-1}) of an SL(2,C) element."""
    a = _check_sl2(a)
    lower = inv_sl2(a).conj().T
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = a
    out[2:, 2:] = lower
    return out


def apply_lorentz(lam: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Matrix-vector action of a Lorentz matrix on a four-vector."""
    return np.asarray(lam) @ np.asarray(k)


def wigner_rotation(a: np.ndarray, k: np.ndarray, m: float = 1.0) -> np.ndarray:
    """SU(2) rotation mixing spin labels when A acts at on-shell momentum k.

    Computed as ``B(Lk)^{-1} A B(k)`` with ``B`` the standard boost; unitary
    with unit determinant.
    """
    a = _check_sl2(a)
    k = check_on_shell(k, m)
    lk = apply_lorentz(sl2_to_lorentz(a), k)
    return inv_sl2(standard_boost_sl2(lk, m)) @ a @ standard_boost_sl2(k, m)


def boost_sl2(n: np.ndarray, rapidity: float) -> np.ndarray:
    """Pure boost along unit direction n with the given rapidity, as an SL(2,C) matrix."""
    n = _check_unit3(n)
    half = 0.5 * rapidity
    return np.cosh(half) * PAULI[0] + np.sinh(half) * (
        n[0] * PAULI[1] + n[1] * PAULI[2] + n[2] * PAULI[3]
    )


def rotation_sl2(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rotation by ``angle`` about a unit axis, as the SU(2) matrix exp(-i angle axis.sigma/2)."""
    axis = _check_unit3(axis)
    half = 0.5 * angle
    return np.cos(half) * PAULI[0] - 1j * np.sin(half) * (
        axis[0] * PAULI[1] + axis[1] * PAULI[2] + axis[2] * PAULI[3]
    )


def cmf_momentum(beta: float, n: np.ndarray, m: float = 1.0) -> np.ndarray:
    """On-shell momentum of speed beta along unit direction n: k0 = m/sqrt(1-beta^2).

    In the center-of-mass frame the partner carries ``parity_flip`` of this.
    """
    if not 0.0 <= beta < 1.0:
        raise EprDiracError(f"speed parameter must satisfy 0 <= beta < 1, got {beta}")
    n = _check_unit3(n)
    k0 = m / np.sqrt(1.0 - beta * beta)
    return np.concatenate(([k0], beta * k0 * n))


def _check_unit3(n: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise DirectionError(f"direction must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise DirectionError(f"direction {n} is not unit length within {tol}")
    return n


def lorentz_defect(lam: np.ndarray) -> float:
    """Largest entrywise error in L^T g L = g (0 for an exact Lorentz matrix)."""
    g = np.diag([1.0, -1.0, -1.0, -1.0])
    return float(np.max(np.abs(lam.T @ g @ lam - g)))


# gamma-matrix vector transformation law helper used by the verification suite:
# D(A)^{-1} gamma^mu D(A) = L^mu_nu gamma^nu
def bispinor_vector_defect(a: np.ndarray) -> float:
    """Largest error in the gamma-matrix transformation law for one SL(2,C) element."""
    d = bispinor_rep(a)
    d_inv = np.zeros((4, 4), dtype=complex)
    d_inv[:2, :2] = inv_sl2(a)
    d_inv[2:, 2:] = a.conj().T
    lam = sl2_to_lorentz(a)
    worst = 0.0
    for mu in range(4):
        lhs = d_inv @ GAMMA[mu] @ d
        rhs = np.tensordot(lam[mu], GAMMA, axes=(0, 0))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst
