"""Relativistic spin operator as explicit 4x4 matrices on the bispinor basis.

Built from the momentum-space Pauli-Lubanski matrices

    W0   = -1/2 blockdiag(kvec.sigma, kvec.sigma)
    W_i  = -1/2 blockdiag(k0 sigma_i - i (kvec x sigma)_i,
                          k0 sigma_i + i (kvec x sigma)_i)

via ``S_i = (W_i - k_i/(k0+m) W0) / m``. On the physical subspace spanned by
the columns of the amplitude matrix ``v(k)`` this acts as
``S_i v(k) = v(k) sigma_i^T / 2``, so measured spin components have eigenvalues
+1/2 and -1/2 at every momentum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .amplitudes import amplitude_v, vbar
from .clifford import PAULI
from .errors import DirectionError
from .lorentz import check_on_shell

__all__ = [
    "PauliLubanskiMatrices",
    "SpinMatrices",
    "pauli_lubanski",
    "spin_covariant",
    "spin_matrices",
    "spin_projection_2x2",
    "spin_su2_generators",
]


@dataclass(frozen=True)
class PauliLubanskiMatrices:
    """Time component ``w0`` and spatial triple ``w`` at a fixed on-shell momentum."""

    w0: np.ndarray
    w: tuple[np.ndarray, np.ndarray, np.ndarray]
    momentum: np.ndarray


@dataclass(frozen=True)
class SpinMatrices:
    """Spatial spin-operator triple ``s`` at a fixed on-shell momentum."""

    s: tuple[np.ndarray, np.ndarray, np.ndarray]
    momentum: np.ndarray


def _blockdiag(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = upper
    out[2:, 2:] = lower
    return out


def pauli_lubanski(k: np.ndarray, m: float = 1.0) -> PauliLubanskiMatrices:
    """Pauli-Lubanski matrices W0, W_i at an on-shell momentum."""
    k = check_on_shell(k, m)
    kvec = k[1:]
    k_sigma = kvec[0] * PAULI[1] + kvec[1] * PAULI[2] + kvec[2] * PAULI[3]
    w0 = -0.5 * _blockdiag(k_sigma, k_sigma)

    # (kvec x sigma)_i = eps_{ijl} k_j sigma_l
    cross = (
        kvec[1] * PAULI[3] - kvec[2] * PAULI[2],
        kvec[2] * PAULI[1] - kvec[0] * PAULI[3],
        kvec[0] * PAULI[2] - kvec[1] * PAULI[1],
    )
    w = tuple(
        -0.5 * _blockdiag(k[0] * PAULI[i + 1] - 1j * cross[i], k[0] * PAULI[i + 1] + 1j * cross[i])
        for i in range(3)
    )
    return PauliLubanskiMatrices(w0=w0, w=w, momentum=k)


def spin_matrices(k: np.ndarray, m: float = 1.0) -> SpinMatrices:
    """Spin operator S_i = (W_i - k_i/(k0+m) W0) / m as 4x4 matrices."""
    pl = pauli_lubanski(k, m)
    k = pl.momentum
    s = tuple((pl.w[i] - (k[i + 1] / (k[0] + m)) * pl.w0) / m for i in range(3))
    return SpinMatrices(s=s, momentum=k)


def spin_covariant(k: np.ndarray, m: float = 1.0) -> SpinMatrices:
    """Spin operator assembled on the physical subspace: S_i = v(k) (sigma_i^T/2) vbar(k).

    Agrees with :func:`spin_matrices` after right-multiplication by the
    amplitude matrix (the two constructions are not equal as 4x4 matrices:
    off-subspace components differ).
    """
    v = amplitude_v(k, m)
    vb = vbar(v)
    s = tuple(v.matrix @ (PAULI[i + 1].T / 2.0) @ vb for i in range(3))
    return SpinMatrices(s=s, momentum=v.momentum)


def spin_su2_generators(
    k: np.ndarray, m: float = 1.0
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Effective 2x2 spin generators sigma_i/2 on the spin-label space.

    The raw label-space action of ``S_i`` is ``vbar S_i v = sigma_i^T / 2``
    (labels carry the conjugate representation); the transpose re-expresses the
    generators in the standard convention, where they close as
    ``[s_i, s_j] = i eps_{ijl} s_l``.
    """
    v = amplitude_v(k, m)
    vb = vbar(v)
    sm = spin_matrices(k, m)
    return tuple((vb @ sm.s[i] @ v.matrix).T for i in range(3))


def spin_projection_2x2(k: np.ndarray, a: np.ndarray, m: float = 1.0) -> np.ndarray:
    """Physical-subspace reduction of avec.S for a unit direction (eigenvalues +-1/2)."""
    a = np.asarray(a, dtype=float)
    if a.shape != (3,) or abs(np.linalg.norm(a) - 1.0) > 1e-12:
        raise DirectionError(f"direction {a} is not a unit 3-vector")
    v = amplitude_v(k, m)
    sm = spin_matrices(k, m)
    a_dot_s = a[0] * sm.s[0] + a[1] * sm.s[1] + a[2] * sm.s[2]
    return vbar(v) @ a_dot_s @ v.matrix
