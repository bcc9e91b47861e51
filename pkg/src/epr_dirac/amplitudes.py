"""Bispinor amplitude matrices for on-shell momenta.

The central object is the 4x2 matrix ``v(k)`` mapping the two spin labels of a
massive spin-1/2 mode to bispinor components,

    v(k) = 1/(2 sqrt(1 + k0/m)) * [ (I + k^mu sigma_mu / m) sigma_2 ]
                                  [ (I + kpi^mu sigma_mu / m) sigma_2 ]

with ``kpi = (k0, -kvec)``. It satisfies (all verified by the test and
verification suites): ``slash(k) v = m v``, ``vbar v = I``,
``gamma^0 v(k) = v(kpi)``, ``vbar gamma^mu v = (k^mu/m) I``,
``v vbar = (slash(k) + m)/(2m)``, and the covariance law
``v(Lk) = D(A) v(k) R^T`` with ``R`` the Wigner rotation of ``A`` at ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GAMMA, GAMMA5, PAULI, sigma_map
from .errors import EprDiracError
from .lorentz import check_on_shell, parity_flip

__all__ = ["Amplitude", "amplitude_u", "amplitude_v", "amplitude_w", "vbar"]


@dataclass(frozen=True)
class Amplitude:
    """4x2 amplitude matrix together with its on-shell momentum and mass."""

    matrix: np.ndarray
    momentum: np.ndarray
    mass: float


def amplitude_v(k: np.ndarray, m: float = 1.0) -> Amplitude:
    """Amplitude matrix v(k) for an on-shell momentum with positive energy."""
    if m <= 0:
        raise EprDiracError(f"mass must be positive, got {m}")
    k = check_on_shell(k, m)
    norm = 1.0 / (2.0 * np.sqrt(1.0 + k[0] / m))
    s2 = PAULI[2]
    top = (PAULI[0] + sigma_map(k) / m) @ s2
    bottom = (PAULI[0] + sigma_map(parity_flip(k)) / m) @ s2
    return Amplitude(matrix=norm * np.vstack([top, bottom]), momentum=k, mass=m)


def amplitude_u(v: Amplitude) -> np.ndarray:
    """Particle amplitude u(k) = i v(k) sigma_2 (4x2)."""
    return 1j * v.matrix @ PAULI[2]


def amplitude_w(v: Amplitude) -> np.ndarray:
    """Negative-energy partner amplitude gamma^5 v(k) (4x2), satisfying slash(k) w = -m w."""
    return GAMMA5 @ v.matrix


def vbar(v: Amplitude | np.ndarray) -> np.ndarray:
    """Dirac adjoint row form: the 2x4 matrix (v)^dagger gamma^0."""
    matrix = getattr(v, "matrix", v)
    return matrix.conj().T @ GAMMA[0]
