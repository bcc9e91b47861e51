"""Pauli and gamma matrices in the chiral basis, and small Clifford-algebra helpers.

Conventions used throughout the package:

* metric ``g = diag(1, -1, -1, -1)``, Levi-Civita ``eps^{0123} = +1``;
* natural units ``hbar = c = 1``; the particle mass is a free positive
  parameter (default ``1.0``) since every formula depends only on ``k/m``;
* chiral (Weyl) basis: ``gamma(0)`` is block-antidiagonal ``[[0, I], [I, 0]]``,
  ``gamma(i) = [[0, -sigma_i], [sigma_i, 0]]``, ``gamma5() = diag(I, -I)``;
* all matrices are dense complex numpy arrays of shape (2, 2) or (4, 4).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EprDiracError

__all__ = [
    "METRIC",
    "PAULI",
    "GammaLabel",
    "charge_conjugation",
    "clifford_element",
    "feynman_slash",
    "gamma",
    "gamma5",
    "mat_close",
    "max_abs_diff",
    "pauli",
    "sigma_map",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

_ZERO2 = np.zeros((2, 2), dtype=complex)

# gamma^0 = antidiag(I, I); gamma^i = [[0, -sigma_i], [sigma_i, 0]]
GAMMA = np.array(
    [np.block([[_ZERO2, PAULI[0]], [PAULI[0], _ZERO2]])]
    + [np.block([[_ZERO2, -PAULI[i]], [PAULI[i], _ZERO2]]) for i in (1, 2, 3)]
)

GAMMA5 = np.block(
    [[PAULI[0], _ZERO2], [_ZERO2, -PAULI[0]]]
)

# charge conjugation matrix -i gamma^2 gamma^0 = i * blockdiag(sigma_2, -sigma_2)
CHARGE_CONJUGATION = -1j * GAMMA[2] @ GAMMA[0]


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i for i in 0..3 (sigma_0 is the 2x2 identity)."""
    if not 0 <= i <= 3:
        raise IndexError(f"pauli index must be in 0..3, got {i}")
    return PAULI[i].copy()


def gamma(mu: int) -> np.ndarray:
    """Gamma matrix gamma^mu in the chiral basis for mu in 0..3."""
    if not 0 <= mu <= 3:
        raise IndexError(f"gamma index must be in 0..3, got {mu}")
    return GAMMA[mu].copy()


def gamma5() -> np.ndarray:
    """Chirality matrix gamma^5 = diag(I, -I)."""
    return GAMMA5.copy()


def charge_conjugation() -> np.ndarray:
    """Charge conjugation matrix C = -i gamma^2 gamma^0.

    Satisfies C gamma^{mu T} C^{-1} = -gamma^mu for every mu, C^T = -C, and
    C C^dagger = I.
    """
    return CHARGE_CONJUGATION.copy()


_LABEL_KINDS = ("identity", "gamma5", "gamma_mu", "gamma_mu_gamma5", "commutator")


@dataclass(frozen=True)
class GammaLabel:
    """Label selecting one element of the 16-dimensional Clifford-algebra basis.

    ``kind`` is one of ``identity``, ``gamma5``, ``gamma_mu``,
    ``gamma_mu_gamma5``, ``commutator``; ``mu``/``nu`` are Lorentz indices in
    0..3 where the kind requires them (``mu != nu`` for commutators).
    """

    kind: str
    mu: int | None = None
    nu: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _LABEL_KINDS:
            raise EprDiracError(f"unknown Clifford label kind {self.kind!r}")
        needs_mu = self.kind in ("gamma_mu", "gamma_mu_gamma5", "commutator")
        if needs_mu:
            if self.mu is None or not 0 <= self.mu <= 3:
                raise EprDiracError(f"label {self.kind!r} needs mu in 0..3, got {self.mu}")
        elif self.mu is not None:
            raise EprDiracError(f"label {self.kind!r} takes no mu index")
        if self.kind == "commutator":
            if self.nu is None or not 0 <= self.nu <= 3:
                raise EprDiracError(f"commutator label needs nu in 0..3, got {self.nu}")
            if self.nu == self.mu:
                raise EprDiracError("commutator label needs mu != nu")
        elif self.nu is not None:
            raise EprDiracError(f"label {self.kind!r} takes no nu index")


def clifford_element(label: GammaLabel) -> np.ndarray:
    """Concrete 4x4 matrix for a Clifford-basis label."""
    if label.kind == "identity":
        return np.eye(4, dtype=complex)
    if label.kind == "gamma5":
        return gamma5()
    if label.kind == "gamma_mu":
        return gamma(label.mu)
    if label.kind == "gamma_mu_gamma5":
        return GAMMA[label.mu] @ GAMMA5
    # commutator [gamma^mu, gamma^nu]
    g_mu, g_nu = GAMMA[label.mu], GAMMA[label.nu]
    return g_mu @ g_nu - g_nu @ g_mu


def feynman_slash(k: np.ndarray) -> np.ndarray:
    """Contraction k_mu gamma^mu = k0 gamma^0 - kvec . gammavec.

    Accepts complex components, so polarization four-vectors may be slashed.
    """
    k = np.asarray(k)
    return k[0] * GAMMA[0] - k[1] * GAMMA[1] - k[2] * GAMMA[2] - k[3] * GAMMA[3]


def sigma_map(k: np.ndarray) -> np.ndarray:
    """Hermitian-matrix image of a four-vector: k^mu sigma_mu = k0 I + kvec . sigmavec.

    Plain index contraction (no metric); hermitian for real k.
    """
    k = np.asarray(k)
    return k[0] * PAULI[0] + k[1] * PAULI[1] + k[2] * PAULI[2] + k[3] * PAULI[3]


def max_abs_diff(x: np.ndarray, y: np.ndarray) -> float:
    """Largest entrywise absolute difference between two arrays."""
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def mat_close(x: np.ndarray, y: np.ndarray, tol: float = 1e-12) -> bool:
    """Entrywise absolute comparison with configurable tolerance (default 1e-12)."""
    return max_abs_diff(x, y) <= tol
