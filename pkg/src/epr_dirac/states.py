"""Two-particle state kernels at sharp momenta, and discrete ensembles of them.

A sharp particle-antiparticle state is represented by the 2x2 coefficient
matrix ``M(k, p) = v^T(k) C G v(p)`` where ``C`` is the charge-conjugation
matrix and ``G`` a Clifford-algebra element: ``gamma^5`` for the parity-odd
(pseudoscalar-channel) state, ``slash(phi)`` with a transverse polarization
``phi`` for the vector-channel state, or any basis element via
:func:`general_kernel`. The LEFT kernel index belongs to the antiparticle and
the RIGHT index to the particle.

Smeared states are finite weighted ensembles of kernels sharing one total
four-momentum; ratios of weighted traces reproduce sharp results exactly for
single-entry ensembles.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .amplitudes import amplitude_v
from .clifford import CHARGE_CONJUGATION, GAMMA5, GammaLabel, clifford_element, feynman_slash
from .errors import (
    EmptyEnsembleError,
    EprDiracError,
    MomentumMismatchError,
    NonTransverseError,
    SingularConfigurationError,
    ZeroNormError,
    ZeroStateError,
)
from .lorentz import minkowski_dot, on_shell_momentum

__all__ = [
    "EnsembleState",
    "StateKernel",
    "ensemble",
    "general_kernel",
    "kernel_norm_trace",
    "load_ensemble_csv",
    "project_transverse",
    "pseudoscalar_kernel",
    "sharp_ensemble",
    "vector_kernel",
]

TRANSVERSALITY_TOL = 1e-9


@dataclass(frozen=True)
class StateKernel:
    """2x2 kernel with the antiparticle momentum k, particle momentum p, and its label.

    ``label`` is the :class:`GammaLabel` that built the kernel, or the
    polarization four-vector for vector-channel kernels.
    """

    matrix: np.ndarray
    k: np.ndarray
    p: np.ndarray
    label: object


@dataclass(frozen=True)
class EnsembleState:
    """Weighted kernels sharing a total four-momentum q = k + p."""

    entries: tuple[tuple[float, StateKernel], ...]
    q: np.ndarray


def kernel_norm_trace(matrix: np.ndarray) -> float:
    """Normalization trace Tr[M M^dagger] (real and non-negative)."""
    return float(np.sum(np.abs(matrix) ** 2))


def _sandwich(k: np.ndarray, p: np.ndarray, middle: np.ndarray, m: float) -> np.ndarray:
    vk = amplitude_v(k, m)
    vp = amplitude_v(p, m)
    return vk.matrix.T @ CHARGE_CONJUGATION @ middle @ vp.matrix


def pseudoscalar_kernel(k: np.ndarray, p: np.ndarray, m: float = 1.0) -> StateKernel:
    """Parity-odd kernel M = v^T(k) C gamma^5 v(p); Tr[M M^dagger] = (m^2 + k.p)/m^2."""
    matrix = _sandwich(k, p, GAMMA5, m)
    return StateKernel(matrix=matrix, k=np.asarray(k, dtype=float),
                       p=np.asarray(p, dtype=float), label=GammaLabel("gamma5"))


def vector_kernel(
    k: np.ndarray,
    p: np.ndarray,
    phi: np.ndarray,
    m: float = 1.0,
    transversality_tol: float = TRANSVERSALITY_TOL,
) -> StateKernel:
    """Vector-channel kernel M = phi_mu v^T(k) C gamma^mu v(p) for transverse phi.

    ``phi`` is a complex four-vector; it must satisfy |q.phi| <= tol |q||phi|
    (Euclidean norms) with q = k + p, otherwise :class:`NonTransverseError` is
    raised. A kernel with vanishing normalization raises :class:`ZeroStateError`.
    """
    phi = np.asarray(phi, dtype=complex)
    if phi.shape != (4,):
        raise EprDiracError(f"polarization must be a four-vector, got shape {phi.shape}")
    k = np.asarray(k, dtype=float)
    p = np.asarray(p, dtype=float)
    q = k + p
    phi_norm = float(np.sqrt(np.sum(np.abs(phi) ** 2)))
    if phi_norm == 0.0:
        raise ZeroStateError("polarization vector is identically zero")
    q_norm = float(np.linalg.norm(q))
    if abs(minkowski_dot(q, phi)) > transversality_tol * q_norm * phi_norm:
        raise NonTransverseError(
            f"polarization is not transverse to the total momentum: q.phi = {minkowski_dot(q, phi)}"
        )
    matrix = _sandwich(k, p, feynman_slash(phi), m)
    if kernel_norm_trace(matrix) < 1e-12 * phi_norm**2:
        raise ZeroStateError("vector kernel has vanishing norm for this polarization")
    return StateKernel(matrix=matrix, k=k, p=p, label=phi)


def general_kernel(
    k: np.ndarray, p: np.ndarray, label: GammaLabel, m: float = 1.0
) -> StateKernel:
    """Kernel M = v^T(k) C G v(p) for any Clifford-basis element G (trace oracle input)."""
    matrix = _sandwich(k, p, clifford_element(label), m)
    return StateKernel(matrix=matrix, k=np.asarray(k, dtype=float),
                       p=np.asarray(p, dtype=float), label=label)


def project_transverse(phi: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Transverse projection phi' = phi - (q.phi / q.q) q (requires q.q != 0)."""
    phi = np.asarray(phi, dtype=complex)
    q = np.asarray(q, dtype=float)
    qq = minkowski_dot(q, q)
    if abs(qq) < 1e-12 * max(1.0, float(q @ q)):
        raise SingularConfigurationError(
            "cannot project transverse to a lightlike or zero total momentum"
        )
    return phi - (minkowski_dot(q, phi) / qq) * q


def ensemble(
    entries: Iterable[tuple[float, StateKernel]],
    q: np.ndarray | None = None,
    tol: float = 1e-9,
) -> EnsembleState:
    """Weighted ensemble of kernels with a common total momentum.

    ``q`` defaults to k+p of the first entry; every entry must match it
    componentwise within ``tol * max(1, |q|)``. Weights must be non-negative
    with at least one positive.
    """
    entries = tuple((float(w), kern) for w, kern in entries)
    if not entries:
        raise EmptyEnsembleError("ensemble needs at least one entry")
    if any(w < 0 for w, _ in entries):
        raise EprDiracError("ensemble weights must be non-negative")
    if all(w == 0 for w, _ in entries):
        raise ZeroNormError("ensemble weights are all zero")
    if q is None:
        q = entries[0][1].k + entries[0][1].p
    q = np.asarray(q, dtype=float)
    scale = max(1.0, float(np.linalg.norm(q)))
    for i, (_, kern) in enumerate(entries):
        if np.max(np.abs(kern.k + kern.p - q)) > tol * scale:
            raise MomentumMismatchError(
                f"entry {i} has total momentum {kern.k + kern.p}, expected {q}"
            )
    return EnsembleState(entries=entries, q=q)


def sharp_ensemble(kernel: StateKernel) -> EnsembleState:
    """Single-entry ensemble representing a sharp-momentum state."""
    return ensemble([(1.0, kernel)])


ENSEMBLE_CSV_HEADER = ["weight", "k1", "k2", "k3", "p1", "p2", "p3"]


def load_ensemble_csv(
    path: str,
    m: float = 1.0,
    kind: str = "pseudoscalar",
    phi: np.ndarray | None = None,
    label: GammaLabel | None = None,
) -> EnsembleState:
    """Read an ensemble from CSV with header ``weight,k1,k2,k3,p1,p2,p3``.

    Energies are recomputed on shell from the spatial momenta and the mass;
    the total momentum is inferred from the first row and enforced on the
    rest. ``kind`` selects the kernel: ``pseudoscalar`` (default), ``vector``
    (requires ``phi``), or ``general`` (requires ``label``).
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyEnsembleError(f"{path} is empty") from None
        if [h.strip() for h in header] != ENSEMBLE_CSV_HEADER:
            raise EprDiracError(
                f"{path} must start with header {','.join(ENSEMBLE_CSV_HEADER)!r}, got {header}"
            )
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 7:
                raise EprDiracError(f"{path}:{lineno}: expected 7 columns, got {len(row)}")
            try:
                rows.append([float(x) for x in row])
            except ValueError as exc:
                raise EprDiracError(f"{path}:{lineno}: {exc}") from None

    def build(kvec: Sequence[float], pvec: Sequence[float]) -> StateKernel:
        k = on_shell_momentum(np.asarray(kvec), m)
        p = on_shell_momentum(np.asarray(pvec), m)
        if kind == "pseudoscalar":
            return pseudoscalar_kernel(k, p, m)
        if kind == "vector":
            if phi is None:
                raise EprDiracError("vector ensembles need a polarization")
            return vector_kernel(k, p, phi, m)
        if kind == "general":
            if label is None:
                raise EprDiracError("general ensembles need a Clifford label")
            return general_kernel(k, p, label, m)
        raise EprDiracError(f"unknown ensemble kind {kind!r}")

    return ensemble((row[0], build(row[1:4], row[4:7])) for row in rows)
