"""Spin correlation evaluators: trace oracle, closed forms, limits, and CHSH.

Two independent routes compute every correlation:

* the first-principles trace oracle :func:`correlate_oracle`, which contracts a
  state kernel ``M`` with Pauli matrices,

      C(a, b) = sum_i w_i Tr[(b.sigma) M_i (a.sigma)^T M_i^dagger]
                / sum_i w_i Tr[M_i M_i^dagger],

  where ``b`` contracts the antiparticle (left) kernel index and ``a`` the
  particle (right) index;
* closed-form expressions for the pseudoscalar-channel and vector-channel
  states, their ultrarelativistic and nonrelativistic limits, and the
  center-of-mass-frame comparison function of Czachor's spin observable.

The two routes are kept strictly separate so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .clifford import PAULI
from .errors import (
    DirectionError,
    EmptyEnsembleError,
    EprDiracError,
    SingularConfigurationError,
    UndefinedLimitError,
    ZeroNormError,
    ZeroStateError,
)
from .lorentz import check_on_shell, minkowski_dot
from .states import EnsembleState

__all__ = [
    "BOUND_SLACK",
    "CorrelationResult",
    "chsh",
    "chsh_max",
    "correlate_oracle",
    "correlation_czachor_cmf",
    "correlation_czachor_ultra",
    "correlation_pseudoscalar_sharp",
    "correlation_triplet_nonrel",
    "correlation_vector_cmf",
    "correlation_vector_ultra",
    "delta_c_pseudoscalar",
    "delta_c_vector",
    "direction",
    "oracle_correlator",
]

BOUND_SLACK = 1e-9


def direction(x: np.ndarray | Sequence[float]) -> np.ndarray:
    """Unit 3-vector from either a raw 3-vector (normalized) or (theta, phi) angles."""
    x = np.asarray(x, dtype=float)
    if x.shape == (2,):
        theta, phi = x
        return np.array(
            [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
        )
    if x.shape == (3,):
        norm = np.linalg.norm(x)
        if norm == 0.0:
            raise DirectionError("cannot normalize the zero vector")
        return x / norm
    raise DirectionError(f"direction needs 2 angles or 3 components, got shape {x.shape}")


def _unit(a: np.ndarray, name: str = "direction") -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape != (3,) or abs(np.linalg.norm(a) - 1.0) > 1e-12:
        raise DirectionError(f"{name} must be a unit 3-vector, got {a}")
    return a


@dataclass(frozen=True)
class CorrelationResult:
    """Correlation value with its numerator/denominator diagnostics.

    ``value = numerator / denominator`` lies in [-1, 1] up to 1e-9 slack for
    every admissible state; the denominator is strictly positive.
    """

    value: float
    numerator: float
    denominator: float

    def __post_init__(self) -> None:
        if not self.denominator > 0:
            raise ZeroNormError(f"correlation denominator must be positive, got {self.denominator}")
        if abs(self.value) > 1.0 + BOUND_SLACK:
            raise EprDiracError(f"correlation value {self.value} is outside [-1, 1]")
        if abs(self.value * self.denominator - self.numerator) > (
            1e-12 * max(1.0, abs(self.numerator))
        ):
            raise EprDiracError(
                "correlation value is not numerator/denominator: "
                f"{self.value} != {self.numerator}/{self.denominator}"
            )


def correlate_oracle(
    state: EnsembleState,
    a: np.ndarray,
    b: np.ndarray,
    mask_a: Sequence[bool] | None = None,
    mask_b: Sequence[bool] | None = None,
) -> CorrelationResult:
    """First-principles correlation of measurements along ``a`` (particle) and ``b`` (antiparticle).

    ``mask_a``/``mask_b`` are per-entry inclusion flags (detector acceptance
    regions on the particle and antiparticle momenta); an entry contributes
    only when both masks admit it. Hermiticity makes the numerator trace real.
    """
    a = _unit(a, "a")
    b = _unit(b, "b")
    n = len(state.entries)
    keep = np.ones(n, dtype=bool)
    if mask_a is not None:
        keep &= np.asarray(mask_a, dtype=bool)
    if mask_b is not None:
        keep &= np.asarray(mask_b, dtype=bool)
    if not keep.any():
        raise EmptyEnsembleError("all ensemble entries are masked out")

    a_sigma_t = (a[0] * PAULI[1] + a[1] * PAULI[2] + a[2] * PAULI[3]).T
    b_sigma = b[0] * PAULI[1] + b[1] * PAULI[2] + b[2] * PAULI[3]
    num = 0.0
    den = 0.0
    for include, (w, kern) in zip(keep, state.entries):
        if not include or w == 0.0:
            continue
        m = kern.matrix
        mh = m.conj().T
        num += w * np.trace(b_sigma @ m @ a_sigma_t @ mh).real
        den += w * np.trace(m @ mh).real
    if not den > 0.0:
        raise ZeroNormError("masked ensemble has zero normalization")
    return CorrelationResult(value=num / den, numerator=num, denominator=den)


def oracle_correlator(
    state: EnsembleState,
    mask_a: Sequence[bool] | None = None,
    mask_b: Sequence[bool] | None = None,
) -> Callable[[np.ndarray, np.ndarray], float]:
    """Close over a state so the oracle can be used as a plain correlator ``f(a, b)``."""

    def corr(a: np.ndarray, b: np.ndarray) -> float:
        return correlate_oracle(state, a, b, mask_a, mask_b).value

    return corr


def correlation_pseudoscalar_sharp(
    k: np.ndarray, p: np.ndarray, m: float, a: np.ndarray, b: np.ndarray
) -> float:
    """Closed-form correlation of the sharp pseudoscalar-channel state.

    With K = kvec x pvec:

        C = -a.b + ( -K.(a x b)
                     + [ (b.pvec) K.(a x kvec) - (a.kvec) K.(b x pvec)
                         + 2 (K x a).(K x b) ] / ((m+k0)(m+p0)) ) / (m^2 + k.p)

    Reduces to ``-a.b`` whenever kvec and pvec are parallel (in particular in
    the center-of-mass frame, p = parity_flip(k)).
    """
    k = check_on_shell(k, m)
    p = check_on_shell(p, m)
    a = _unit(a, "a")
    b = _unit(b, "b")
    kv, pv = k[1:], p[1:]
    big_k = np.cross(kv, pv)
    denom = m * m + minkowski_dot(k, p)
    rest = (m + k[0]) * (m + p[0])
    inner = (
        (b @ pv) * (big_k @ np.cross(a, kv))
        - (a @ kv) * (big_k @ np.cross(b, pv))
        + 2.0 * (np.cross(big_k, a) @ np.cross(big_k, b))
    ) / rest
    return float(-(a @ b) + (-(big_k @ np.cross(a, b)) + inner) / denom)


def correlation_czachor_cmf(
    n: np.ndarray, beta: float, a: np.ndarray, b: np.ndarray
) -> float:
    """Center-of-mass-frame correlation of Czachor's spin observable.

    ``n`` is the particle flight direction and ``beta`` its speed;
    ``x_perp = x - (n.x) n`` denotes components transverse to ``n``.
    """
    if not 0.0 <= beta < 1.0:
        raise EprDiracError(f"speed parameter must satisfy 0 <= beta < 1, got {beta}")
    n = _unit(n, "n")
    a = _unit(a, "a")
    b = _unit(b, "b")
    na, nb = n @ a, n @ b
    a_perp = a - na * n
    b_perp = b - nb * n
    beta2 = beta * beta
    rad_a = np.sqrt(1.0 + beta2 * (na * na - 1.0))
    rad_b = np.sqrt(1.0 + beta2 * (nb * nb - 1.0))
    if rad_a == 0.0 or rad_b == 0.0:
        raise SingularConfigurationError("normalization radical vanished (beta -> 1 with a or b transverse)")
    return float(-((a @ b) - beta2 * (a_perp @ b_perp)) / (rad_a * rad_b))


def correlation_czachor_ultra(n: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    """Ultrarelativistic limit of :func:`correlation_czachor_cmf`: -sign((n.a)(n.b)).

    The limit is undefined when either direction is transverse to ``n``.
    """
    n = _unit(n, "n")
    a = _unit(a, "a")
    b = _unit(b, "b")
    na, nb = n @ a, n @ b
    if na == 0.0 or nb == 0.0:
        raise UndefinedLimitError("limit undefined for measurement directions transverse to n")
    return float(-np.sign(na) * np.sign(nb))


def delta_c_pseudoscalar(
    n: np.ndarray, beta: float, a: np.ndarray, b: np.ndarray
) -> float:
    """Deviation of the Czachor-observable correlation from the momentum-independent -a.b."""
    return correlation_czachor_cmf(n, beta, a, b) + float(np.asarray(a) @ np.asarray(b))


def correlation_vector_cmf(
    k: np.ndarray, m: float, phi: np.ndarray, a: np.ndarray, b: np.ndarray
) -> float:
    """Closed-form correlation of the vector-channel state in the center-of-mass frame.

    ``k`` is the antiparticle momentum (the particle carries its parity flip)
    and ``phi`` the spatial polarization 3-vector (complex allowed). The
    normalization ``D = k0^2 |phi|^2 - |kvec.phi|^2`` is positive for any
    nonzero ``phi`` since k0 > |kvec|.
    """
    k = check_on_shell(k, m)
    a = _unit(a, "a")
    b = _unit(b, "b")
    phi = np.asarray(phi, dtype=complex)
    if phi.shape != (3,):
        raise EprDiracError(f"polarization must be a 3-vector here, got shape {phi.shape}")
    phi2 = float(np.sum(np.abs(phi) ** 2))
    if phi2 == 0.0:
        raise ZeroStateError("polarization vector is identically zero")
    k0, kv = k[0], k[1:]
    k_phi = kv @ phi
    a_phi, b_phi = a @ phi, b @ phi
    ak, bk = a @ kv, b @ kv
    big_d = k0 * k0 * phi2 - abs(k_phi) ** 2
    return float(
        a @ b
        - (k0 * k0 / big_d) * 2.0 * (a_phi * np.conj(b_phi)).real
        - 2.0 * ak * bk * abs(k_phi) ** 2 / ((m + k0) ** 2 * big_d)
        + (k0 / ((m + k0) * big_d))
        * (ak * 2.0 * (b_phi * np.conj(k_phi)).real + bk * 2.0 * (a_phi * np.conj(k_phi)).real)
    )


def correlation_vector_ultra(
    n: np.ndarray, phi: np.ndarray, a: np.ndarray, b: np.ndarray
) -> float:
    """Ultrarelativistic limit of the vector-channel correlation along flight direction n.

    Singular exactly when the polarization is parallel to ``n``
    (``|phi|^2 - |n.phi|^2 <= 1e-12 |phi|^2``).
    """
    n = _unit(n, "n")
    a = _unit(a, "a")
    b = _unit(b, "b")
    phi = np.asarray(phi, dtype=complex)
    phi2 = float(np.sum(np.abs(phi) ** 2))
    if phi2 == 0.0:
        raise ZeroStateError("polarization vector is identically zero")
    n_phi = n @ phi
    big_e = phi2 - abs(n_phi) ** 2
    if big_e <= 1e-12 * phi2:
        raise SingularConfigurationError(
            "limit is singular for polarization parallel to the flight direction"
        )
    a_phi, b_phi = a @ phi, b @ phi
    an, bn = a @ n, b @ n
    return float(
        a @ b
        - (
            2.0 * (a_phi * np.conj(b_phi)).real
            + 2.0 * an * bn * abs(n_phi) ** 2
            - an * 2.0 * (b_phi * np.conj(n_phi)).real
            - bn * 2.0 * (a_phi * np.conj(n_phi)).real
        )
        / big_e
    )


def delta_c_vector(
    n: np.ndarray, phi: np.ndarray, a: np.ndarray, b: np.ndarray
) -> float:
    """Ultrarelativistic deviation -2 (a.n)(b.n) |n.phi|^2 / (|phi|^2 - |n.phi|^2).

    Valid for measurement directions perpendicular to the polarization (where
    the vector-channel correlation would otherwise equal a.b); its range is
    contained in [-2, 2].
    """
    n = _unit(n, "n")
    a = _unit(a, "a")
    b = _unit(b, "b")
    phi = np.asarray(phi, dtype=complex)
    phi_norm = float(np.sqrt(np.sum(np.abs(phi) ** 2)))
    if phi_norm == 0.0:
        raise ZeroStateError("polarization vector is identically zero")
    if abs(a @ phi) > 1e-9 * phi_norm or abs(b @ phi) > 1e-9 * phi_norm:
        raise DirectionError("a and b must be perpendicular to the polarization")
    n_phi = n @ phi
    big_e = phi_norm**2 - abs(n_phi) ** 2
    if big_e <= 1e-12 * phi_norm**2:
        raise SingularConfigurationError(
            "deviation is singular for polarization parallel to the flight direction"
        )
    return float(-2.0 * (a @ n) * (b @ n) * abs(n_phi) ** 2 / big_e)


def correlation_triplet_nonrel(
    phi: np.ndarray, a: np.ndarray, b: np.ndarray
) -> float:
    """Nonrelativistic spin-triplet correlation a.b - [(a.phi)(b.phi*) + (b.phi)(a.phi*)] / |phi|^2."""
    a = _unit(a, "a")
    b = _unit(b, "b")
    phi = np.asarray(phi, dtype=complex)
    phi2 = float(np.sum(np.abs(phi) ** 2))
    if phi2 == 0.0:
        raise ZeroStateError("polarization vector is identically zero")
    a_phi, b_phi = a @ phi, b @ phi
    return float((a @ b) - (a_phi * np.conj(b_phi) + b_phi * np.conj(a_phi)).real / phi2)


Correlator = Callable[[np.ndarray, np.ndarray], float]


def chsh(
    correlator: Correlator,
    a: np.ndarray,
    a_prime: np.ndarray,
    b: np.ndarray,
    b_prime: np.ndarray,
) -> float:
    """CHSH combination |C(a,b) + C(a,b') + C(a',b) - C(a',b')|."""
    return abs(
        correlator(a, b)
        + correlator(a, b_prime)
        + correlator(a_prime, b)
        - correlator(a_prime, b_prime)
    )


def _planar_direction(alpha: float) -> np.ndarray:
    return np.array([np.sin(alpha), 0.0, np.cos(alpha)])


def _spherical_direction(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def _chsh_signed(correlator: Correlator, dirs: tuple) -> float:
    a, a_prime, b, b_prime = dirs
    return (
        correlator(a, b)
        + correlator(a, b_prime)
        + correlator(a_prime, b)
        - correlator(a_prime, b_prime)
    )


def chsh_max(
    correlator: Correlator,
    mode: str = "planar",
    *,
    grid_points: int = 24,
    descent_iters: int = 60,
    seed: int = 0,
) -> tuple[float, tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]:
    """Best CHSH value found by coarse grid search plus coordinate descent.

    ``mode`` is ``planar`` (directions in the x-z plane, one angle each) or
    ``full`` (spherical directions, two angles each). The search is
    deterministic for a fixed configuration; ``seed`` is accepted for
    interface stability and reproducibility bookkeeping.

    Returns ``(value, (a, a_prime, b, b_prime))``.
    """
    if mode not in ("planar", "full"):
        raise EprDiracError(f"mode must be 'planar' or 'full', got {mode!r}")
    if grid_points < 2:
        raise EprDiracError(f"grid needs at least 2 points per angle, got {grid_points}")
    del seed  # the grid + descent path is fully deterministic

    if mode == "planar":
        angles = np.linspace(0.0, 2.0 * np.pi, grid_points, endpoint=False)
        params = [[alpha] for alpha in angles]
        make = lambda prm: _planar_direction(prm[0])
    else:
        thetas = np.linspace(0.0, np.pi, grid_points)
        phis = np.linspace(0.0, 2.0 * np.pi, grid_points, endpoint=False)
        params = [[th, ph] for th in thetas for ph in phis]
        make = lambda prm: _spherical_direction(*prm)

    dirs = [make(prm) for prm in params]
    n_dirs = len(dirs)
    table = np.empty((n_dirs, n_dirs))
    for i, da in enumerate(dirs):
        for j, db in enumerate(dirs):
            table[i, j] = correlator(da, db)

    # CHSH = max over (b, b') of [max_a (C[a,b] + C[a,b']) + max_a' (C[a',b] - C[a',b'])];
    # chunk the b' axis to bound memory for large direction grids.
    m_sum = np.empty((n_dirs, n_dirs))
    m_dif = np.empty((n_dirs, n_dirs))
    arg_sum = np.empty((n_dirs, n_dirs), dtype=int)
    arg_dif = np.empty((n_dirs, n_dirs), dtype=int)
    chunk = max(1, min(n_dirs, (1 << 22) // max(1, n_dirs * n_dirs)))
    for start in range(0, n_dirs, chunk):
        stop = min(start + chunk, n_dirs)
        block_sum = table[:, :, None] + table[:, None, start:stop]
        block_dif = table[:, :, None] - table[:, None, start:stop]
        arg_sum[:, start:stop] = np.argmax(block_sum, axis=0)
        arg_dif[:, start:stop] = np.argmax(block_dif, axis=0)
        m_sum[:, start:stop] = np.max(block_sum, axis=0)
        m_dif[:, start:stop] = np.max(block_dif, axis=0)
    total = m_sum + m_dif
    b_idx, bp_idx = np.unravel_index(np.argmax(total), total.shape)
    a_idx = arg_sum[b_idx, bp_idx]
    ap_idx = arg_dif[b_idx, bp_idx]

    best_params = [list(params[a_idx]), list(params[ap_idx]),
                   list(params[b_idx]), list(params[bp_idx])]
    best = _chsh_signed(correlator, tuple(make(prm) for prm in best_params))

    step = float(angles[1] - angles[0]) if mode == "planar" else float(phis[1] - phis[0])
    n_coords = len(best_params[0])
    for _ in range(descent_iters):
        for d in range(4):
            for c in range(n_coords):
                base = best_params[d][c]
                for trial in (base + step, base - step):
                    best_params[d][c] = trial
                    val = _chsh_signed(correlator, tuple(make(prm) for prm in best_params))
                    if val > best:
                        best = val
                        base = trial
                    best_params[d][c] = base
        step *= 0.65

    final_dirs = tuple(make(prm) for prm in best_params)
    return float(abs(best)), final_dirs
